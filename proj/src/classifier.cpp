#include "smoothpoly/classifier.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <sstream>
#include <thread>

#include "smoothpoly/rhs_enum.hpp"

namespace smoothpoly {

namespace {

struct FanJob {
  Fan fan;  // canonical form
  Provenance provenance;
};

struct JobResult {
  std::vector<ClassificationRecord> records;
  std::uint64_t rhs = 0;
  std::uint64_t rejected = 0;
};

JobResult run_job(const FanJob& job, std::size_t max_points) {
  JobResult out;
  const RhsPolytope rhs = build_rhs_polytope(job.fan, max_points);
  const auto bs = enumerate_rhs(rhs, max_points);
  out.rhs = bs.size();
  for (const auto& b : bs) {
    Realization r = realize_and_filter(rhs.standard.fan, b, max_points);
    if (r.status != RealizationStatus::Accepted) {
      ++out.rejected;
      continue;
    }
    ClassificationRecord rec;
    rec.dimension = job.fan.dim;
    CanonicalPolytope c = canonical_form(r.polytope);
    rec.vertices = std::move(c.vertices);
    rec.key = std::move(c.key);
    rec.num_lattice_points = r.lattice_points;
    rec.num_vertices = r.polytope.vertices.size();
    rec.facet_count = job.fan.rays.size();
    rec.provenance = job.provenance;
    rec.provenance.rhs = b;
    out.records.push_back(std::move(rec));
  }
  return out;
}

std::vector<JobResult> run_jobs(const std::vector<FanJob>& jobs, std::size_t max_points, std::size_t threads) {
  std::vector<JobResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < jobs.size(); i = next++) results[i] = run_job(jobs[i], max_points);
  };
  const std::size_t n = std::max<std::size_t>(1, std::min(threads, jobs.size()));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return results;
}

std::string path_text(const std::vector<ConeIndices>& path) {
  std::ostringstream os;
  for (std::size_t i = 0; i < path.size(); ++i) {
    os << (i ? " " : "") << '{';
    for (std::size_t j = 0; j < path[i].size(); ++j) os << (j ? "," : "") << path[i][j];
    os << '}';
  }
  return os.str();
}

nlohmann::ordered_json int_json(const Int& v) {
  // every value in this artifact fits in 64 bits
  return nlohmann::ordered_json(v.convert_to<long long>());
}

nlohmann::ordered_json vector_json(const IntVector& v) {
  auto out = nlohmann::ordered_json::array();
  for (const auto& x : v) out.push_back(int_json(x));
  return out;
}

}  // namespace

void validate(const RunConfig& cfg) {
  if (cfg.dimension != 2 && cfg.dimension != 3) {
    throw Error(ErrorCode::ConfigError, "dimension must be 2 or 3");
  }
  if (cfg.max_points < cfg.dimension + 1) {
    throw Error(ErrorCode::ConfigError, "max-points must be at least dimension + 1");
  }
  if (cfg.dimension == 3 && cfg.max_points > 12 && !cfg.allow_large) {
    throw Error(ErrorCode::ConfigError,
                "dimension 3 is only complete up to 12 lattice points (minimal fans with at most 8 rays)");
  }
  if (cfg.threads == 0) throw Error(ErrorCode::ConfigError, "threads must be positive");
}

std::map<std::size_t, std::size_t> vertex_histogram(std::size_t dim,
                                                    const std::vector<ClassificationRecord>& records) {
  std::map<std::size_t, std::size_t> hist;
  if (records.empty()) return hist;
  std::size_t lo = records.front().num_vertices, hi = lo;
  for (const auto& r : records) {
    lo = std::min(lo, r.num_vertices);
    hi = std::max(hi, r.num_vertices);
  }
  // simple 3-polytopes have an even number of vertices
  const std::size_t step = dim == 3 ? 2 : 1;
  for (std::size_t k = lo; k <= hi; k += step) hist[k] = 0;
  for (const auto& r : records) ++hist[r.num_vertices];
  return hist;
}

ClassificationResult run_classify(const RunConfig& cfg) {
  validate(cfg);
  const std::size_t n = cfg.max_points;
  ClassificationResult result;
  result.dimension = cfg.dimension;
  result.max_points = n;

  std::optional<PolygonStats> stats;
  if (cfg.dimension == 3) stats = run_stats(n, cfg.threads);

  std::map<std::string, FanJob> fans;
  for (const auto& name : seed_names(cfg.dimension)) {
    const Seed seed = make_seed(name, Int(n));
    check_annotations(seed);
    SearchOptions opt;
    opt.max_cones = n;
    opt.stats = stats ? &*stats : nullptr;
    opt.trace = cfg.trace;
    if (cfg.trace) *cfg.trace << "# seed " << name << '\n';
    SearchResult sr = enumerate_blowups(root_node(seed), opt);
    result.diagnostics.nodes_visited += sr.nodes_visited;
    for (const auto& node : sr.candidates) {
      for (auto& inst : instantiate_admissible(node, n)) {
        Fan canon = fan_canonical_form(inst.fan);
        Provenance prov{name, node.path, std::move(inst.values), {}};
        const std::string key = fan_key(canon);
        auto it = fans.find(key);
        if (it == fans.end()) {
          fans.emplace(key, FanJob{std::move(canon), std::move(prov)});
        } else if (prov < it->second.provenance) {
          it->second.provenance = std::move(prov);
        }
      }
    }
  }
  std::vector<FanJob> jobs;
  jobs.reserve(fans.size());
  for (auto& [k, job] : fans) jobs.push_back(std::move(job));
  result.diagnostics.fans_tested = jobs.size();

  std::vector<ClassificationRecord> all;
  for (auto& jr : run_jobs(jobs, n, cfg.threads)) {
    result.diagnostics.rhs_enumerated += jr.rhs;
    result.diagnostics.realizations_rejected += jr.rejected;
    for (auto& r : jr.records) all.push_back(std::move(r));
  }
  result.records = dedup(std::move(all));
  result.histogram = vertex_histogram(cfg.dimension, result.records);
  return result;
}

std::uint64_t run_count_tree(const std::string& seed, std::size_t max_cones, bool pruned) {
  const Seed s = make_seed(seed, Int(max_cones));
  return count_tree(root_node(s), max_cones, pruned);
}

PolygonStats run_stats(std::size_t max_points, std::size_t threads) {
  RunConfig cfg;
  cfg.dimension = 2;
  cfg.max_points = max_points;
  cfg.threads = threads;
  const auto result = run_classify(cfg);
  std::vector<LatticePolytope> polygons;
  for (const auto& r : result.records) polygons.push_back({2, r.vertices});
  return polygon_stats(polygons, max_points);
}

std::string render_stats(const PolygonStats& stats) {
  std::ostringstream os;
  const std::string absent_l = ">" + std::to_string(stats.max_points);
  auto cell = [](const std::string& s) {
    std::string out(std::max<std::size_t>(5, s.size() + 1) - s.size(), ' ');
    return out + s;
  };
  os << "k   ";
  for (std::size_t k = 3; k <= 8; ++k) os << cell(std::to_string(k));
  os << '\n';
  for (char row : {'l', 'i', 'b'}) {
    os << row << "   ";
    for (std::size_t k = 3; k <= 8; ++k) {
      auto e = stats.at(k);
      if (!e) {
        os << cell(row == 'l' ? absent_l : "-");
        continue;
      }
      const std::size_t v = row == 'l' ? e->l : row == 'i' ? e->i : e->b;
      os << cell(std::to_string(v));
    }
    os << '\n';
  }
  return os.str();
}

std::string render_seeds(std::size_t max_points, const PolygonStats& stats) {
  std::ostringstream os;
  for (std::size_t dim : {2u, 3u}) {
    for (const auto& name : seed_names(dim)) {
      const Seed s = make_seed(name, Int(max_points));
      os << name << "  (dimension " << dim << ", " << s.fan.rays.size() << " rays, " << s.fan.cones.size()
         << " cones)\n";
      os << "  rays:";
      for (std::size_t r = 0; r < s.fan.rays.size(); ++r) {
        os << ' ' << s.ray_names[r] << "=(";
        for (std::size_t i = 0; i < s.fan.rays[r].size(); ++i) os << (i ? "," : "") << s.fan.rays[r][i].str();
        os << ')';
      }
      os << "\n  cones:";
      for (const auto& c : s.fan.cones) {
        os << " {";
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << s.ray_names[c[i]];
        os << '}';
      }
      os << "\n  parameters:";
      if (s.fan.bounds.empty()) os << " none";
      for (const auto& [p, b] : s.fan.bounds) {
        os << ' ' << p << " in [" << b.lower << ", " << b.upper << ']';
        auto ex = s.fan.excluded.find(p);
        if (ex != s.fan.excluded.end()) {
          for (const auto& v : ex->second) os << ", " << p << " != " << v;
        }
      }
      os << '\n';
    }
  }
  os << "\nexcluded minimal fans (dimension 3):\n";
  for (const auto& f : excluded_fans()) {
    const auto crit = polygon_criterion(f.profile, stats);
    os << "  " << f.name << "  " << f.cone_count() << " cones, criterion bound ";
    if (crit.bound) {
      os << *crit.bound;
    } else {
      os << "undefined";
    }
    os << "; " << f.reason << '\n';
  }
  return os.str();
}

nlohmann::ordered_json to_json(const ClassificationResult& result) {
  using json = nlohmann::ordered_json;
  json out;
  out["dimension"] = result.dimension;
  out["max_points"] = result.max_points;
  json records = json::array();
  for (const auto& r : result.records) {
    json rec;
    rec["num_lattice_points"] = r.num_lattice_points;
    rec["num_vertices"] = r.num_vertices;
    rec["facet_count"] = r.facet_count;
    json verts = json::array();
    for (const auto& v : r.vertices) verts.push_back(vector_json(v));
    rec["vertices"] = std::move(verts);
    json prov;
    prov["seed"] = r.provenance.seed;
    json path = json::array();
    for (const auto& t : r.provenance.path) path.push_back(t);
    prov["blowups"] = std::move(path);
    json values = json::object();
    for (const auto& [k, v] : r.provenance.values) values[k] = int_json(v);
    prov["parameters"] = std::move(values);
    prov["rhs"] = vector_json(r.provenance.rhs);
    rec["provenance"] = std::move(prov);
    records.push_back(std::move(rec));
  }
  out["records"] = std::move(records);
  json hist = json::object();
  for (const auto& [k, v] : result.histogram) hist[std::to_string(k)] = v;
  out["histogram"] = std::move(hist);
  out["diagnostics"] = {{"nodes_visited", result.diagnostics.nodes_visited},
                        {"fans_tested", result.diagnostics.fans_tested},
                        {"rhs_enumerated", result.diagnostics.rhs_enumerated},
                        {"realizations_rejected", result.diagnostics.realizations_rejected}};
  return out;
}

std::string to_text(const ClassificationResult& result) {
  std::ostringstream os;
  const char* noun = result.dimension == 2 ? "polygons" : "polytopes";
  os << "smooth lattice " << noun << " of dimension " << result.dimension << " with at most "
     << result.max_points << " lattice points: " << result.records.size() << "\n\n";
  os << "vertices  " << noun << '\n';
  for (const auto& [k, v] : result.histogram) {
    std::string a = std::to_string(k), b = std::to_string(v);
    os << std::string(8 - std::min<std::size_t>(8, a.size()), ' ') << a << "  "
       << std::string(std::max<std::size_t>(std::string(noun).size(), b.size()) - b.size(), ' ') << b << '\n';
  }
  os << "\n  #  points  vertices  vertex list\n";
  std::size_t i = 0;
  for (const auto& r : result.records) {
    std::string idx = std::to_string(++i), pts = std::to_string(r.num_lattice_points),
                nv = std::to_string(r.num_vertices);
    os << std::string(3 - std::min<std::size_t>(3, idx.size()), ' ') << idx << "  "
       << std::string(6 - std::min<std::size_t>(6, pts.size()), ' ') << pts << "  "
       << std::string(8 - std::min<std::size_t>(8, nv.size()), ' ') << nv << "  ";
    for (const auto& v : r.vertices) os << to_string(v);
    os << "  [" << r.provenance.seed;
    if (!r.provenance.path.empty()) os << ' ' << path_text(r.provenance.path);
    for (const auto& [k, v] : r.provenance.values) os << ' ' << k << '=' << v;
    os << "]\n";
  }
  os << "\nnodes visited " << result.diagnostics.nodes_visited << ", fans tested "
     << result.diagnostics.fans_tested << ", right-hand sides " << result.diagnostics.rhs_enumerated
     << ", rejected realizations " << result.diagnostics.realizations_rejected << '\n';
  return os.str();
}

}  // namespace smoothpoly
