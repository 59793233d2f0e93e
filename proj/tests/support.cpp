#include "support.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "smoothpoly/rhs_enum.hpp"

#ifndef SMOOTHPOLY_TEST_DATA
#error "SMOOTHPOLY_TEST_DATA must point at tests/data"
#endif

namespace smoothpoly::testing {

namespace {

std::string show(const LatticePolytope& p) {
  std::string s;
  for (const auto& v : p.vertices) s += to_string(v);
  return s;
}

// Outward primitive edge directions at vertex v.
std::set<IntVector> directions_at(const std::vector<EdgeData>& edges, std::size_t v) {
  std::set<IntVector> out;
  for (const auto& e : edges) {
    if (e.endpoints.first == v) out.insert(e.direction);
    if (e.endpoints.second == v) out.insert(negate(e.direction));
  }
  return out;
}

// Everything the edge checks need about one wall of the normal fan.
struct EdgeFrame {
  Wall wall;
  IntVector coeffs;    // edge parameters a_i
  const EdgeData* edge = nullptr;
  IntVector x1, x2;
  std::vector<IntVector> u;  // edge directions at x1, u[d-1] along the edge
};

struct PolytopeFrame {
  Fan fan;
  IntVector b;  // right-hand side per ray of fan
  std::vector<EdgeData> edges;
  std::vector<EdgeFrame> frames;
};

PolytopeFrame frame_of(const LatticePolytope& p, Failures& fail) {
  PolytopeFrame pf;
  pf.fan = normal_fan(p);
  const HPolytope h = to_hpolytope(p);
  std::map<IntVector, Int> rhs;
  for (std::size_t i = 0; i < h.a.size(); ++i) rhs[h.a[i]] = h.b[i];
  for (const auto& r : pf.fan.rays) pf.b.push_back(rhs.at(r));
  pf.edges = edges_of(p);
  for (const auto& w : walls_of(pf.fan)) {
    EdgeFrame ef;
    ef.wall = w;
    ef.coeffs = edge_parameters(pf.fan, w).coeffs;
    const auto lo = static_cast<std::size_t>(std::min(w.incident[0], w.incident[1]));
    const auto hi = static_cast<std::size_t>(std::max(w.incident[0], w.incident[1]));
    for (const auto& e : pf.edges) {
      if (e.endpoints == std::pair{lo, hi}) ef.edge = &e;
    }
    if (!ef.edge) {
      fail.push_back(show(p) + ": no edge dual to wall " + std::to_string(lo) + "/" + std::to_string(hi));
      continue;
    }
    ef.x1 = p.vertices[static_cast<std::size_t>(w.incident[0])];
    ef.x2 = p.vertices[static_cast<std::size_t>(w.incident[1])];
    IntMatrix inner;
    for (int r : w.rays) inner.push_back(negate(pf.fan.rays[static_cast<std::size_t>(r)]));
    inner.push_back(negate(pf.fan.rays[static_cast<std::size_t>(w.opposite[0])]));
    const IntMatrix cols = transpose(inverse_unimodular(inner));
    ef.u.assign(cols.begin(), cols.end());
    pf.frames.push_back(std::move(ef));
  }
  return pf;
}

}  // namespace

std::vector<LatticePolytope> load_golden(const std::string& file_name) {
  std::ifstream in(std::string(SMOOTHPOLY_TEST_DATA) + "/" + file_name);
  if (!in) throw std::runtime_error("cannot open golden file " + file_name);
  const std::regex point(R"(\(([-0-9,]+)\))");
  std::vector<LatticePolytope> out;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<IntVector> pts;
    for (std::sregex_iterator it(line.begin(), line.end(), point), end; it != end; ++it) {
      IntVector v;
      std::stringstream ss((*it)[1].str());
      std::string item;
      while (std::getline(ss, item, ',')) v.emplace_back(std::stoll(item));
      pts.push_back(std::move(v));
    }
    if (pts.empty()) continue;
    out.push_back(convex_hull(pts[0].size(), pts));
  }
  return out;
}

LatticePolytope polytope_of(const ClassificationRecord& r) {
  LatticePolytope p{r.dimension, r.vertices};
  std::sort(p.vertices.begin(), p.vertices.end());
  return p;
}

std::vector<LatticePolytope> polytopes_of(const std::vector<ClassificationRecord>& records) {
  std::vector<LatticePolytope> out;
  for (const auto& r : records) out.push_back(polytope_of(r));
  return out;
}

IntMatrix random_unimodular(std::size_t dim, std::mt19937& rng) {
  IntMatrix m = identity_matrix(dim);
  std::uniform_int_distribution<std::size_t> row(0, dim - 1);
  std::uniform_int_distribution<int> op(0, 3), factor(-2, 2);
  for (int step = 0; step < 8; ++step) {
    const std::size_t i = row(rng), j = row(rng);
    switch (op(rng)) {
      case 0:
        std::swap(m[i], m[j]);
        break;
      case 1:
        m[i] = negate(m[i]);
        break;
      default:
        if (i != j) m[i] = add(m[i], scale(m[j], Int(factor(rng))));
        break;
    }
  }
  return m;
}

LatticePolytope transform(const LatticePolytope& p, const IntMatrix& u, const IntVector& t) {
  LatticePolytope q{p.dim, {}};
  for (const auto& v : p.vertices) q.vertices.push_back(add(smoothpoly::apply(u, v), t));
  std::sort(q.vertices.begin(), q.vertices.end());
  return q;
}

std::vector<LatticePolytope> non_smooth_corpus(std::size_t count, std::mt19937& rng) {
  std::vector<LatticePolytope> out;
  std::set<std::vector<IntVector>> seen;
  std::uniform_int_distribution<int> coord(0, 3), size(4, 7);
  while (out.size() < count) {
    const std::size_t dim = out.size() % 2 == 0 ? 2 : 3;
    std::vector<IntVector> pts(static_cast<std::size_t>(size(rng)));
    for (auto& v : pts) {
      for (std::size_t k = 0; k < dim; ++k) v.emplace_back(coord(rng));
    }
    LatticePolytope p;
    try {
      p = convex_hull(dim, pts);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::NotFullDim) continue;
      throw;
    }
    if (is_smooth(p).smooth || !seen.insert(p.vertices).second) continue;
    out.push_back(std::move(p));
  }
  return out;
}

Failures check_duality(const std::vector<LatticePolytope>& smooth,
                       const std::vector<LatticePolytope>& non_smooth) {
  Failures fail;
  auto run = [&](const std::vector<LatticePolytope>& corpus, bool expected) {
    for (const auto& p : corpus) {
      const bool poly = is_smooth(p).smooth;
      const bool fan = is_smooth_fan(normal_fan(p)).smooth;
      if (poly != expected || fan != expected) {
        fail.push_back(show(p) + ": polytope " + std::to_string(poly) + ", fan " + std::to_string(fan));
      }
    }
  };
  run(smooth, true);
  run(non_smooth, false);
  return fail;
}

Failures check_edge_lengths(const LatticePolytope& p) {
  Failures fail;
  const auto pf = frame_of(p, fail);
  for (const auto& ef : pf.frames) {
    const Int l = edge_length_form(pf.fan, ef.wall).evaluate(pf.b);
    if (l != ef.edge->lattice_length) {
      fail.push_back(show(p) + ": form gives " + l.str() + ", edge has " + ef.edge->lattice_length.str());
    }
  }
  return fail;
}

Failures check_thickened_edges(const LatticePolytope& p) {
  Failures fail;
  const std::size_t d = p.dim;
  const auto pf = frame_of(p, fail);
  for (const auto& ef : pf.frames) {
    const Int& l = ef.edge->lattice_length;
    const IntVector& ud = ef.u[d - 1];
    std::vector<IntVector> pts{ef.x1, ef.x2};
    Int expected = Int(d) * (l + 1);
    for (std::size_t i = 0; i + 1 < d; ++i) {
      pts.push_back(add(ef.x1, ef.u[i]));
      pts.push_back(add(ef.x2, add(ef.u[i], scale(ud, ef.coeffs[i]))));
      expected += ef.coeffs[i];
    }
    const auto count = lattice_points(facets_of(d, pts)).size();
    if (Int(count) != expected) {
      fail.push_back(show(p) + ": thickened edge has " + std::to_string(count) + " points, expected " +
                     expected.str());
    }
  }
  return fail;
}

Failures check_edge_transfer(const LatticePolytope& p) {
  Failures fail;
  const std::size_t d = p.dim;
  const auto pf = frame_of(p, fail);
  for (const auto& ef : pf.frames) {
    const IntVector& ud = ef.u[d - 1];
    if (add(ef.x1, scale(ud, ef.edge->lattice_length)) != ef.x2) {
      fail.push_back(show(p) + ": x2 != x1 + l u_d");
    }
    std::set<IntVector> at1(ef.u.begin(), ef.u.end());
    std::set<IntVector> at2{negate(ud)};
    for (std::size_t i = 0; i + 1 < d; ++i) at2.insert(add(ef.u[i], scale(ud, ef.coeffs[i])));
    const auto w0 = static_cast<std::size_t>(ef.wall.incident[0]);
    const auto w1 = static_cast<std::size_t>(ef.wall.incident[1]);
    if (directions_at(pf.edges, w0) != at1) fail.push_back(show(p) + ": directions at x1 differ");
    if (directions_at(pf.edges, w1) != at2) fail.push_back(show(p) + ": directions at x2 differ");
  }
  return fail;
}

Failures check_search_equivalence(std::size_t dim, std::size_t max_cones, std::size_t max_points) {
  Failures fail;
  for (const auto& name : seed_names(dim)) {
    const auto root = root_node(make_seed(name, Int(max_points)));
    std::set<std::string> keys[2];
    for (int pruned = 0; pruned < 2; ++pruned) {
      SearchOptions opts;
      opts.max_cones = max_cones;
      opts.pruned = pruned == 1;
      for (const auto& node : enumerate_blowups(root, opts).candidates) {
        for (const auto& fan : instantiate_all(node)) keys[pruned].insert(fan_key(fan));
      }
    }
    if (keys[0] != keys[1]) {
      fail.push_back(name + ": " + std::to_string(keys[1].size()) + " fans pruned, " +
                     std::to_string(keys[0].size()) + " exhaustive");
    }
  }
  return fail;
}

Failures check_canonical_invariance(const LatticePolytope& p, std::size_t trials, std::mt19937& rng) {
  Failures fail;
  const auto key = canonical_form(p).key;
  std::uniform_int_distribution<int> shift(-5, 5);
  for (std::size_t k = 0; k < trials; ++k) {
    const IntMatrix u = random_unimodular(p.dim, rng);
    IntVector t;
    for (std::size_t i = 0; i < p.dim; ++i) t.emplace_back(shift(rng));
    const auto q = transform(p, u, t);
    if (canonical_form(q).key != key) {
      fail.push_back(show(p) + ": key changes under " + to_string(u));
      break;
    }
  }
  return fail;
}

Failures check_dedup_idempotent(const std::vector<ClassificationRecord>& records) {
  Failures fail;
  auto keys = [](const std::vector<ClassificationRecord>& rs) {
    std::vector<std::pair<std::string, Provenance>> out;
    for (const auto& r : rs) out.emplace_back(r.key, r.provenance);
    return out;
  };
  const auto once = dedup(records);
  if (keys(dedup(once)) != keys(once)) fail.push_back("dedup(dedup(x)) != dedup(x)");
  auto doubled = records;
  doubled.insert(doubled.end(), records.begin(), records.end());
  std::reverse(doubled.begin(), doubled.end());
  if (keys(dedup(doubled)) != keys(once)) fail.push_back("dedup of duplicated input differs");
  return fail;
}

Failures property_suite(const std::vector<ClassificationRecord>& polygons,
                        const std::vector<ClassificationRecord>& polytopes) {
  Failures fail;
  auto merge = [&fail](const Failures& f, const std::string& what) {
    for (const auto& s : f) fail.push_back(what + ": " + s);
  };
  std::mt19937 rng(20240611);

  std::vector<LatticePolytope> smooth;
  const auto p2 = polytopes_of(polygons), p3 = polytopes_of(polytopes);
  for (std::size_t k = 0; k < 25 && k < p2.size(); ++k) smooth.push_back(p2[k]);
  for (std::size_t k = 0; k < 25 && k < p3.size(); ++k) smooth.push_back(p3[k]);
  for (std::size_t k = 0; smooth.size() < 50 && !p2.empty(); ++k) {
    const auto& p = p2[k % p2.size()];
    smooth.push_back(transform(p, random_unimodular(2, rng), IntVector(2, Int(1))));
  }
  merge(check_duality(smooth, non_smooth_corpus(50, rng)), "duality");

  std::vector<LatticePolytope> all = p2;
  all.insert(all.end(), p3.begin(), p3.end());
  for (const auto& p : all) {
    merge(check_edge_lengths(p), "edge length");
    merge(check_thickened_edges(p), "thickened edge");
    merge(check_edge_transfer(p), "edge transfer");
    merge(check_canonical_invariance(p, 100, rng), "canonical form");
  }
  merge(check_search_equivalence(2, 6, 6), "search d=2");
  merge(check_search_equivalence(3, 8, 12), "search d=3");
  merge(check_dedup_idempotent(polygons), "dedup d=2");
  merge(check_dedup_idempotent(polytopes), "dedup d=3");
  return fail;
}

}  // namespace smoothpoly::testing
