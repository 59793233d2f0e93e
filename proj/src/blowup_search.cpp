#include "smoothpoly/blowup_search.hpp"

#include "smoothpoly/rhs_enum.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace smoothpoly {

namespace {

// Cone combinatorics and flags of a search node, without ray data.
struct CombState {
  std::size_t dim = 0;
  int ray_count = 0;
  std::vector<ConeIndices> cones;
  std::vector<ConeFlag> cone_flags;
  std::map<ConeIndices, ConeFlag> wall_flags;
};

bool active(ConeFlag f) { return f == ConeFlag::Consider || f == ConeFlag::AlwaysConsider; }

char flag_code(ConeFlag f) {
  switch (f) {
    case ConeFlag::AlwaysIgnore: return 'X';
    case ConeFlag::Ignore: return 'I';
    case ConeFlag::Consider: return 'C';
    case ConeFlag::AlwaysConsider: return 'A';
  }
  return '?';
}

std::vector<ConeIndices> pairs_of(const ConeIndices& cone) {
  std::vector<ConeIndices> out;
  for (std::size_t i = 0; i < cone.size(); ++i) {
    for (std::size_t j = i + 1; j < cone.size(); ++j) out.push_back({cone[i], cone[j]});
  }
  return out;
}

std::map<ConeIndices, ConeFlag> initial_wall_flags(std::size_t dim, const std::vector<ConeIndices>& cones) {
  std::map<ConeIndices, ConeFlag> out;
  if (dim != 3) return out;
  for (const auto& w : walls_of(dim, cones)) out[w.rays] = ConeFlag::Consider;
  return out;
}

CombState child_state(const CombState& s, const ConeIndices& target) {
  CombState c;
  c.dim = s.dim;
  c.ray_count = s.ray_count + 1;
  const int new_ray = s.ray_count;
  auto sub = subdivide_cones(s.cones, target, new_ray);
  std::vector<ConeIndices> old_replaced;
  for (int i : sub.replaced) old_replaced.push_back(s.cones[i]);
  c.cones = std::move(sub.cones);
  c.cone_flags = s.cone_flags;
  c.cone_flags.resize(c.cones.size(), ConeFlag::Consider);
  for (int i : sub.replaced) c.cone_flags[i] = ConeFlag::Consider;
  if (s.dim != 3) return c;

  for (const auto& w : walls_of(c.dim, c.cones)) {
    auto it = s.wall_flags.find(w.rays);
    c.wall_flags[w.rays] = it == s.wall_flags.end() ? ConeFlag::Consider : it->second;
  }
  if (target.size() == c.dim) {
    // a later blow-up of these walls gives a fan already reached another way
    for (const auto& w : pairs_of(target)) c.wall_flags[w] = ConeFlag::AlwaysIgnore;
  } else {
    for (const auto& cone : old_replaced) {
      for (const auto& w : pairs_of(cone)) {
        if (w == target) continue;
        auto it = c.wall_flags.find(w);
        if (it != c.wall_flags.end() && it->second == ConeFlag::Ignore) it->second = ConeFlag::AlwaysConsider;
      }
    }
  }
  return c;
}

std::size_t cone_growth(std::size_t dim) { return dim == 2 ? 1 : 2; }

// Visits node `s` and its subtree; `on_child` receives each expansion.
struct Traversal {
  std::size_t max_cones;
  bool pruned;

  // Blow-up targets of `s` in visiting order, with the sibling state each
  // child starts from.
  template <class F>
  void for_each_child(const CombState& s, F&& visit) const {
    if (s.cones.size() + cone_growth(s.dim) > max_cones) return;
    CombState work = s;
    for (std::size_t i = 0; i < s.cones.size(); ++i) {
      if (pruned && !active(work.cone_flags[i])) continue;
      const ConeIndices target = s.cones[i];
      visit(work, target);
      work.cone_flags[i] = ConeFlag::Ignore;
    }
    if (s.dim != 3) return;
    for (auto& [w, flag] : work.wall_flags) {
      if (pruned && !active(flag)) continue;
      const ConeIndices target = w;
      visit(work, target);
      if (flag != ConeFlag::AlwaysConsider && flag != ConeFlag::AlwaysIgnore) flag = ConeFlag::Ignore;
    }
  }
};

CombState comb_of(const SearchNode& n) {
  CombState s;
  s.dim = n.fan.dim;
  s.ray_count = static_cast<int>(n.fan.rays.size());
  s.cones = n.fan.cones;
  s.cone_flags = n.cone_flags;
  s.wall_flags = n.wall_flags;
  return s;
}

std::string flags_text(const CombState& s) {
  std::string out;
  for (auto f : s.cone_flags) out += flag_code(f);
  if (!s.wall_flags.empty()) {
    out += '/';
    for (const auto& [w, f] : s.wall_flags) out += flag_code(f);
  }
  return out;
}

std::string target_text(const ConeIndices& t) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? "," : "") + std::to_string(t[i]);
  return out;
}

}  // namespace

std::string_view to_string(ConeFlag f) {
  switch (f) {
    case ConeFlag::AlwaysIgnore: return "always_ignore";
    case ConeFlag::Ignore: return "ignore";
    case ConeFlag::Consider: return "consider";
    case ConeFlag::AlwaysConsider: return "always_consider";
  }
  return "?";
}

SearchNode root_node(const Seed& seed) {
  SearchNode n;
  n.fan = seed.fan;
  n.cone_flags.assign(seed.fan.cones.size(), ConeFlag::Consider);
  n.wall_flags = initial_wall_flags(seed.fan.dim, seed.fan.cones);
  return n;
}

std::optional<PolygonStatsEntry> PolygonStats::at(std::size_t k) const {
  auto it = by_vertices.find(k);
  if (it == by_vertices.end()) return std::nullopt;
  return it->second;
}

PolygonStats polygon_stats(const std::vector<LatticePolytope>& polygons, std::size_t max_points) {
  PolygonStats stats;
  stats.max_points = max_points;
  for (const auto& p : polygons) {
    const HPolytope h = to_hpolytope(p);
    const std::size_t l = lattice_points(h).size();
    if (l > max_points) continue;
    const std::size_t i = interior_lattice_points(h).size();
    const std::size_t k = p.vertices.size();
    auto [it, inserted] = stats.by_vertices.try_emplace(k, PolygonStatsEntry{l, i, l - i});
    if (!inserted) {
      it->second.l = std::min(it->second.l, l);
      it->second.i = std::min(it->second.i, i);
      it->second.b = std::min(it->second.b, l - i);
    }
  }
  return stats;
}

CriterionResult polygon_criterion(const std::vector<std::pair<int, int>>& profile,
                                  const PolygonStats& stats) {
  std::size_t cones = 0;
  std::size_t interior = 0;
  std::size_t k_max = 0;
  for (auto [k, count] : profile) {
    cones += static_cast<std::size_t>(k * count);
    auto e = stats.at(static_cast<std::size_t>(k));
    if (!e) return {false, std::nullopt};
    interior += e->i * static_cast<std::size_t>(count);
    k_max = std::max(k_max, static_cast<std::size_t>(k));
  }
  cones /= 3;
  const std::size_t bound = cones + (stats.at(k_max)->b - k_max) + interior;
  return {bound <= stats.max_points, bound};
}

CriterionResult polygon_criterion(std::size_t ray_count, const std::vector<ConeIndices>& cones,
                                  const PolygonStats& stats) {
  std::vector<int> degree(ray_count, 0);
  for (const auto& c : cones) {
    for (int r : c) ++degree[r];
  }
  std::map<int, int> hist;
  for (int k : degree) ++hist[k];
  return polygon_criterion(std::vector<std::pair<int, int>>(hist.begin(), hist.end()), stats);
}

BoundsMap propagate_bounds(const SearchNode& node, const ConeIndices& target) {
  BoundsMap out = node.fan.bounds;
  if (target.size() == node.fan.dim) {
    for (auto& [name, b] : out) {
      b.lower -= 1;
      b.upper += 1;
    }
  }
  return out;
}

SearchResult enumerate_blowups(const SearchNode& root, const SearchOptions& options) {
  SearchResult result;
  const Traversal tr{options.max_cones, options.pruned};
  const std::size_t dim = root.fan.dim;

  std::function<void(const SearchNode&, const CombState&, std::uint64_t)> visit =
      [&](const SearchNode& node, const CombState& state, std::uint64_t parent) {
        const std::uint64_t id = result.nodes_visited++;
        if (options.trace) {
          *options.trace << id << ' ' << (id == 0 ? std::string("-") : std::to_string(parent)) << ' '
                         << (node.path.empty() ? std::string("-") : target_text(node.path.back())) << ' '
                         << flags_text(state) << '\n';
        }
        if (options.collect) {
          bool keep = true;
          if (dim == 3 && options.stats) {
            keep = polygon_criterion(node.fan.rays.size(), node.fan.cones, *options.stats).passes;
          }
          if (keep) result.candidates.push_back(node);
        }
        tr.for_each_child(state, [&](const CombState& work, const ConeIndices& target) {
          CombState cs = child_state(work, target);
          SearchNode child;
          child.fan = blow_up(node.fan, target);
          child.fan.bounds = propagate_bounds(node, target);
          child.cone_flags = cs.cone_flags;
          child.wall_flags = cs.wall_flags;
          child.path = node.path;
          child.path.push_back(target);
          visit(child, cs, id);
        });
      };
  visit(root, comb_of(root), 0);
  return result;
}

std::uint64_t count_tree(const SearchNode& root, std::size_t max_cones, bool pruned) {
  const Traversal tr{max_cones, pruned};
  std::uint64_t count = 0;
  std::function<void(const CombState&)> visit = [&](const CombState& s) {
    ++count;
    tr.for_each_child(s, [&](const CombState& work, const ConeIndices& target) {
      visit(child_state(work, target));
    });
  };
  visit(comb_of(root));
  return count;
}

bool wall_admissible(const std::vector<Int>& coeffs, std::size_t dim, std::size_t max_points) {
  Int sum = 0;
  for (const auto& a : coeffs) sum += a;
  const Int n = max_points;
  const Int d = dim;
  // 1 <= l(e) <= (N - sum)/d - 1
  if (n - sum < 2 * d) return false;
  const Int l_max = floor_div(n - sum - d, d);
  for (const auto& a : coeffs) {
    if (a < -l_max) return false;
  }
  return true;
}

namespace {

// ParamExpr with variables replaced by positions in the assignment order.
struct CompiledExpr {
  std::vector<std::pair<std::vector<std::size_t>, Int>> terms;
  std::size_t last_var = 0;  // 1 + largest position used, 0 if constant

  CompiledExpr(const ParamExpr& e, const std::vector<std::string>& vars) {
    for (const auto& [mono, c] : e.terms()) {
      std::vector<std::size_t> idx;
      for (const auto& v : mono) {
        const auto pos = static_cast<std::size_t>(std::find(vars.begin(), vars.end(), v) - vars.begin());
        if (pos == vars.size()) throw Error(ErrorCode::OutOfBounds, "parameter " + v + " has no bounds");
        idx.push_back(pos);
        last_var = std::max(last_var, pos + 1);
      }
      terms.emplace_back(std::move(idx), c);
    }
  }

  Int evaluate(const std::vector<Int>& values) const {
    Int total = 0;
    for (const auto& [idx, c] : terms) {
      Int t = c;
      for (auto i : idx) t *= values[i];
      total += t;
    }
    return total;
  }
};

struct Check {
  std::size_t last_var;
  std::function<bool(const std::vector<Int>&)> test;
};

std::vector<std::string> variables_of(const ParamFan& fan) {
  std::vector<std::string> vars;
  for (const auto& [name, b] : fan.bounds) vars.push_back(name);
  return vars;
}

template <class Leaf>
void for_each_assignment(const ParamFan& fan, const std::vector<Check>& checks, Leaf&& leaf) {
  const auto vars = variables_of(fan);
  std::vector<std::vector<const Check*>> by_var(vars.size() + 1);
  for (const auto& c : checks) by_var[c.last_var].push_back(&c);
  std::vector<Int> values(vars.size());
  for (const auto* c : by_var[0]) {
    if (!c->test(values)) return;
  }
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == vars.size()) {
      leaf(values);
      return;
    }
    const auto& b = fan.bounds.at(vars[k]);
    auto ex = fan.excluded.find(vars[k]);
    for (Int v = b.lower; v <= b.upper; ++v) {
      if (ex != fan.excluded.end() && ex->second.count(v)) continue;
      values[k] = v;
      bool ok = true;
      for (const auto* c : by_var[k + 1]) {
        if (!c->test(values)) {
          ok = false;
          break;
        }
      }
      if (ok) rec(k + 1);
    }
  };
  rec(0);
}

Assignment to_assignment(const std::vector<std::string>& vars, const std::vector<Int>& values) {
  Assignment a;
  for (std::size_t i = 0; i < vars.size(); ++i) a[vars[i]] = values[i];
  return a;
}

std::vector<Check> determinant_checks(const ParamFan& fan, const std::vector<std::string>& vars) {
  std::vector<Check> checks;
  for (const auto& cone : fan.cones) {
    std::vector<ParamVector> m;
    for (int r : cone) m.push_back(fan.rays[r]);
    CompiledExpr det(determinant(m), vars);
    checks.push_back({det.last_var, [det](const std::vector<Int>& v) {
                        Int x = det.evaluate(v);
                        return x == 1 || x == -1;
                      }});
  }
  return checks;
}

std::optional<Fan> concrete_instance(const ParamFan& fan, const Assignment& values) {
  Fan f;
  try {
    f = instantiate(fan, values);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateRay) return std::nullopt;
    throw;
  }
  if (!is_smooth_fan(f).smooth || !is_complete_fan(f)) return std::nullopt;
  return f;
}

}  // namespace

std::vector<Fan> instantiate_all(const SearchNode& node) {
  const auto vars = variables_of(node.fan);
  std::set<Fan> out;
  for_each_assignment(node.fan, determinant_checks(node.fan, vars), [&](const std::vector<Int>& values) {
    if (auto f = concrete_instance(node.fan, to_assignment(vars, values))) out.insert(fan_canonical_form(*f));
  });
  return {out.begin(), out.end()};
}

std::vector<Instance> instantiate_admissible(const SearchNode& node, std::size_t max_points) {
  const ParamFan& fan = node.fan;
  const auto vars = variables_of(fan);
  auto checks = determinant_checks(fan, vars);
  const ConeIndices& pinned = *std::min_element(fan.cones.begin(), fan.cones.end());
  const RhsPlan plan = make_rhs_plan(fan.dim, fan.rays.size(), fan.cones, pinned);
  const auto& walls = plan.walls;

  if (vars.empty()) {
    auto f = concrete_instance(fan, {});
    if (!f) return {};
    std::vector<IntVector> coeffs;
    for (const auto& w : walls) {
      coeffs.push_back(edge_parameters(*f, w).coeffs);
      if (!wall_admissible(coeffs.back(), fan.dim, max_points)) return {};
    }
    if (enumerate_rhs(plan, coeffs, max_points, 1).empty()) return {};
    return {Instance{std::move(*f), {}}};
  }

  std::vector<std::optional<std::vector<CompiledExpr>>> symbolic(walls.size());
  for (std::size_t w = 0; w < walls.size(); ++w) {
    ParamEdgeParams ep;
    try {
      ep = edge_parameters(fan, walls[w]);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::ParametricWallUnsupported) continue;
      throw;
    }
    std::vector<CompiledExpr> coeffs;
    std::size_t last = 0;
    for (const auto& c : ep.coeffs) {
      coeffs.emplace_back(c, vars);
      last = std::max(last, coeffs.back().last_var);
    }
    const std::size_t dim = fan.dim;
    checks.push_back({last, [coeffs, dim, max_points](const std::vector<Int>& v) {
                        std::vector<Int> a;
                        for (const auto& c : coeffs) a.push_back(c.evaluate(v));
                        return wall_admissible(a, dim, max_points);
                      }});
    symbolic[w] = std::move(coeffs);
  }

  std::vector<Instance> out;
  std::vector<IntVector> wall_coeffs(walls.size());
  for_each_assignment(fan, checks, [&](const std::vector<Int>& values) {
    bool all_symbolic = true;
    for (std::size_t w = 0; w < walls.size(); ++w) {
      if (!symbolic[w]) {
        all_symbolic = false;
        continue;
      }
      wall_coeffs[w].clear();
      for (const auto& c : *symbolic[w]) wall_coeffs[w].push_back(c.evaluate(values));
    }
    if (all_symbolic && enumerate_rhs(plan, wall_coeffs, max_points, 1).empty()) return;
    Assignment assignment = to_assignment(vars, values);
    auto f = concrete_instance(fan, assignment);
    if (!f) return;
    if (!all_symbolic) {
      for (std::size_t w = 0; w < walls.size(); ++w) {
        if (symbolic[w]) continue;
        wall_coeffs[w] = edge_parameters(*f, walls[w]).coeffs;
        if (!wall_admissible(wall_coeffs[w], fan.dim, max_points)) return;
      }
      if (enumerate_rhs(plan, wall_coeffs, max_points, 1).empty()) return;
    }
    out.push_back({std::move(*f), std::move(assignment)});
  });
  return out;
}

}  // namespace smoothpoly
