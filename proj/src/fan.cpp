#include "smoothpoly/fan.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace smoothpoly {

namespace {

bool contains_all(const ConeIndices& cone, const ConeIndices& target) {
  return std::includes(cone.begin(), cone.end(), target.begin(), target.end());
}

int find_root(std::vector<int>& parent, int x) {
  while (parent[x] != x) {
    parent[x] = parent[parent[x]];
    x = parent[x];
  }
  return x;
}

std::vector<ParamVector> param_adjugate(const std::vector<ParamVector>& m) {
  const std::size_t n = m.size();
  std::vector<ParamVector> adj(n, ParamVector(n));
  if (n == 1) {
    adj[0][0] = ParamExpr(1);
    return adj;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<ParamVector> minor;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == i) continue;
        ParamVector row;
        for (std::size_t c = 0; c < n; ++c) {
          if (c != j) row.push_back(m[r][c]);
        }
        minor.push_back(std::move(row));
      }
      ParamExpr cof = determinant(minor);
      adj[j][i] = (i + j) % 2 == 0 ? cof : -cof;
    }
  }
  return adj;
}

}  // namespace

bool ParamFan::is_concrete() const {
  for (const auto& r : rays) {
    for (const auto& e : r) {
      if (!e.is_constant()) return false;
    }
  }
  return true;
}

std::set<std::string> ParamFan::parameters() const {
  std::set<std::string> out;
  for (const auto& [name, b] : bounds) out.insert(name);
  for (const auto& r : rays) {
    for (const auto& e : r) {
      auto vars = e.variables();
      out.insert(vars.begin(), vars.end());
    }
  }
  return out;
}

ParamFan to_param_fan(const Fan& fan) {
  ParamFan pf;
  pf.dim = fan.dim;
  pf.cones = fan.cones;
  for (const auto& r : fan.rays) {
    ParamVector v;
    for (const auto& x : r) v.emplace_back(x);
    pf.rays.push_back(std::move(v));
  }
  return pf;
}

std::vector<Wall> walls_of(std::size_t dim, const std::vector<ConeIndices>& cones) {
  std::map<ConeIndices, std::vector<std::pair<int, int>>> ridges;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    const auto& cone = cones[c];
    if (cone.size() != dim) throw Error(ErrorCode::NotComplete, "maximal cone is not simplicial");
    for (std::size_t skip = 0; skip < cone.size(); ++skip) {
      ConeIndices ridge;
      ridge.reserve(dim - 1);
      for (std::size_t k = 0; k < cone.size(); ++k) {
        if (k != skip) ridge.push_back(cone[k]);
      }
      ridges[ridge].emplace_back(static_cast<int>(c), cone[skip]);
    }
  }
  std::vector<Wall> walls;
  walls.reserve(ridges.size());
  for (auto& [ridge, inc] : ridges) {
    if (inc.size() != 2) {
      throw Error(ErrorCode::NotComplete, "ridge " + std::to_string(ridge.front()) + "... lies in " +
                                              std::to_string(inc.size()) + " maximal cones");
    }
    Wall w;
    w.rays = ridge;
    w.incident = {inc[0].first, inc[1].first};
    w.opposite = {inc[0].second, inc[1].second};
    walls.push_back(std::move(w));
  }
  return walls;
}

std::vector<Wall> walls_of(const Fan& fan) { return walls_of(fan.dim, fan.cones); }

EdgeParams edge_parameters(const Fan& fan, const Wall& wall) {
  const std::size_t d = fan.dim;
  const IntVector target = add(fan.rays[wall.opposite[0]], fan.rays[wall.opposite[1]]);
  // unimodular incident cone: coordinates in its ray basis are integral
  IntMatrix basis(d, IntVector(d));
  for (std::size_t j = 0; j < wall.rays.size(); ++j) {
    for (std::size_t i = 0; i < d; ++i) basis[i][j] = fan.rays[wall.rays[j]][i];
  }
  for (std::size_t i = 0; i < d; ++i) basis[i][d - 1] = fan.rays[wall.opposite[0]][i];
  const Int det = determinant(basis);
  if (det == 1 || det == -1) {
    IntVector x = smoothpoly::apply(inverse_unimodular(basis), target);
    if (x[d - 1] != 0) throw Error(ErrorCode::NonIntegral, "r1 + r2 does not lie in the span of the wall");
    x.pop_back();
    return {wall, std::move(x)};
  }
  std::vector<IntVector> cols;
  for (int r : wall.rays) cols.push_back(fan.rays[r]);
  IntMatrix m = from_columns(cols);
  if (m.empty()) m.assign(fan.dim, IntVector{});
  RatVector sol;
  try {
    sol = solve_rational(m, target);
  } catch (const Error& e) {
    if (e.code() == ErrorCode::Inconsistent) {
      throw Error(ErrorCode::NonIntegral, "r1 + r2 does not lie in the span of the wall");
    }
    throw;
  }
  EdgeParams ep{wall, {}};
  for (const auto& q : sol) {
    if (boost::multiprecision::denominator(q) != 1) {
      throw Error(ErrorCode::NonIntegral, "edge parameter is not an integer");
    }
    ep.coeffs.push_back(boost::multiprecision::numerator(q));
  }
  return ep;
}

ParamEdgeParams edge_parameters(const ParamFan& fan, const Wall& wall) {
  const std::size_t d = fan.dim;
  ParamVector target(d);
  for (std::size_t i = 0; i < d; ++i) {
    target[i] = fan.rays[wall.opposite[0]][i] + fan.rays[wall.opposite[1]][i];
  }
  for (int side = 0; side < 2; ++side) {
    // columns: wall rays followed by the opposite ray on this side
    std::vector<ParamVector> m(d, ParamVector(d));
    for (std::size_t j = 0; j < wall.rays.size(); ++j) {
      for (std::size_t i = 0; i < d; ++i) m[i][j] = fan.rays[wall.rays[j]][i];
    }
    for (std::size_t i = 0; i < d; ++i) m[i][d - 1] = fan.rays[wall.opposite[side]][i];
    const ParamExpr det = determinant(m);
    if (!det.is_constant()) continue;
    const Int dv = det.constant_term();
    if (dv != 1 && dv != -1) continue;
    const auto adj = param_adjugate(m);
    ParamVector sol(d);
    for (std::size_t i = 0; i < d; ++i) {
      ParamExpr s;
      for (std::size_t k = 0; k < d; ++k) s += adj[i][k] * target[k];
      sol[i] = s * ParamExpr(dv);
    }
    // r1 + r2 must not involve r1 itself for a smooth wall neighbourhood
    if (!sol[d - 1].is_zero()) {
      throw Error(ErrorCode::NonIntegral, "opposite rays are not separated by the wall");
    }
    sol.pop_back();
    return {wall, std::move(sol)};
  }
  throw Error(ErrorCode::ParametricWallUnsupported,
              "no incident cone with constant unit determinant");
}

SmoothFanCheck is_smooth_fan(const Fan& fan) {
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    const auto& cone = fan.cones[c];
    if (cone.size() != fan.dim) return {false, c};
    IntMatrix m;
    for (int r : cone) m.push_back(fan.rays[r]);
    const Int det = determinant(m);
    if (det != 1 && det != -1) return {false, c};
  }
  return {true, std::nullopt};
}

bool is_complete_fan(const Fan& fan) {
  std::vector<Wall> walls;
  try {
    walls = walls_of(fan);
  } catch (const Error&) {
    return false;
  }
  if (fan.cones.empty()) return false;
  {
    auto sorted = fan.cones;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  }
  std::vector<int> parent(fan.cones.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const auto& w : walls) {
    parent[find_root(parent, w.incident[0])] = find_root(parent, w.incident[1]);
  }
  const int root = find_root(parent, 0);
  for (std::size_t c = 0; c < fan.cones.size(); ++c) {
    if (find_root(parent, static_cast<int>(c)) != root) return false;
  }
  std::set<int> used;
  for (const auto& cone : fan.cones) used.insert(cone.begin(), cone.end());
  if (used.size() != fan.rays.size()) return false;
  const auto v = static_cast<long long>(used.size());
  const auto e = static_cast<long long>(walls.size());
  const auto f = static_cast<long long>(fan.cones.size());
  if (fan.dim == 2) return v == f;
  if (fan.dim == 3) return v - e + f == 2;
  return true;
}

ConeSubdivision subdivide_cones(const std::vector<ConeIndices>& cones, const ConeIndices& target,
                                int new_ray) {
  ConeSubdivision out;
  out.cones = cones;
  std::vector<ConeIndices> appended;
  for (std::size_t c = 0; c < cones.size(); ++c) {
    if (!contains_all(cones[c], target)) continue;
    out.replaced.push_back(static_cast<int>(c));
    bool first = true;
    for (int ray : target) {
      ConeIndices piece = cones[c];
      std::replace(piece.begin(), piece.end(), ray, new_ray);
      std::sort(piece.begin(), piece.end());
      if (first) {
        out.cones[c] = std::move(piece);
        out.created.push_back(static_cast<int>(c));
        first = false;
      } else {
        appended.push_back(std::move(piece));
      }
    }
  }
  for (auto& piece : appended) {
    out.created.push_back(static_cast<int>(out.cones.size()));
    out.cones.push_back(std::move(piece));
  }
  return out;
}

Fan blow_up(const Fan& fan, const ConeIndices& target) {
  if (target.size() < 2) throw Error(ErrorCode::InvalidCone, "blow-up target needs at least two rays");
  IntVector sum(fan.dim, 0);
  for (int r : target) {
    if (r < 0 || static_cast<std::size_t>(r) >= fan.rays.size()) {
      throw Error(ErrorCode::InvalidCone, "ray index out of range");
    }
    sum = add(sum, fan.rays[r]);
  }
  auto sub = subdivide_cones(fan.cones, target, static_cast<int>(fan.rays.size()));
  if (sub.replaced.empty()) throw Error(ErrorCode::InvalidCone, "target is not a cone of the fan");
  Fan out;
  out.dim = fan.dim;
  out.rays = fan.rays;
  out.rays.push_back(normalize_primitive(sum).primitive);
  out.cones = std::move(sub.cones);
  return out;
}

ParamFan blow_up(const ParamFan& fan, const ConeIndices& target) {
  if (target.size() < 2) throw Error(ErrorCode::InvalidCone, "blow-up target needs at least two rays");
  ParamVector sum(fan.dim);
  for (int r : target) {
    if (r < 0 || static_cast<std::size_t>(r) >= fan.rays.size()) {
      throw Error(ErrorCode::InvalidCone, "ray index out of range");
    }
    for (std::size_t i = 0; i < fan.dim; ++i) sum[i] += fan.rays[r][i];
  }
  auto sub = subdivide_cones(fan.cones, target, static_cast<int>(fan.rays.size()));
  if (sub.replaced.empty()) throw Error(ErrorCode::InvalidCone, "target is not a cone of the fan");
  ParamFan out = fan;
  bool constant = true;
  for (const auto& e : sum) constant = constant && e.is_constant();
  if (constant) {
    IntVector v;
    for (const auto& e : sum) v.push_back(e.constant_term());
    v = normalize_primitive(v).primitive;
    for (std::size_t i = 0; i < fan.dim; ++i) sum[i] = ParamExpr(v[i]);
  }
  out.rays.push_back(std::move(sum));
  out.cones = std::move(sub.cones);
  return out;
}

Fan instantiate(const ParamFan& fan, const Assignment& values) {
  for (const auto& [name, b] : fan.bounds) {
    auto it = values.find(name);
    if (it == values.end()) throw Error(ErrorCode::OutOfBounds, "missing value for " + name);
    if (it->second < b.lower || it->second > b.upper) {
      throw Error(ErrorCode::OutOfBounds, name + " = " + it->second.str() + " outside [" +
                                              b.lower.str() + ", " + b.upper.str() + "]");
    }
  }
  for (const auto& [name, vals] : fan.excluded) {
    auto it = values.find(name);
    if (it != values.end() && vals.count(it->second)) {
      throw Error(ErrorCode::OutOfBounds, name + " = " + it->second.str() + " is excluded");
    }
  }
  Fan out;
  out.dim = fan.dim;
  out.cones = fan.cones;
  for (const auto& r : fan.rays) {
    IntVector v;
    v.reserve(r.size());
    for (const auto& e : r) v.push_back(e.evaluate(values));
    if (is_zero(v)) throw Error(ErrorCode::DegenerateRay, "ray evaluates to zero");
    out.rays.push_back(normalize_primitive(v).primitive);
  }
  auto sorted = out.rays;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw Error(ErrorCode::DegenerateRay, "two rays coincide");
  }
  return out;
}

Fan fan_canonical_form(const Fan& fan) {
  const std::size_t d = fan.dim;
  std::optional<Fan> best;
  std::vector<std::size_t> order(fan.rays.size());
  std::vector<int> position(fan.rays.size());
  for (const auto& cone : fan.cones) {
    ConeIndices perm = cone;
    std::sort(perm.begin(), perm.end());
    do {
      IntMatrix basis(d, IntVector(d));
      for (std::size_t j = 0; j < d; ++j) {
        for (std::size_t i = 0; i < d; ++i) basis[i][j] = fan.rays[perm[j]][i];
      }
      IntMatrix inv;
      try {
        inv = inverse_unimodular(basis);
      } catch (const Error&) {
        continue;
      }
      Fan cand;
      cand.dim = d;
      std::vector<IntVector> mapped;
      mapped.reserve(fan.rays.size());
      for (const auto& r : fan.rays) mapped.push_back(smoothpoly::apply(inv, r));
      std::iota(order.begin(), order.end(), 0);
      std::sort(order.begin(), order.end(),
                [&](std::size_t a, std::size_t b) { return mapped[a] < mapped[b]; });
      cand.rays.reserve(mapped.size());
      for (std::size_t k = 0; k < order.size(); ++k) {
        position[order[k]] = static_cast<int>(k);
        cand.rays.push_back(std::move(mapped[order[k]]));
      }
      if (best && cand.rays > best->rays) continue;
      cand.cones.reserve(fan.cones.size());
      for (const auto& c : fan.cones) {
        ConeIndices nc;
        nc.reserve(c.size());
        for (int r : c) nc.push_back(position[r]);
        std::sort(nc.begin(), nc.end());
        cand.cones.push_back(std::move(nc));
      }
      std::sort(cand.cones.begin(), cand.cones.end());
      if (!best || cand < *best) best = std::move(cand);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  if (!best) return fan;
  return *best;
}

std::string fan_key(const Fan& fan) {
  std::ostringstream os;
  os << fan.dim << '|';
  for (const auto& r : fan.rays) {
    for (const auto& x : r) os << x << ',';
    os << ';';
  }
  os << '|';
  for (const auto& c : fan.cones) {
    for (int r : c) os << r << ',';
    os << ';';
  }
  return os.str();
}

std::string describe(const Fan& fan) {
  std::ostringstream os;
  os << "rays:";
  for (const auto& r : fan.rays) os << ' ' << to_string(r);
  os << " cones:";
  for (const auto& c : fan.cones) {
    os << " {";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << '}';
  }
  return os.str();
}

}  // namespace smoothpoly
