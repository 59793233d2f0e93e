#include "smoothpoly/rhs_enum.hpp"

#include <algorithm>
#include <functional>

namespace smoothpoly {

Int EdgeLengthForm::evaluate(const IntVector& b) const {
  Int s = 0;
  for (const auto& [r, c] : coefficients) s += c * b[r];
  return s;
}

EdgeLengthForm edge_length_form(const Fan& fan, const Wall& wall) {
  const EdgeParams ep = edge_parameters(fan, wall);
  EdgeLengthForm f;
  f.wall = wall;
  f.coefficient_sum = 0;
  f.coefficients[wall.opposite[0]] += 1;
  f.coefficients[wall.opposite[1]] += 1;
  for (std::size_t i = 0; i < wall.rays.size(); ++i) {
    f.coefficients[wall.rays[i]] -= ep.coeffs[i];
    f.coefficient_sum += ep.coeffs[i];
  }
  std::erase_if(f.coefficients, [](const auto& kv) { return kv.second == 0; });
  return f;
}

StandardFan standardize(const Fan& fan) {
  const std::size_t d = fan.dim;
  const ConeIndices base = *std::min_element(fan.cones.begin(), fan.cones.end());
  std::vector<IntVector> cols;
  for (int r : base) cols.push_back(fan.rays[r]);
  StandardFan s;
  s.transform = inverse_unimodular(from_columns(cols));
  std::vector<int> position(fan.rays.size(), -1);
  for (int r : base) {
    position[r] = static_cast<int>(s.original_ray.size());
    s.original_ray.push_back(r);
  }
  for (std::size_t r = 0; r < fan.rays.size(); ++r) {
    if (position[r] >= 0) continue;
    position[r] = static_cast<int>(s.original_ray.size());
    s.original_ray.push_back(static_cast<int>(r));
  }
  s.fan.dim = d;
  for (int r : s.original_ray) s.fan.rays.push_back(smoothpoly::apply(s.transform, fan.rays[r]));
  for (const auto& c : fan.cones) {
    ConeIndices nc;
    for (int r : c) nc.push_back(position[r]);
    std::sort(nc.begin(), nc.end());
    s.fan.cones.push_back(std::move(nc));
  }
  std::sort(s.fan.cones.begin(), s.fan.cones.end());
  return s;
}

RhsPlan make_rhs_plan(std::size_t dim, std::size_t ray_count, const std::vector<ConeIndices>& cones,
                      const ConeIndices& pinned) {
  RhsPlan plan;
  plan.dim = dim;
  plan.ray_count = ray_count;
  plan.cone_count = cones.size();
  plan.walls = walls_of(dim, cones);
  plan.pinned = pinned;
  std::vector<bool> known(ray_count, false);
  for (int r : pinned) known[r] = true;
  std::vector<bool> done(plan.walls.size(), false);
  auto all_known = [&](const Wall& w) {
    bool k = known[w.opposite[0]] && known[w.opposite[1]];
    for (int r : w.rays) k = k && known[r];
    return k;
  };
  std::size_t remaining = ray_count - pinned.size();
  while (remaining > 0) {
    bool progressed = false;
    for (std::size_t k = 0; k < plan.walls.size() && !progressed; ++k) {
      const Wall& w = plan.walls[k];
      const int r1 = w.opposite[0], r2 = w.opposite[1];
      bool wall_known = true;
      for (int r : w.rays) wall_known = wall_known && known[r];
      if (!wall_known || known[r1] == known[r2]) continue;
      RhsPlan::Step s{known[r1] ? r2 : r1, k, {}};
      known[s.ray] = true;
      --remaining;
      for (std::size_t j = 0; j < plan.walls.size(); ++j) {
        if (!done[j] && all_known(plan.walls[j])) {
          done[j] = true;
          s.completes.push_back(j);
        }
      }
      plan.steps.push_back(std::move(s));
      progressed = true;
    }
    if (!progressed) throw Error(ErrorCode::InvariantViolation, "edge lengths do not determine b");
  }
  return plan;
}

RhsPolytope build_rhs_polytope(const Fan& fan, std::size_t max_points) {
  RhsPolytope out;
  out.standard = standardize(fan);
  const Fan& f = out.standard.fan;
  const std::size_t m = f.rays.size();
  const std::size_t d = f.dim;
  const Int n = max_points;
  ConeIndices pinned;
  for (std::size_t i = 0; i < d; ++i) pinned.push_back(static_cast<int>(i));
  out.plan = make_rhs_plan(d, m, f.cones, pinned);
  out.h.dim = m;
  IntVector total(m, 0);
  for (const auto& w : out.plan.walls) {
    EdgeLengthForm form = edge_length_form(f, w);
    IntVector row(m, 0);
    for (const auto& [r, c] : form.coefficients) row[r] = c;
    // d * l <= N - sum(a) - d
    out.h.a.push_back(scale(row, Int(d)));
    out.h.b.push_back(n - form.coefficient_sum - Int(d));
    // l >= 1
    out.h.a.push_back(negate(row));
    out.h.b.push_back(-1);
    total = add(total, row);
    out.forms.push_back(std::move(form));
  }
  // sum (l - 1) <= N - |cones|
  out.h.a.push_back(total);
  out.h.b.push_back(n - Int(f.cones.size()) + Int(out.plan.walls.size()));
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(m, 0);
    e[i] = 1;
    out.h.a.push_back(e);
    out.h.b.push_back(0);
    out.h.a.push_back(negate(e));
    out.h.b.push_back(0);
  }
  return out;
}

std::vector<IntVector> enumerate_rhs(const RhsPlan& plan, const std::vector<IntVector>& wall_coeffs,
                                     std::size_t max_points, std::optional<std::size_t> limit) {
  const Int n = max_points;
  const Int d = plan.dim;
  const Int slack_total = n - Int(plan.cone_count);
  const std::size_t nw = plan.walls.size();

  // l(e) = b_r1 + b_r2 - sum a_i b_ni as (ray, coefficient) terms
  std::vector<std::vector<std::pair<int, Int>>> forms(nw);
  std::vector<Int> l_max(nw);
  for (std::size_t k = 0; k < nw; ++k) {
    const Wall& w = plan.walls[k];
    Int sum = 0;
    forms[k].emplace_back(w.opposite[0], 1);
    forms[k].emplace_back(w.opposite[1], 1);
    for (std::size_t i = 0; i < w.rays.size(); ++i) {
      const Int& a = wall_coeffs[k][i];
      sum += a;
      if (a != 0) forms[k].emplace_back(w.rays[i], -a);
    }
    l_max[k] = floor_div(n - sum - d, d);
    if (l_max[k] < 1) return {};
  }
  auto eval = [&](std::size_t k, const IntVector& b) {
    Int s = 0;
    for (const auto& [r, c] : forms[k]) s += c * b[r];
    return s;
  };

  std::vector<IntVector> out;
  IntVector b(plan.ray_count, 0);
  std::function<void(std::size_t, const Int&)> rec = [&](std::size_t k, const Int& slack_used) {
    if (limit && out.size() >= *limit) return;
    if (k == plan.steps.size()) {
      out.push_back(b);
      return;
    }
    const auto& s = plan.steps[k];
    // the fixed ray enters its wall's edge length with coefficient 1
    b[s.ray] = 0;
    const Int rest = eval(s.wall, b);
    for (Int l = 1; l <= l_max[s.wall]; ++l) {
      b[s.ray] = l - rest;
      Int used = slack_used;
      bool ok = true;
      for (std::size_t j : s.completes) {
        const Int lj = eval(j, b);
        if (lj < 1 || lj > l_max[j]) {
          ok = false;
          break;
        }
        used += lj - 1;
      }
      if (ok && used <= slack_total) rec(k + 1, used);
    }
    b[s.ray] = 0;
  };
  rec(0, Int(0));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<IntVector> enumerate_rhs(const RhsPolytope& rhs, std::size_t max_points,
                                     std::optional<std::size_t> limit) {
  std::vector<IntVector> coeffs;
  for (const auto& w : rhs.plan.walls) coeffs.push_back(edge_parameters(rhs.standard.fan, w).coeffs);
  return enumerate_rhs(rhs.plan, coeffs, max_points, limit);
}

std::vector<IntVector> enumerate_rhs(const Fan& fan, std::size_t max_points) {
  return enumerate_rhs(build_rhs_polytope(fan, max_points), max_points);
}

bool has_rhs(const Fan& fan, std::size_t max_points) {
  const ConeIndices& pinned = *std::min_element(fan.cones.begin(), fan.cones.end());
  const RhsPlan plan = make_rhs_plan(fan.dim, fan.rays.size(), fan.cones, pinned);
  std::vector<IntVector> coeffs;
  for (const auto& w : plan.walls) coeffs.push_back(edge_parameters(fan, w).coeffs);
  return !enumerate_rhs(plan, coeffs, max_points, 1).empty();
}

Realization realize_and_filter(const Fan& fan, const IntVector& b, std::size_t max_points) {
  const std::size_t d = fan.dim;
  Realization out;
  std::vector<IntVector> vertices;
  vertices.reserve(fan.cones.size());
  for (const auto& cone : fan.cones) {
    IntMatrix a;
    IntVector rhs;
    for (int r : cone) {
      a.push_back(fan.rays[r]);
      rhs.push_back(b[r]);
    }
    const Int det = determinant(a);
    IntVector x;
    if (det == 1 || det == -1) {
      x = smoothpoly::apply(inverse_unimodular(a), rhs);
    } else {
      RatVector q = solve_rational(a, rhs);
      for (const auto& v : q) {
        if (boost::multiprecision::denominator(v) != 1) {
          throw Error(ErrorCode::NonIntegralVertex, "vertex of a non-smooth cone is fractional");
        }
        x.push_back(boost::multiprecision::numerator(v));
      }
    }
    // the vertex of cone C must lie strictly inside every other facet
    std::size_t ci = 0;
    for (std::size_t r = 0; r < fan.rays.size(); ++r) {
      if (ci < cone.size() && cone[ci] == static_cast<int>(r)) {
        ++ci;
        continue;
      }
      if (dot(fan.rays[r], x) >= b[r]) return out;
    }
    vertices.push_back(std::move(x));
  }
  HPolytope h{d, fan.rays, b};
  std::sort(vertices.begin(), vertices.end());
  out.polytope = LatticePolytope{d, vertices};
  out.lattice_points = count_lattice_points(h, vertices, max_points);
  if (out.lattice_points > max_points) {
    out.status = RealizationStatus::TooManyPoints;
    return out;
  }
  if (!is_smooth(out.polytope).smooth) {
    throw Error(ErrorCode::InvariantViolation, "realized polytope of a smooth fan is not smooth");
  }
  out.status = RealizationStatus::Accepted;
  return out;
}

}  // namespace smoothpoly
