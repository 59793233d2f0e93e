#include "smoothpoly/polytope.hpp"

#include <algorithm>
#include <set>

namespace smoothpoly {

namespace {

// Calls f on every k-subset of {0..n-1} as a sorted index vector.
template <class F>
void for_each_subset(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Vector orthogonal to the d-1 given rows (generalized cross product).
IntVector null_vector(const IntMatrix& rows, std::size_t d) {
  IntVector v(d);
  for (std::size_t col = 0; col < d; ++col) {
    IntMatrix minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      IntVector row;
      row.reserve(d - 1);
      for (std::size_t j = 0; j < d; ++j) {
        if (j != col) row.push_back(r[j]);
      }
      minor.push_back(std::move(row));
    }
    Int det = determinant(minor);
    v[col] = col % 2 == 0 ? det : Int(-det);
  }
  return v;
}

bool satisfies(const HPolytope& p, const RatVector& x) {
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    Rational s = 0;
    for (std::size_t j = 0; j < p.dim; ++j) s += p.a[i][j] * x[j];
    if (s > p.b[i]) return false;
  }
  return true;
}

std::size_t affine_rank(const std::vector<RatVector>& pts) {
  if (pts.empty()) return 0;
  IntMatrix diffs;
  for (std::size_t k = 1; k < pts.size(); ++k) {
    RatVector d(pts[k].size());
    Int l = 1;
    for (std::size_t j = 0; j < d.size(); ++j) {
      d[j] = pts[k][j] - pts[0][j];
      l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(d[j]));
    }
    IntVector row;
    for (const auto& q : d) row.push_back(boost::multiprecision::numerator(Rational(q * l)));
    diffs.push_back(std::move(row));
  }
  return rank(diffs);
}

std::size_t affine_rank(const std::vector<IntVector>& pts) {
  if (pts.empty()) return 0;
  IntMatrix diffs;
  for (std::size_t k = 1; k < pts.size(); ++k) diffs.push_back(subtract(pts[k], pts[0]));
  return rank(diffs);
}

void enumerate_box(const HPolytope& p, const IntVector& lo, const IntVector& hi, std::size_t depth,
                   IntVector& point, std::vector<Int>& partial,
                   const std::vector<std::vector<Int>>& min_rest, bool& stop,
                   const std::function<bool(const IntVector&)>& visit) {
  const std::size_t d = p.dim;
  if (depth == d) {
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      if (partial[i] > p.b[i]) return;
    }
    if (!visit(point)) stop = true;
    return;
  }
  for (Int x = lo[depth]; x <= hi[depth] && !stop; ++x) {
    bool feasible = true;
    for (std::size_t i = 0; i < p.a.size(); ++i) {
      partial[i] += p.a[i][depth] * x;
      if (partial[i] + min_rest[i][depth + 1] > p.b[i]) feasible = false;
    }
    point[depth] = x;
    if (feasible) enumerate_box(p, lo, hi, depth + 1, point, partial, min_rest, stop, visit);
    for (std::size_t i = 0; i < p.a.size(); ++i) partial[i] -= p.a[i][depth] * x;
  }
}

std::pair<IntVector, IntVector> bounding_box(const std::vector<RatVector>& verts, std::size_t d) {
  IntVector lo(d), hi(d);
  for (std::size_t j = 0; j < d; ++j) {
    Rational mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      mn = std::min(mn, v[j]);
      mx = std::max(mx, v[j]);
    }
    lo[j] = ceil_of(mn);
    hi[j] = floor_of(mx);
  }
  return {lo, hi};
}

std::vector<std::vector<bool>> incidence(const HPolytope& facets,
                                         const std::vector<IntVector>& vertices) {
  std::vector<std::vector<bool>> tight(vertices.size(), std::vector<bool>(facets.a.size()));
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    for (std::size_t f = 0; f < facets.a.size(); ++f) {
      tight[v][f] = dot(facets.a[f], vertices[v]) == facets.b[f];
    }
  }
  return tight;
}

}  // namespace

bool VPolytope::is_lattice() const {
  for (const auto& v : vertices) {
    for (const auto& q : v) {
      if (boost::multiprecision::denominator(q) != 1) return false;
    }
  }
  return true;
}

VPolytope vertices_of(const HPolytope& p) {
  const std::size_t d = p.dim;
  if (p.a.size() != p.b.size()) throw Error(ErrorCode::Shape, "A and b have different lengths");
  if (rank(p.a) < d) throw Error(ErrorCode::Unbounded, "normals do not span the space");

  // a ray of the recession cone is orthogonal to d-1 independent normals
  bool unbounded = false;
  for_each_subset(p.a.size(), d - 1, [&](const std::vector<std::size_t>& idx) {
    if (unbounded) return;
    IntMatrix rows;
    for (auto i : idx) rows.push_back(p.a[i]);
    if (rank(rows) != d - 1) return;
    IntVector dir = null_vector(rows, d);
    for (int sign : {1, -1}) {
      bool ok = true;
      for (const auto& row : p.a) {
        if (dot(row, dir) * sign > 0) {
          ok = false;
          break;
        }
      }
      if (ok) unbounded = true;
    }
  });
  if (unbounded) throw Error(ErrorCode::Unbounded, "polyhedron has a recession direction");

  std::set<RatVector> found;
  for_each_subset(p.a.size(), d, [&](const std::vector<std::size_t>& idx) {
    IntMatrix m;
    IntVector rhs;
    for (auto i : idx) {
      m.push_back(p.a[i]);
      rhs.push_back(p.b[i]);
    }
    if (determinant(m) == 0) return;
    RatVector x = solve_rational(m, rhs);
    if (satisfies(p, x)) found.insert(std::move(x));
  });
  if (found.empty()) throw Error(ErrorCode::Empty, "no feasible point");
  VPolytope out;
  out.dim = d;
  out.vertices.assign(found.begin(), found.end());
  return out;
}

LatticePolytope lattice_vertices_of(const HPolytope& p) {
  VPolytope v = vertices_of(p);
  LatticePolytope out;
  out.dim = v.dim;
  for (const auto& x : v.vertices) {
    IntVector iv;
    for (const auto& q : x) {
      if (boost::multiprecision::denominator(q) != 1) {
        throw Error(ErrorCode::NonIntegralVertex, "vertex has a fractional coordinate");
      }
      iv.push_back(boost::multiprecision::numerator(q));
    }
    out.vertices.push_back(std::move(iv));
  }
  return out;
}

void for_each_lattice_point(const HPolytope& p, const IntVector& lo, const IntVector& hi,
                            const std::function<bool(const IntVector&)>& visit) {
  const std::size_t d = p.dim;
  for (std::size_t j = 0; j < d; ++j) {
    if (lo[j] > hi[j]) return;
  }
  // min_rest[i][k]: smallest value of sum_{j >= k} a_ij x_j over the box
  std::vector<std::vector<Int>> min_rest(p.a.size(), std::vector<Int>(d + 1, 0));
  for (std::size_t i = 0; i < p.a.size(); ++i) {
    for (std::size_t k = d; k-- > 0;) {
      const Int& c = p.a[i][k];
      min_rest[i][k] = min_rest[i][k + 1] + (c >= 0 ? c * lo[k] : c * hi[k]);
    }
  }
  IntVector point(d);
  std::vector<Int> partial(p.a.size(), 0);
  bool stop = false;
  enumerate_box(p, lo, hi, 0, point, partial, min_rest, stop, visit);
}

std::vector<IntVector> lattice_points(const HPolytope& p) {
  VPolytope v = vertices_of(p);
  if (affine_rank(v.vertices) < p.dim) throw Error(ErrorCode::NotFullDim, "polytope is not full-dimensional");
  auto [lo, hi] = bounding_box(v.vertices, p.dim);
  std::vector<IntVector> out;
  for_each_lattice_point(p, lo, hi, [&](const IntVector& x) {
    out.push_back(x);
    return true;
  });
  return out;
}

std::vector<IntVector> interior_lattice_points(const HPolytope& p) {
  std::vector<IntVector> out;
  for (auto& x : lattice_points(p)) {
    bool strict = true;
    for (std::size_t i = 0; i < p.a.size() && strict; ++i) strict = dot(p.a[i], x) < p.b[i];
    if (strict) out.push_back(std::move(x));
  }
  return out;
}

std::size_t count_lattice_points(const HPolytope& p, const std::vector<IntVector>& vertices,
                                 std::optional<std::size_t> limit) {
  const std::size_t d = p.dim;
  IntVector lo = vertices.at(0), hi = vertices.at(0);
  for (const auto& v : vertices) {
    for (std::size_t j = 0; j < d; ++j) {
      if (v[j] < lo[j]) lo[j] = v[j];
      if (v[j] > hi[j]) hi[j] = v[j];
    }
  }
  std::size_t count = 0;
  for_each_lattice_point(p, lo, hi, [&](const IntVector&) {
    ++count;
    return !(limit && count > *limit);
  });
  return count;
}

HPolytope facets_of(std::size_t dim, const std::vector<IntVector>& points) {
  std::vector<IntVector> pts = points;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.empty() || affine_rank(pts) < dim) {
    throw Error(ErrorCode::NotFullDim, "points do not span the space affinely");
  }
  std::set<std::pair<IntVector, Int>> facets;
  for_each_subset(pts.size(), dim, [&](const std::vector<std::size_t>& idx) {
    IntMatrix rows;
    for (std::size_t k = 1; k < idx.size(); ++k) rows.push_back(subtract(pts[idx[k]], pts[idx[0]]));
    IntVector n = null_vector(rows, dim);
    if (is_zero(n)) return;
    n = normalize_primitive(n).primitive;
    const Int level = dot(n, pts[idx[0]]);
    bool below = true, above = true;
    for (const auto& q : pts) {
      const Int s = dot(n, q);
      if (s > level) below = false;
      if (s < level) above = false;
      if (!below && !above) return;
    }
    if (below) facets.emplace(n, level);
    if (above) facets.emplace(negate(n), -level);
  });
  HPolytope out;
  out.dim = dim;
  for (const auto& [n, level] : facets) {
    out.a.push_back(n);
    out.b.push_back(level);
  }
  return out;
}

LatticePolytope convex_hull(std::size_t dim, const std::vector<IntVector>& points) {
  HPolytope h = facets_of(dim, points);
  LatticePolytope out;
  out.dim = dim;
  std::set<IntVector> seen;
  for (const auto& p : points) {
    if (!seen.insert(p).second) continue;
    IntMatrix tight;
    for (std::size_t f = 0; f < h.a.size(); ++f) {
      if (dot(h.a[f], p) == h.b[f]) tight.push_back(h.a[f]);
    }
    if (rank(tight) == dim) out.vertices.push_back(p);
  }
  std::sort(out.vertices.begin(), out.vertices.end());
  return out;
}

HPolytope to_hpolytope(const LatticePolytope& p) { return facets_of(p.dim, p.vertices); }

std::vector<EdgeData> edges_of(const LatticePolytope& p) {
  const std::size_t d = p.dim;
  HPolytope h = facets_of(d, p.vertices);
  const auto tight = incidence(h, p.vertices);
  std::vector<EdgeData> edges;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < p.vertices.size(); ++j) {
      IntMatrix common;
      std::vector<std::size_t> common_idx;
      for (std::size_t f = 0; f < h.a.size(); ++f) {
        if (tight[i][f] && tight[j][f]) {
          common.push_back(h.a[f]);
          common_idx.push_back(f);
        }
      }
      if (rank(common) != d - 1) continue;
      bool only_two = true;
      for (std::size_t k = 0; k < p.vertices.size() && only_two; ++k) {
        if (k == i || k == j) continue;
        bool on_all = true;
        for (auto f : common_idx) on_all = on_all && tight[k][f];
        if (on_all) only_two = false;
      }
      if (!only_two) continue;
      auto diff = subtract(p.vertices[j], p.vertices[i]);
      auto prim = normalize_primitive(diff);
      edges.push_back({{i, j}, std::move(prim.primitive), prim.factor});
    }
  }
  return edges;
}

std::vector<EdgeData> edges_of(const HPolytope& p) { return edges_of(lattice_vertices_of(p)); }

SmoothnessCheck is_smooth(const LatticePolytope& p) {
  const auto edges = edges_of(p);
  std::vector<std::vector<IntVector>> dirs(p.vertices.size());
  for (const auto& e : edges) {
    dirs[e.endpoints.first].push_back(e.direction);
    dirs[e.endpoints.second].push_back(negate(e.direction));
  }
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    if (dirs[v].size() != p.dim) return {false, p.vertices[v]};
    const Int det = determinant(dirs[v]);
    if (det != 1 && det != -1) return {false, p.vertices[v]};
  }
  return {true, std::nullopt};
}

Fan normal_fan(const LatticePolytope& p) {
  HPolytope h = facets_of(p.dim, p.vertices);
  Fan fan;
  fan.dim = p.dim;
  fan.rays = h.a;
  const auto tight = incidence(h, p.vertices);
  for (std::size_t v = 0; v < p.vertices.size(); ++v) {
    ConeIndices cone;
    for (std::size_t f = 0; f < h.a.size(); ++f) {
      if (tight[v][f]) cone.push_back(static_cast<int>(f));
    }
    fan.cones.push_back(std::move(cone));
  }
  return fan;
}

}  // namespace smoothpoly
