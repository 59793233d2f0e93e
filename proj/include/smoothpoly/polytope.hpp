#pragma once

// H- and V-representations of full-dimensional polytopes, lattice points,
// edges, smoothness and normal fans.

#include <cstddef>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "smoothpoly/exact_linalg.hpp"
#include "smoothpoly/fan.hpp"

namespace smoothpoly {

/// { x : a x <= b }. Rows of `a` coming from fans and hulls are primitive.
struct HPolytope {
  std::size_t dim = 0;
  IntMatrix a;
  IntVector b;
};

/// Vertex form over the rationals (B(F,N) has rational vertices).
struct VPolytope {
  std::size_t dim = 0;
  std::vector<RatVector> vertices;  // lexicographically sorted, irredundant

  bool is_lattice() const;
};

/// Vertex form of a lattice polytope.
struct LatticePolytope {
  std::size_t dim = 0;
  std::vector<IntVector> vertices;  // lexicographically sorted, irredundant

  friend bool operator==(const LatticePolytope&, const LatticePolytope&) = default;
};

struct EdgeData {
  std::pair<std::size_t, std::size_t> endpoints;  // vertex indices, first < second
  IntVector direction;                            // primitive, from first to second
  Int lattice_length;
};

struct SmoothnessCheck {
  bool smooth = false;
  std::optional<IntVector> witness;  // offending vertex
};

VPolytope vertices_of(const HPolytope& p);

/// Integer vertices of a lattice H-polytope; throws NonIntegralVertex otherwise.
LatticePolytope lattice_vertices_of(const HPolytope& p);

std::vector<IntVector> lattice_points(const HPolytope& p);
std::vector<IntVector> interior_lattice_points(const HPolytope& p);

/// Visits the integer points of p inside the box [lo, hi] in lexicographic
/// order; the visitor returns false to stop early.
void for_each_lattice_point(const HPolytope& p, const IntVector& lo, const IntVector& hi,
                            const std::function<bool(const IntVector&)>& visit);

/// Number of lattice points of the lattice polytope {a x <= b} whose vertices
/// are `vertices`, stopping once the count exceeds `limit` (if given).
std::size_t count_lattice_points(const HPolytope& p, const std::vector<IntVector>& vertices,
                                 std::optional<std::size_t> limit = std::nullopt);

/// Facets of conv(points): primitive outer normals with integer right-hand
/// sides, sorted lexicographically by (normal, rhs). Throws NotFullDim.
HPolytope facets_of(std::size_t dim, const std::vector<IntVector>& points);

/// Extreme points of conv(points).
LatticePolytope convex_hull(std::size_t dim, const std::vector<IntVector>& points);

HPolytope to_hpolytope(const LatticePolytope& p);

std::vector<EdgeData> edges_of(const LatticePolytope& p);
std::vector<EdgeData> edges_of(const HPolytope& p);

SmoothnessCheck is_smooth(const LatticePolytope& p);

/// Rays are the primitive outer facet normals, maximal cones the vertex
/// normal cones (in vertex order). Non-simple input gives non-simplicial cones.
Fan normal_fan(const LatticePolytope& p);

}  // namespace smoothpoly
