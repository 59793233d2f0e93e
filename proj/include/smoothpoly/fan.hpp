#pragma once

// Simplicial fans: concrete (integer rays) and parametric (rays with
// polynomial entries in named integer parameters).

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "smoothpoly/exact_linalg.hpp"
#include "smoothpoly/param_expr.hpp"

namespace smoothpoly {

/// A maximal cone or a wall, given by sorted ray indices.
using ConeIndices = std::vector<int>;

struct Fan {
  std::size_t dim = 0;
  std::vector<IntVector> rays;
  std::vector<ConeIndices> cones;  // maximal cones; each sorted ascending

  friend bool operator==(const Fan&, const Fan&) = default;
  friend auto operator<=>(const Fan&, const Fan&) = default;
};

/// A codimension-one cone shared by exactly two maximal cones.
struct Wall {
  ConeIndices rays;               // d-1 spanning rays, sorted
  std::array<int, 2> incident{};  // maximal cone indices, ascending
  std::array<int, 2> opposite{};  // ray completing incident[0] / incident[1]

  friend bool operator==(const Wall&, const Wall&) = default;
};

/// r1 + r2 = sum_i coeffs[i] * rays[i] across a wall.
struct EdgeParams {
  Wall wall;
  IntVector coeffs;
};

struct ParamEdgeParams {
  Wall wall;
  std::vector<ParamExpr> coeffs;
};

struct ParamBounds {
  Int lower;
  Int upper;

  friend bool operator==(const ParamBounds&, const ParamBounds&) = default;
};

using BoundsMap = std::map<std::string, ParamBounds>;

struct ParamFan {
  std::size_t dim = 0;
  std::vector<ParamVector> rays;
  std::vector<ConeIndices> cones;
  BoundsMap bounds;
  std::map<std::string, std::set<Int>> excluded;

  bool is_concrete() const;
  std::set<std::string> parameters() const;
};

ParamFan to_param_fan(const Fan& fan);

/// All walls of a simplicial fan given only its maximal cones. Throws
/// NotComplete if some ridge is not shared by exactly two maximal cones.
std::vector<Wall> walls_of(std::size_t dim, const std::vector<ConeIndices>& cones);
std::vector<Wall> walls_of(const Fan& fan);

EdgeParams edge_parameters(const Fan& fan, const Wall& wall);

/// Symbolic edge parameters. Requires an incident maximal cone whose
/// determinant is the constant +-1, which holds for every smooth family.
ParamEdgeParams edge_parameters(const ParamFan& fan, const Wall& wall);

struct SmoothFanCheck {
  bool smooth = false;
  std::optional<std::size_t> offending_cone;
};

SmoothFanCheck is_smooth_fan(const Fan& fan);

/// Ridge / connectivity / Euler characteristic test for a simplicial fan.
bool is_complete_fan(const Fan& fan);

/// Result of subdividing the maximal cones that contain `target`.
struct ConeSubdivision {
  std::vector<ConeIndices> cones;
  std::vector<int> replaced;  // indices of the subdivided cones, ascending
  std::vector<int> created;   // indices of all new cones
};

/// Combinatorial part of a blow-up: every maximal cone containing `target`
/// is replaced by one cone per ray of `target`, with that ray swapped for
/// `new_ray`. The first piece keeps the old cone's index, the rest are
/// appended in order.
ConeSubdivision subdivide_cones(const std::vector<ConeIndices>& cones, const ConeIndices& target,
                                int new_ray);

/// Equivariant blow-up at the cone spanned by `target` (a maximal cone or a
/// wall). The new ray is the primitive part of the sum of the target's rays.
Fan blow_up(const Fan& fan, const ConeIndices& target);
ParamFan blow_up(const ParamFan& fan, const ConeIndices& target);

/// Substitutes an in-bounds assignment. Throws OutOfBounds or DegenerateRay.
Fan instantiate(const ParamFan& fan, const Assignment& values);

/// Canonical representative of the unimodular equivalence class of a
/// smooth complete fan.
Fan fan_canonical_form(const Fan& fan);

/// Compact text encoding used as a hash key for canonical fans.
std::string fan_key(const Fan& fan);

std::string describe(const Fan& fan);

}  // namespace smoothpoly
