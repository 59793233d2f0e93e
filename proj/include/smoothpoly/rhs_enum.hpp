#pragma once

// Right-hand sides b for which {x : A x <= b} is a smooth lattice polytope
// with a given normal fan and at most N lattice points.

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "smoothpoly/fan.hpp"
#include "smoothpoly/polytope.hpp"

namespace smoothpoly {

/// Lattice length of the edge dual to a wall as a linear form in b.
struct EdgeLengthForm {
  Wall wall;
  std::map<int, Int> coefficients;  // ray index -> coefficient, zeros omitted
  Int coefficient_sum;              // sum of the edge parameters of the wall

  Int evaluate(const IntVector& b) const;
};

EdgeLengthForm edge_length_form(const Fan& fan, const Wall& wall);

/// The fan moved by a unimodular map so that its first d rays are the unit
/// vectors: the lexicographically least maximal cone becomes the standard
/// cone and its rays are listed first.
struct StandardFan {
  Fan fan;
  IntMatrix transform;           // new ray = transform * old ray
  std::vector<int> original_ray;  // new index -> old index
};

StandardFan standardize(const Fan& fan);

/// Order in which the edge lengths determine b once the rays of `pinned`
/// have b = 0. Depends only on the cone combinatorics.
struct RhsPlan {
  struct Step {
    int ray;                             // fixed by the edge length of `wall`
    std::size_t wall;
    std::vector<std::size_t> completes;  // walls whose rays are all known afterwards
  };

  std::size_t dim = 0;
  std::size_t ray_count = 0;
  std::size_t cone_count = 0;
  std::vector<Wall> walls;
  ConeIndices pinned;
  std::vector<Step> steps;
};

RhsPlan make_rhs_plan(std::size_t dim, std::size_t ray_count, const std::vector<ConeIndices>& cones,
                      const ConeIndices& pinned);

/// B(F,N) over the variables b (one per ray of the standardized fan).
/// The upper edge length bound d*l <= N - sum(a) - d has non-primitive rows.
struct RhsPolytope {
  StandardFan standard;
  std::vector<EdgeLengthForm> forms;  // one per wall of plan.walls
  RhsPlan plan;
  HPolytope h;
};

RhsPolytope build_rhs_polytope(const Fan& fan, std::size_t max_points);

/// Integer points of B(F,N) in lexicographic order, in the coordinates of
/// the standardized fan. With a limit, stops after that many points.
std::vector<IntVector> enumerate_rhs(const RhsPolytope& rhs, std::size_t max_points,
                                     std::optional<std::size_t> limit = std::nullopt);
std::vector<IntVector> enumerate_rhs(const Fan& fan, std::size_t max_points);

/// Same from the edge parameters of plan.walls, with b = 0 on the pinned rays.
std::vector<IntVector> enumerate_rhs(const RhsPlan& plan, const std::vector<IntVector>& wall_coeffs,
                                     std::size_t max_points,
                                     std::optional<std::size_t> limit = std::nullopt);

/// Whether B(F,N) has an integer point.
bool has_rhs(const Fan& fan, std::size_t max_points);

enum class RealizationStatus { Accepted, TooManyPoints, Mismatch };

struct Realization {
  RealizationStatus status = RealizationStatus::Mismatch;
  LatticePolytope polytope;       // set unless Mismatch
  std::size_t lattice_points = 0;  // exact if Accepted, > N if TooManyPoints
};

/// Builds P(A,b) for the standardized fan `fan` and keeps it if its normal
/// fan is `fan` and it has at most N lattice points. Throws
/// NonIntegralVertex or InvariantViolation on internal inconsistencies.
Realization realize_and_filter(const Fan& fan, const IntVector& b, std::size_t max_points);

}  // namespace smoothpoly
