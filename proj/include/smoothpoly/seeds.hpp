#pragma once

// Oda's minimal smooth complete fans used as roots of the blow-up search.

#include <string>
#include <utility>
#include <vector>

#include "smoothpoly/fan.hpp"
#include "smoothpoly/param_expr.hpp"

namespace smoothpoly {

/// Edge parameter of one spanning ray of a wall, as drawn on the seed figure.
struct WallLabel {
  int ray;
  ParamExpr value;
};

struct WallAnnotation {
  ConeIndices rays;  // sorted
  std::vector<WallLabel> labels;
};

struct Seed {
  std::string name;
  std::vector<std::string> ray_names;
  ParamFan fan;
  std::vector<WallAnnotation> annotations;
};

/// A 3D minimal fan that never carries a polytope with <= 12 lattice points.
struct ExcludedFan {
  std::string name;
  std::vector<std::pair<int, int>> profile;  // (k, number of rays in k cones)
  std::string reason;

  std::size_t cone_count() const;
};

std::vector<std::string> seed_names(std::size_t dim);

/// Seed with its parameter bounds for polytopes with at most `max_points`
/// lattice points. Throws UnknownSeed.
Seed make_seed(const std::string& name, const Int& max_points);

std::vector<ExcludedFan> excluded_fans();

/// Compares the transcribed wall labels with symbolically computed edge
/// parameters. Throws InvariantViolation on the first disagreement.
void check_annotations(const Seed& seed);

}  // namespace smoothpoly
