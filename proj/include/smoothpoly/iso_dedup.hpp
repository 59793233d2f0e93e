#pragma once

// Lattice isomorphism and canonical forms of smooth lattice polytopes.

#include <optional>
#include <string>
#include <vector>

#include "smoothpoly/fan.hpp"
#include "smoothpoly/param_expr.hpp"
#include "smoothpoly/polytope.hpp"

namespace smoothpoly {

struct CanonicalPolytope {
  std::vector<IntVector> vertices;  // sorted
  std::string key;
};

/// Least vertex list over all anchorings at a vertex with an ordered edge
/// basis. Requires a smooth polytope.
CanonicalPolytope canonical_form(const LatticePolytope& p);

/// U * p + t = q with det U = +-1.
struct IsoWitness {
  IntMatrix u;
  IntVector t;
};

std::optional<IsoWitness> lattice_isomorphic(const LatticePolytope& p, const LatticePolytope& q);

bool verify_witness(const LatticePolytope& p, const LatticePolytope& q, const IsoWitness& w);

struct Provenance {
  std::string seed;
  std::vector<ConeIndices> path;
  Assignment values;
  IntVector rhs;  // in the coordinates of the standardized fan

  friend bool operator==(const Provenance&, const Provenance&) = default;
  friend auto operator<=>(const Provenance&, const Provenance&) = default;
};

struct ClassificationRecord {
  std::size_t dimension = 0;
  std::vector<IntVector> vertices;  // canonical coordinates
  std::size_t num_lattice_points = 0;
  std::size_t num_vertices = 0;
  std::size_t facet_count = 0;
  Provenance provenance;
  std::string key;  // canonical key
};

/// One record per canonical key, keeping the least provenance; sorted by
/// (lattice points, vertices, key).
std::vector<ClassificationRecord> dedup(std::vector<ClassificationRecord> records);

}  // namespace smoothpoly
