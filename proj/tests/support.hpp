#pragma once

// Shared helpers for the test binaries: golden data, random corpora and the
// property checks. Each check returns a list of failure descriptions.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "smoothpoly/classifier.hpp"

namespace smoothpoly::testing {

/// One vertex list per line, "(x,y) (x,y) ...".
std::vector<LatticePolytope> load_golden(const std::string& file_name);

LatticePolytope polytope_of(const ClassificationRecord& r);
std::vector<LatticePolytope> polytopes_of(const std::vector<ClassificationRecord>& records);

/// Product of elementary integer row operations, so det = +-1.
IntMatrix random_unimodular(std::size_t dim, std::mt19937& rng);
LatticePolytope transform(const LatticePolytope& p, const IntMatrix& u, const IntVector& t);

/// Full-dimensional lattice polytopes from random point sets that fail the
/// smoothness test.
std::vector<LatticePolytope> non_smooth_corpus(std::size_t count, std::mt19937& rng);

using Failures = std::vector<std::string>;

Failures check_duality(const std::vector<LatticePolytope>& smooth,
                       const std::vector<LatticePolytope>& non_smooth);

/// Edge length forms at the facet right-hand sides against the edges.
Failures check_edge_lengths(const LatticePolytope& p);

/// |c(e) cap Z^d| = d(l+1) + sum(a) on every edge by point enumeration.
Failures check_thickened_edges(const LatticePolytope& p);

/// Edge directions at both endpoints of every edge from the edge parameters.
Failures check_edge_transfer(const LatticePolytope& p);

/// Distinct canonical fans reachable from the seeds of this dimension with
/// and without pruning agree.
Failures check_search_equivalence(std::size_t dim, std::size_t max_cones, std::size_t max_points);

Failures check_canonical_invariance(const LatticePolytope& p, std::size_t trials, std::mt19937& rng);

Failures check_dedup_idempotent(const std::vector<ClassificationRecord>& records);

/// Runs the full property suite on classified 2D and 3D records.
Failures property_suite(const std::vector<ClassificationRecord>& polygons,
                        const std::vector<ClassificationRecord>& polytopes);

}  // namespace smoothpoly::testing
