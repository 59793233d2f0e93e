#pragma once

// Depth-first search over equivariant blow-ups of the seed fans.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <vector>

#include "smoothpoly/fan.hpp"
#include "smoothpoly/polytope.hpp"
#include "smoothpoly/seeds.hpp"

namespace smoothpoly {

enum class ConeFlag { AlwaysIgnore, Ignore, Consider, AlwaysConsider };

std::string_view to_string(ConeFlag f);

struct SearchNode {
  ParamFan fan;
  std::vector<ConeFlag> cone_flags;           // per maximal cone
  std::map<ConeIndices, ConeFlag> wall_flags;  // per wall (d = 3 only)
  std::vector<ConeIndices> path;              // blow-up targets, as ray index sets
};

SearchNode root_node(const Seed& seed);

/// Minimal lattice point counts of smooth k-gons with at most N points:
/// l = all points, i = interior points, b = boundary points.
struct PolygonStatsEntry {
  std::size_t l = 0;
  std::size_t i = 0;
  std::size_t b = 0;
};

struct PolygonStats {
  std::size_t max_points = 0;
  std::map<std::size_t, PolygonStatsEntry> by_vertices;  // k -> minima; missing k = none exists

  std::optional<PolygonStatsEntry> at(std::size_t k) const;
};

PolygonStats polygon_stats(const std::vector<LatticePolytope>& polygons, std::size_t max_points);

struct CriterionResult {
  bool passes = false;
  std::optional<std::size_t> bound;  // empty when some vertex figure has no polygon
};

/// Lower bound on the lattice points of a smooth 3-polytope with this normal
/// fan combinatorics, from the polygons cut out by the facets.
CriterionResult polygon_criterion(std::size_t ray_count, const std::vector<ConeIndices>& cones,
                                  const PolygonStats& stats);

/// Same bound from a degree profile (k, number of rays in k maximal cones).
CriterionResult polygon_criterion(const std::vector<std::pair<int, int>>& profile,
                                  const PolygonStats& stats);

struct SearchOptions {
  std::size_t max_cones = 12;
  bool pruned = true;
  bool collect = true;                        // keep candidate nodes
  const PolygonStats* stats = nullptr;        // d = 3 candidate filter
  std::ostream* trace = nullptr;              // one line per visited node
};

struct SearchResult {
  std::uint64_t nodes_visited = 0;
  std::vector<SearchNode> candidates;
};

SearchResult enumerate_blowups(const SearchNode& root, const SearchOptions& options);

/// Node count only; tracks cone combinatorics and flags but no ray data.
std::uint64_t count_tree(const SearchNode& root, std::size_t max_cones, bool pruned);

/// Bounds after blowing up `target`: widened by one on both sides for a
/// maximal cone, unchanged for a wall.
BoundsMap propagate_bounds(const SearchNode& node, const ConeIndices& target);

/// All in-bounds, non-excluded assignments giving a smooth complete fan,
/// canonicalized and deduplicated.
std::vector<Fan> instantiate_all(const SearchNode& node);

struct Instance {
  Fan fan;
  Assignment values;
};

/// Instances whose bounding polytope of right-hand sides B(F,N) has an
/// integer point. Assignments are pruned early by determinant and single
/// wall conditions. Not canonicalized.
std::vector<Instance> instantiate_admissible(const SearchNode& node, std::size_t max_points);

/// Necessary condition on the edge parameters of a single wall.
bool wall_admissible(const std::vector<Int>& coeffs, std::size_t dim, std::size_t max_points);

}  // namespace smoothpoly
