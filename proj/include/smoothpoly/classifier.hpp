#pragma once

// End-to-end classification runs and their serialization.

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "smoothpoly/blowup_search.hpp"
#include "smoothpoly/iso_dedup.hpp"

namespace smoothpoly {

struct RunConfig {
  std::size_t dimension = 2;
  std::size_t max_points = 12;
  std::size_t threads = 1;
  bool allow_large = false;        // d = 3 beyond 12 points
  std::ostream* trace = nullptr;   // search tree trace
};

struct Diagnostics {
  std::uint64_t nodes_visited = 0;
  std::uint64_t fans_tested = 0;
  std::uint64_t rhs_enumerated = 0;
  std::uint64_t realizations_rejected = 0;
};

struct ClassificationResult {
  std::size_t dimension = 0;
  std::size_t max_points = 0;
  std::vector<ClassificationRecord> records;
  std::map<std::size_t, std::size_t> histogram;  // vertex count -> records
  Diagnostics diagnostics;
};

/// Throws ConfigError for unsupported configurations.
void validate(const RunConfig& cfg);

ClassificationResult run_classify(const RunConfig& cfg);

/// Node count of the blow-up tree of a seed, pruned or exhaustive.
std::uint64_t run_count_tree(const std::string& seed, std::size_t max_cones, bool pruned = true);

PolygonStats run_stats(std::size_t max_points, std::size_t threads = 1);

/// Rows l, i, b for k = 3..8; missing entries print as ">N" in row l and
/// "-" in rows i and b.
std::string render_stats(const PolygonStats& stats);

std::string render_seeds(std::size_t max_points, const PolygonStats& stats);

nlohmann::ordered_json to_json(const ClassificationResult& result);
std::string to_text(const ClassificationResult& result);

/// Vertex-count histogram with zero rows for counts a simple polytope of
/// this dimension can have between the smallest and largest present.
std::map<std::size_t, std::size_t> vertex_histogram(std::size_t dim,
                                                    const std::vector<ClassificationRecord>& records);

}  // namespace smoothpoly
