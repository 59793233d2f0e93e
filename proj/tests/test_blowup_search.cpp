#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>
#include <sstream>

#include "smoothpoly/blowup_search.hpp"
#include "smoothpoly/classifier.hpp"
#include "smoothpoly/rhs_enum.hpp"
#include "support.hpp"

using namespace smoothpoly;

namespace {

template <class F>
ErrorCode code_of(F&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return ErrorCode::InvariantViolation;
}

PolygonStats reference_stats() {
  PolygonStats s;
  s.max_points = 12;
  s.by_vertices = {{3, {3, 0, 3}}, {4, {4, 0, 4}}, {5, {8, 1, 7}}, {6, {7, 1, 6}}, {8, {12, 4, 8}}};
  return s;
}

}  // namespace

TEST_CASE("seed registry") {
  CHECK(seed_names(2) == std::vector<std::string>{"F_p", "F_a"});
  CHECK(seed_names(3).size() == 5);
  for (std::size_t d : {2, 3}) {
    for (const auto& name : seed_names(d)) {
      const auto s = make_seed(name, 12);
      CHECK_NOTHROW(check_annotations(s));
      CHECK(s.fan.dim == d);
    }
  }
  const auto t = make_seed("3^4", 12);
  CHECK(t.fan.rays.size() == 4);
  CHECK(t.fan.cones.size() == 4);
  CHECK(t.fan.parameters().empty());
  const auto fa = make_seed("F_a", 12);
  CHECK(fa.fan.bounds.at("a") == ParamBounds{0, 12});
  CHECK(fa.fan.excluded.at("a") == std::set<Int>{1});
  CHECK(code_of([] { make_seed("nope", 12); }) == ErrorCode::UnknownSeed);
  CHECK(excluded_fans().size() == 14);
}

TEST_CASE("seed instances are smooth and complete") {
  for (const auto& name : seed_names(3)) {
    const auto fans = instantiate_all(root_node(make_seed(name, 6)));
    CHECK_FALSE(fans.empty());
    for (const auto& f : fans) {
      CHECK(is_smooth_fan(f).smooth);
      CHECK(is_complete_fan(f));
    }
  }
}

TEST_CASE("polygon_stats from the 2D classification") {
  const auto s = run_stats(12);
  for (const auto& [k, e] : reference_stats().by_vertices) {
    REQUIRE(s.at(k));
    CHECK(s.at(k)->l == e.l);
    CHECK(s.at(k)->i == e.i);
    CHECK(s.at(k)->b == e.b);
    CHECK(s.at(k)->l == s.at(k)->i + s.at(k)->b);
  }
  CHECK_FALSE(s.at(7));
  CHECK(render_stats(s).find(">12") != std::string::npos);
}

TEST_CASE("polygon_criterion") {
  const auto s = reference_stats();
  auto r = polygon_criterion({{4, 5}, {5, 2}}, s);
  CHECK(r.bound == std::size_t{14});
  CHECK_FALSE(r.passes);
  r = polygon_criterion({{3, 4}}, s);
  CHECK(r.bound == std::size_t{4});
  CHECK(r.passes);
  r = polygon_criterion({{3, 1}, {4, 3}, {5, 3}}, s);
  CHECK(r.bound == std::size_t{15});
  CHECK_FALSE(r.passes);
  r = polygon_criterion({{3, 2}, {4, 4}, {7, 2}}, s);
  CHECK_FALSE(r.bound);
  CHECK_FALSE(r.passes);
  const auto t = make_seed("3^4", 12).fan;
  CHECK(polygon_criterion(t.rays.size(), t.cones, s).bound == std::size_t{4});
}

TEST_CASE("tree counts") {
  CHECK(count_tree(root_node(make_seed("F_p", 12)), 3, true) == 1);
  CHECK(count_tree(root_node(make_seed("F_p", 12)), 12, true) == 58785);
  CHECK(count_tree(root_node(make_seed("F_a", 12)), 12, true) == 35072);
  // 1 + (3! + ... + (k-1)!)/2 nodes without pruning.
  CHECK(count_tree(root_node(make_seed("F_p", 12)), 6, false) == 1 + (6 + 24 + 120) / 2);
  for (const auto& name : {"F_p", "F_a", "3^4", "4^6"}) {
    const auto root = root_node(make_seed(name, 12));
    SearchOptions opts;
    opts.max_cones = 10;
    opts.collect = false;
    CHECK(enumerate_blowups(root, opts).nodes_visited == count_tree(root, 10, true));
    opts.pruned = false;
    CHECK(enumerate_blowups(root, opts).nodes_visited == count_tree(root, 10, false));
  }
}

TEST_CASE("search nodes carry one flag per cone and wall") {
  const auto root = root_node(make_seed("(3^24^3)'", 12));
  SearchOptions opts;
  opts.max_cones = 10;
  for (const auto& node : enumerate_blowups(root, opts).candidates) {
    CHECK(node.cone_flags.size() == node.fan.cones.size());
    const auto walls = walls_of(node.fan.dim, node.fan.cones);
    CHECK(node.wall_flags.size() == walls.size());
    for (const auto& w : walls) CHECK(node.wall_flags.count(w.rays) == 1);
    CHECK(node.fan.cones.size() <= 10);
  }
}

TEST_CASE("trace output") {
  std::ostringstream trace;
  SearchOptions opts;
  opts.max_cones = 5;
  opts.trace = &trace;
  const auto r = enumerate_blowups(root_node(make_seed("F_p", 12)), opts);
  std::size_t lines = 0;
  for (char c : trace.str()) lines += c == '\n' ? 1 : 0;
  CHECK(lines == r.nodes_visited);
}

TEST_CASE("propagate_bounds") {
  const auto fa = root_node(make_seed("F_a", 12));
  const auto b = propagate_bounds(fa, {0, 1});
  CHECK(b.at("a") == ParamBounds{-1, 13});
  const auto t = root_node(make_seed("3^4", 12));
  CHECK(propagate_bounds(t, {0, 1, 2}).empty());
  CHECK(propagate_bounds(t, {0, 1}).empty());
  const auto q = root_node(make_seed("(3^24^3)''", 12));
  CHECK(propagate_bounds(q, {1, 2}) == q.fan.bounds);
}

TEST_CASE("instantiate_all") {
  CHECK(instantiate_all(root_node(make_seed("F_a", 12))).size() == 12);
  CHECK(instantiate_all(root_node(make_seed("3^4", 12))).size() == 1);
  const auto s = make_seed("3^24^36^2", 12);
  CHECK(s.fan.bounds.at("a") == ParamBounds{-6, 5});
  for (const auto& f : instantiate_all(root_node(s))) {
    CHECK(is_smooth_fan(f).smooth);
    CHECK(fan_canonical_form(f) == f);
  }
}

TEST_CASE("wall_admissible") {
  CHECK(wall_admissible({Int(-1)}, 2, 12));
  CHECK_FALSE(wall_admissible({Int(9)}, 2, 12));
  CHECK(wall_admissible({Int(-1), Int(-1)}, 3, 12));
  CHECK(wall_admissible({Int(-10)}, 2, 12));
  CHECK_FALSE(wall_admissible({Int(-11)}, 2, 12));
}

TEST_CASE("admissible instances are exactly those with right-hand sides") {
  for (std::size_t dim : {2, 3}) {
    const std::size_t n = dim == 2 ? 9 : 10;
    for (const auto& name : seed_names(dim)) {
      SearchOptions opts;
      opts.max_cones = dim == 2 ? 6 : 8;
      for (const auto& node : enumerate_blowups(root_node(make_seed(name, Int(n))), opts).candidates) {
        std::set<std::string> expected, got;
        for (const auto& f : instantiate_all(node)) {
          if (has_rhs(f, n)) expected.insert(fan_key(f));
        }
        for (const auto& inst : instantiate_admissible(node, n)) {
          got.insert(fan_key(fan_canonical_form(inst.fan)));
        }
        CHECK(got == expected);
      }
    }
  }
}

TEST_CASE("pruned and exhaustive search reach the same fans") {
  CHECK(testing::check_search_equivalence(2, 6, 6).empty());
  CHECK(testing::check_search_equivalence(3, 8, 12).empty());
  // The comparison is not vacuous.
  std::set<std::string> keys;
  SearchOptions opts;
  opts.max_cones = 6;
  for (const auto& node : enumerate_blowups(root_node(make_seed("F_p", 6)), opts).candidates) {
    for (const auto& f : instantiate_all(node)) keys.insert(fan_key(f));
  }
  CHECK(keys.size() > 3);
}
