#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "smoothpoly/iso_dedup.hpp"
#include "support.hpp"

using namespace smoothpoly;

namespace {

LatticePolytope hull(std::size_t dim, std::initializer_list<std::initializer_list<long long>> rows) {
  std::vector<IntVector> pts;
  for (auto r : rows) {
    IntVector v;
    for (auto x : r) v.emplace_back(x);
    pts.push_back(std::move(v));
  }
  return convex_hull(dim, pts);
}

IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

ClassificationRecord record_of(const LatticePolytope& p, const std::string& seed) {
  ClassificationRecord r;
  r.dimension = p.dim;
  r.vertices = p.vertices;
  r.num_vertices = p.vertices.size();
  r.num_lattice_points = lattice_points(to_hpolytope(p)).size();
  r.provenance.seed = seed;
  r.key = canonical_form(p).key;
  return r;
}

}  // namespace

TEST_CASE("lattice_isomorphic") {
  const auto sq = hull(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto moved = hull(2, {{5, 7}, {6, 7}, {5, 8}, {6, 8}});
  const auto w = lattice_isomorphic(sq, moved);
  REQUIRE(w);
  CHECK(verify_witness(sq, moved, *w));
  CHECK(lattice_isomorphic(hull(2, {{0, 0}, {1, 0}, {0, 1}}), hull(2, {{0, 0}, {2, 0}, {0, 2}})) == std::nullopt);
  const auto p = hull(2, {{1, 0}, {0, 0}, {0, 1}, {3, 1}});
  const auto mirror = hull(2, {{-1, 0}, {0, 0}, {0, 1}, {-3, 1}});
  const auto m = lattice_isomorphic(p, mirror);
  REQUIRE(m);
  CHECK(verify_witness(p, mirror, *m));
  // A wrong witness is rejected.
  IsoWitness bad = *m;
  bad.t = add(bad.t, iv({1, 0}));
  CHECK_FALSE(verify_witness(p, mirror, bad));
}

TEST_CASE("canonical_form") {
  const auto sq = hull(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  const auto key = canonical_form(sq).key;
  std::mt19937 rng(13);
  for (int k = 0; k < 100; ++k) {
    const auto q = testing::transform(sq, testing::random_unimodular(2, rng), iv({k % 7, -k % 5}));
    CHECK(canonical_form(q).key == key);
  }
  CHECK(canonical_form(hull(2, {{0, 0}, {2, 0}, {0, 1}, {2, 1}})).key != key);
  CHECK(testing::check_canonical_invariance(hull(3, {{0, 0, 0}, {2, 0, 0}, {0, 1, 0}, {0, 0, 1}, {2, 1, 0},
                                                     {2, 0, 1}, {0, 1, 1}, {2, 1, 1}}),
                                            100, rng)
            .empty());
}

TEST_CASE("dedup") {
  const auto sq = hull(2, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
  std::vector<ClassificationRecord> rs;
  for (int k = 0; k < 3; ++k) {
    rs.push_back(record_of(testing::transform(sq, identity_matrix(2), iv({k, 2 * k})), "s" + std::to_string(2 - k)));
  }
  rs.push_back(record_of(hull(2, {{0, 0}, {1, 0}, {0, 1}}), "t"));
  const auto out = dedup(rs);
  REQUIRE(out.size() == 2);
  CHECK(out[0].num_lattice_points == 3);
  CHECK(out[1].provenance.seed == "s0");
  CHECK(testing::check_dedup_idempotent(rs).empty());
}
