#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "smoothpoly/exact_linalg.hpp"
#include "support.hpp"

using namespace smoothpoly;

namespace {

IntVector iv(std::initializer_list<long long> xs) {
  IntVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

IntMatrix im(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m;
  for (auto r : rows) m.push_back(iv(r));
  return m;
}

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

}  // namespace

TEST_CASE("normalize_primitive") {
  auto r = normalize_primitive(iv({2, 4, 6}));
  CHECK(r.primitive == iv({1, 2, 3}));
  CHECK(r.factor == 2);
  r = normalize_primitive(iv({0, 0, -3}));
  CHECK(r.primitive == iv({0, 0, -1}));
  CHECK(r.factor == 3);
  r = normalize_primitive(iv({1, 0}));
  CHECK(r.primitive == iv({1, 0}));
  CHECK(r.factor == 1);
  CHECK(code_of([] { normalize_primitive(iv({0, 0})); }) == ErrorCode::ZeroVector);
}

TEST_CASE("determinant") {
  CHECK(determinant(identity_matrix(3)) == 1);
  CHECK(determinant(im({{1, 0}, {1, 1}})) == 1);
  CHECK(determinant(im({{1, 0, 0}, {0, 1, 0}, {-1, -1, -1}})) == -1);
  CHECK(determinant(im({{2, 1, 0, 0}, {1, 2, 1, 0}, {0, 1, 2, 1}, {0, 0, 1, 2}})) == 5);
  CHECK(code_of([] { determinant(im({{1, 2, 3}, {4, 5, 6}})); }) == ErrorCode::Shape);
}

TEST_CASE("inverse_unimodular") {
  CHECK(inverse_unimodular(identity_matrix(2)) == identity_matrix(2));
  CHECK(inverse_unimodular(im({{1, 0}, {1, 1}})) == im({{1, 0}, {-1, 1}}));
  CHECK(code_of([] { inverse_unimodular(im({{2, 0}, {0, 1}})); }) == ErrorCode::NotUnimodular);
}

TEST_CASE("solve_rational") {
  auto x = solve_rational(identity_matrix(3), iv({1, 0, 0}));
  CHECK(x == RatVector{1, 0, 0});
  x = solve_rational(im({{0}, {1}}), iv({0, -1}));
  CHECK(x == RatVector{-1});
  CHECK(code_of([] { solve_rational(im({{0}, {1}}), iv({1, 0})); }) == ErrorCode::Inconsistent);
  CHECK(code_of([] { solve_rational(im({{1, 2}, {2, 4}}), iv({1, 2})); }) == ErrorCode::Singular);
  x = solve_rational(im({{2, 0}, {0, 3}}), iv({1, 1}));
  CHECK(x == RatVector{Rational(1, 2), Rational(1, 3)});
}

TEST_CASE("floor and ceil division") {
  CHECK(floor_div(-13, 2) == -7);
  CHECK(ceil_div(-13, 2) == -6);
  CHECK(floor_div(11, 2) == 5);
  CHECK(ceil_div(11, 2) == 6);
  CHECK(floor_of(Rational(-1, 3)) == -1);
  CHECK(ceil_of(Rational(-1, 3)) == 0);
}

TEST_CASE("random properties") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> small(-9, 9);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(trial % 4);
    IntVector v;
    for (std::size_t i = 0; i < n; ++i) v.emplace_back(small(rng));
    if (!is_zero(v)) {
      const auto r = normalize_primitive(v);
      CHECK(scale(r.primitive, r.factor) == v);
      CHECK(is_primitive(r.primitive));
    }
    const IntMatrix m = testing::random_unimodular(n, rng);
    const IntMatrix inv = inverse_unimodular(m);
    CHECK(multiply(m, inv) == identity_matrix(n));
    CHECK(determinant(inv) == determinant(m));
    IntVector x;
    for (std::size_t i = 0; i < n; ++i) x.emplace_back(small(rng));
    IntMatrix tall = m;
    tall.push_back(IntVector(n, Int(small(rng))));
    const auto sol = solve_rational(tall, smoothpoly::apply(tall, x));
    for (std::size_t i = 0; i < n; ++i) CHECK(sol[i] == Rational(x[i]));
  }
}
