#pragma once

// Exact integer / rational linear algebra. Everything here works on
// arbitrary-precision values; matrices are row-major lists of rows.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "smoothpoly/errors.hpp"

namespace smoothpoly {

using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

using IntVector = std::vector<Int>;
using IntMatrix = std::vector<IntVector>;
using RatVector = std::vector<Rational>;
using RatMatrix = std::vector<RatVector>;

struct PrimitiveResult {
  IntVector primitive;
  Int factor;  // always positive
};

/// Divides v by the gcd of its entries. The direction of v is kept, never flipped.
PrimitiveResult normalize_primitive(std::span<const Int> v);

bool is_primitive(std::span<const Int> v);
bool is_zero(std::span<const Int> v);

/// Exact determinant: cofactor expansion up to 3x3, Bareiss elimination above.
Int determinant(const IntMatrix& m);

/// Inverse of a matrix with determinant +-1; the result is integral.
IntMatrix inverse_unimodular(const IntMatrix& m);

/// Unique x with M x = y, where the columns of M are linearly independent.
/// Throws Inconsistent if y is not in the column span and Singular if the
/// columns are dependent.
RatVector solve_rational(const IntMatrix& m, std::span<const Int> y);

std::size_t rank(const IntMatrix& m);

IntMatrix identity_matrix(std::size_t n);
IntMatrix transpose(const IntMatrix& m);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntVector apply(const IntMatrix& m, std::span<const Int> v);
Int dot(std::span<const Int> a, std::span<const Int> b);

IntVector add(std::span<const Int> a, std::span<const Int> b);
IntVector subtract(std::span<const Int> a, std::span<const Int> b);
IntVector scale(std::span<const Int> a, const Int& s);
IntVector negate(std::span<const Int> a);

/// Matrix whose columns are the given vectors.
IntMatrix from_columns(const std::vector<IntVector>& columns);

/// Integer gcd of all entries (0 for the zero vector).
Int content(std::span<const Int> v);

Int floor_div(const Int& a, const Int& b);
Int ceil_div(const Int& a, const Int& b);
Int floor_of(const Rational& q);
Int ceil_of(const Rational& q);

std::string to_string(std::span<const Int> v);
std::string to_string(const IntMatrix& m);

}  // namespace smoothpoly
