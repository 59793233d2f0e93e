#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "smoothpoly/exact_linalg.hpp"

namespace smoothpoly {

using Assignment = std::map<std::string, Int>;

/// Integer polynomial in named parameters, e.g. `-1`, `a+1`, `c-ab`.
/// Ray coordinates of the parametric seed fans are affine; products only
/// appear in derived quantities such as edge parameters and determinants.
/// Stored canonically: a map from sorted variable multisets to non-zero
/// coefficients.
class ParamExpr {
 public:
  using Monomial = std::vector<std::string>;  // sorted, may repeat

  ParamExpr() = default;
  ParamExpr(const Int& constant);  // NOLINT(google-explicit-constructor)
  ParamExpr(long long constant) : ParamExpr(Int(constant)) {}  // NOLINT
  ParamExpr(int constant) : ParamExpr(Int(constant)) {}        // NOLINT

  static ParamExpr variable(const std::string& name);

  /// Parses the compact notation used for fan annotations: terms separated by
  /// `+`/`-`, each an optional integer followed by single-letter variables
  /// ("2a+1", "c-ab", "-a").
  static ParamExpr parse(const std::string& text);

  bool is_constant() const;
  bool is_zero() const { return terms_.empty(); }
  Int constant_term() const;
  std::set<std::string> variables() const;
  int degree() const;

  Int evaluate(const Assignment& values) const;

  const std::map<Monomial, Int>& terms() const { return terms_; }

  ParamExpr& operator+=(const ParamExpr& o);
  ParamExpr& operator-=(const ParamExpr& o);
  friend ParamExpr operator+(ParamExpr a, const ParamExpr& b) { return a += b; }
  friend ParamExpr operator-(ParamExpr a, const ParamExpr& b) { return a -= b; }
  friend ParamExpr operator*(const ParamExpr& a, const ParamExpr& b);
  friend ParamExpr operator-(const ParamExpr& a);
  friend bool operator==(const ParamExpr&, const ParamExpr&) = default;
  friend auto operator<=>(const ParamExpr& a, const ParamExpr& b) { return a.terms_ <=> b.terms_; }

  std::string str() const;

 private:
  void add_term(const Monomial& m, const Int& c);
  std::map<Monomial, Int> terms_;
};

using ParamVector = std::vector<ParamExpr>;

ParamExpr determinant(const std::vector<ParamVector>& m);

}  // namespace smoothpoly
