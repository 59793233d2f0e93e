#include "smoothpoly/param_expr.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace smoothpoly {

ParamExpr::ParamExpr(const Int& constant) {
  if (constant != 0) terms_[{}] = constant;
}

ParamExpr ParamExpr::variable(const std::string& name) {
  ParamExpr e;
  e.terms_[{name}] = 1;
  return e;
}

ParamExpr ParamExpr::parse(const std::string& text) {
  ParamExpr out;
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_ws();
  if (i == text.size()) throw Error(ErrorCode::Shape, "empty expression");
  while (i < text.size()) {
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      ++i;
      skip_ws();
    }
    Int coeff = 1;
    bool have_digits = false;
    std::string digits;
    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      digits += text[i++];
      have_digits = true;
    }
    if (have_digits) coeff = Int(digits);
    Monomial mono;
    while (i < text.size() && std::isalpha(static_cast<unsigned char>(text[i]))) {
      mono.emplace_back(1, text[i++]);
    }
    if (!have_digits && mono.empty()) {
      throw Error(ErrorCode::Shape, "cannot parse expression '" + text + "'");
    }
    std::sort(mono.begin(), mono.end());
    out.add_term(mono, coeff * sign);
    skip_ws();
    if (i < text.size() && text[i] != '+' && text[i] != '-') {
      throw Error(ErrorCode::Shape, "unexpected character in '" + text + "'");
    }
  }
  return out;
}

void ParamExpr::add_term(const Monomial& m, const Int& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool ParamExpr::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Int ParamExpr::constant_term() const {
  auto it = terms_.find({});
  return it == terms_.end() ? Int(0) : it->second;
}

std::set<std::string> ParamExpr::variables() const {
  std::set<std::string> vars;
  for (const auto& [mono, c] : terms_) vars.insert(mono.begin(), mono.end());
  return vars;
}

int ParamExpr::degree() const {
  int d = 0;
  for (const auto& [mono, c] : terms_) d = std::max(d, static_cast<int>(mono.size()));
  return d;
}

Int ParamExpr::evaluate(const Assignment& values) const {
  Int total = 0;
  for (const auto& [mono, c] : terms_) {
    Int t = c;
    for (const auto& v : mono) {
      auto it = values.find(v);
      if (it == values.end()) throw Error(ErrorCode::OutOfBounds, "no value for parameter " + v);
      t *= it->second;
    }
    total += t;
  }
  return total;
}

ParamExpr& ParamExpr::operator+=(const ParamExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

ParamExpr& ParamExpr::operator-=(const ParamExpr& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

ParamExpr operator*(const ParamExpr& a, const ParamExpr& b) {
  ParamExpr out;
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      ParamExpr::Monomial m;
      m.reserve(ma.size() + mb.size());
      std::merge(ma.begin(), ma.end(), mb.begin(), mb.end(), std::back_inserter(m));
      out.add_term(m, ca * cb);
    }
  }
  return out;
}

ParamExpr operator-(const ParamExpr& a) {
  ParamExpr out;
  for (const auto& [m, c] : a.terms_) out.terms_[m] = -c;
  return out;
}

std::string ParamExpr::str() const {
  if (terms_.empty()) return "0";
  // higher degree first, constant last, reads like "c-ab" / "2a+1"
  std::vector<std::pair<Monomial, Int>> ordered(terms_.begin(), terms_.end());
  std::stable_sort(ordered.begin(), ordered.end(), [](const auto& x, const auto& y) {
    if (x.first.empty() != y.first.empty()) return y.first.empty();
    return x.first < y.first;
  });
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, c] : ordered) {
    Int mag = c < 0 ? Int(-c) : c;
    if (c < 0) {
      os << '-';
    } else if (!first) {
      os << '+';
    }
    if (mono.empty() || mag != 1) os << mag;
    for (const auto& v : mono) os << v;
    first = false;
  }
  return os.str();
}

ParamExpr determinant(const std::vector<ParamVector>& m) {
  const std::size_t n = m.size();
  if (n == 0) return ParamExpr(1);
  for (const auto& row : m) {
    if (row.size() != n) throw Error(ErrorCode::Shape, "determinant needs a square matrix");
  }
  if (n == 1) return m[0][0];
  if (n == 2) return m[0][0] * m[1][1] - m[0][1] * m[1][0];
  ParamExpr total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    std::vector<ParamVector> minor;
    for (std::size_t i = 1; i < n; ++i) {
      ParamVector row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(m[i][k]);
      }
      minor.push_back(std::move(row));
    }
    ParamExpr term = m[0][j] * determinant(minor);
    if (j % 2 == 0) {
      total += term;
    } else {
      total -= term;
    }
  }
  return total;
}

}  // namespace smoothpoly
