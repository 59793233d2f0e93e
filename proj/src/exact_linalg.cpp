#include "smoothpoly/exact_linalg.hpp"

#include <sstream>
#include <utility>

namespace smoothpoly {

namespace {

void require_square(const IntMatrix& m, const char* op) {
  for (const auto& row : m) {
    if (row.size() != m.size()) {
      throw Error(ErrorCode::Shape, std::string(op) + " needs a square matrix");
    }
  }
}

Int bareiss_determinant(IntMatrix a) {
  const std::size_t n = a.size();
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && a[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(a[k], a[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        // exact by Sylvester's identity
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
      }
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

IntMatrix minor_of(const IntMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  IntMatrix out;
  out.reserve(m.size() - 1);
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i == skip_row) continue;
    IntVector row;
    row.reserve(m.size() - 1);
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (j != skip_col) row.push_back(m[i][j]);
    }
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace

PrimitiveResult normalize_primitive(std::span<const Int> v) {
  Int g = content(v);
  if (g == 0) throw Error(ErrorCode::ZeroVector, "cannot normalize the zero vector");
  IntVector p(v.begin(), v.end());
  if (g != 1) {
    for (auto& x : p) x /= g;
  }
  return {std::move(p), g};
}

bool is_primitive(std::span<const Int> v) { return content(v) == 1; }

bool is_zero(std::span<const Int> v) {
  for (const auto& x : v) {
    if (x != 0) return false;
  }
  return true;
}

Int content(std::span<const Int> v) {
  Int g = 0;
  for (const auto& x : v) {
    if (x != 0) g = boost::multiprecision::gcd(g, x);
    if (g == 1) break;
  }
  return g < 0 ? Int(-g) : g;
}

Int determinant(const IntMatrix& m) {
  require_square(m, "determinant");
  switch (m.size()) {
    case 0:
      return 1;
    case 1:
      return m[0][0];
    case 2:
      return m[0][0] * m[1][1] - m[0][1] * m[1][0];
    case 3:
      return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
             m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
             m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
    default:
      return bareiss_determinant(m);
  }
}

IntMatrix inverse_unimodular(const IntMatrix& m) {
  require_square(m, "inverse_unimodular");
  const Int det = determinant(m);
  if (det != 1 && det != -1) {
    throw Error(ErrorCode::NotUnimodular, "determinant is " + det.str());
  }
  const std::size_t n = m.size();
  IntMatrix inv(n, IntVector(n));
  if (n == 1) {
    inv[0][0] = det;
    return inv;
  }
  if (n == 2) {
    inv[0][0] = m[1][1] * det;
    inv[0][1] = -m[0][1] * det;
    inv[1][0] = -m[1][0] * det;
    inv[1][1] = m[0][0] * det;
    return inv;
  }
  // inverse = adj(m) / det = adj(m) * det for det = +-1
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      Int cof = determinant(minor_of(m, i, j));
      if ((i + j) % 2 == 1) cof = -cof;
      inv[j][i] = cof * det;
    }
  }
  return inv;
}

RatVector solve_rational(const IntMatrix& m, std::span<const Int> y) {
  const std::size_t rows = m.size();
  if (rows != y.size()) throw Error(ErrorCode::Shape, "right-hand side length mismatch");
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  RatMatrix a(rows, RatVector(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    if (m[i].size() != cols) throw Error(ErrorCode::Shape, "ragged matrix");
    for (std::size_t j = 0; j < cols; ++j) a[i][j] = m[i][j];
    a[i][cols] = y[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const Rational f = a[i][c] / a[r][c];
      for (std::size_t j = c; j <= cols; ++j) a[i][j] -= f * a[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < rows; ++i) {
    if (a[i][cols] != 0) throw Error(ErrorCode::Inconsistent, "right-hand side not in column span");
  }
  if (r < cols) throw Error(ErrorCode::Singular, "columns are linearly dependent");
  RatVector x(cols);
  for (std::size_t i = 0; i < r; ++i) x[pivot_col[i]] = a[i][cols] / a[i][pivot_col[i]];
  return x;
}

std::size_t rank(const IntMatrix& m) {
  if (m.empty()) return 0;
  IntMatrix a = m;
  const std::size_t rows = a.size();
  const std::size_t cols = a[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[r], a[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const Int f = a[i][c];
      const Int g = a[r][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] = a[i][j] * g - a[r][j] * f;
      Int h = content(a[i]);
      if (h > 1) {
        for (auto& x : a[i]) x /= h;
      }
    }
    ++r;
  }
  return r;
}

IntMatrix identity_matrix(std::size_t n) {
  IntMatrix id(n, IntVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) id[i][i] = 1;
  return id;
}

IntMatrix transpose(const IntMatrix& m) {
  if (m.empty()) return {};
  IntMatrix t(m[0].size(), IntVector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  }
  return t;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
  if (a.empty()) return {};
  if (a[0].size() != b.size()) throw Error(ErrorCode::Shape, "multiply: inner dimensions differ");
  const std::size_t inner = b.size();
  const std::size_t cols = b.empty() ? 0 : b[0].size();
  IntMatrix c(a.size(), IntVector(cols, 0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

IntVector apply(const IntMatrix& m, std::span<const Int> v) {
  IntVector out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != v.size()) throw Error(ErrorCode::Shape, "apply: dimension mismatch");
    out[i] = dot(m[i], v);
  }
  return out;
}

Int dot(std::span<const Int> a, std::span<const Int> b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector add(std::span<const Int> a, std::span<const Int> b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

IntVector subtract(std::span<const Int> a, std::span<const Int> b) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

IntVector scale(std::span<const Int> a, const Int& s) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] * s;
  return out;
}

IntVector negate(std::span<const Int> a) {
  IntVector out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

IntMatrix from_columns(const std::vector<IntVector>& columns) {
  if (columns.empty()) return {};
  IntMatrix m(columns[0].size(), IntVector(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    for (std::size_t i = 0; i < columns[j].size(); ++i) m[i][j] = columns[j][i];
  }
  return m;
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (q * b != a && ((a < 0) == (b < 0))) q += 1;
  return q;
}

Int floor_of(const Rational& q) {
  return floor_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

Int ceil_of(const Rational& q) {
  return ceil_div(boost::multiprecision::numerator(q), boost::multiprecision::denominator(q));
}

std::string to_string(std::span<const Int> v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) os << ',';
    os << v[i];
  }
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.size(); ++i) {
    if (i) os << ',';
    os << to_string(m[i]);
  }
  os << ']';
  return os.str();
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::Shape: return "Shape";
    case ErrorCode::NotUnimodular: return "NotUnimodular";
    case ErrorCode::Inconsistent: return "Inconsistent";
    case ErrorCode::Singular: return "Singular";
    case ErrorCode::Unbounded: return "Unbounded";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotFullDim: return "NotFullDim";
    case ErrorCode::NotComplete: return "NotComplete";
    case ErrorCode::NonIntegral: return "NonIntegral";
    case ErrorCode::ParametricWallUnsupported: return "ParametricWallUnsupported";
    case ErrorCode::InvalidCone: return "InvalidCone";
    case ErrorCode::OutOfBounds: return "OutOfBounds";
    case ErrorCode::DegenerateRay: return "DegenerateRay";
    case ErrorCode::RealizationMismatch: return "RealizationMismatch";
    case ErrorCode::NonIntegralVertex: return "NonIntegralVertex";
    case ErrorCode::UnknownSeed: return "UnknownSeed";
    case ErrorCode::ConfigError: return "ConfigError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

}  // namespace smoothpoly
