#include "orthogrid/exactla/matrix.hpp"

#include <sstream>

#include "orthogrid/exactla/kernels.hpp"

namespace orthogrid {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rational(m(i, j));
  return r;
}

RatVector to_rational(const IntVector& v) {
  RatVector r;
  r.reserve(v.size());
  for (const auto& x : v) r.emplace_back(x);
  return r;
}

Integer determinant(const IntMatrix& m) { return kernels::bareiss_determinant(m); }

Rational determinant(const RatMatrix& m) {
  if (!m.square()) throw DomainError("determinant of a non-square matrix");
  RatMatrix a = m;
  const std::size_t n = a.rows();
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      a.swap_rows(p, k);
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

std::vector<Integer> leading_principal_minors(const IntMatrix& m) {
  if (!m.square()) throw DomainError("leading minors of a non-square matrix");
  std::vector<Integer> minors;
  minors.reserve(m.rows());
  for (std::size_t k = 1; k <= m.rows(); ++k) {
    IntMatrix sub(k, k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(i, j);
    minors.push_back(determinant(sub));
  }
  return minors;
}

bool is_positive_definite(const IntMatrix& g) {
  if (!g.is_symmetric() || g.rows() == 0) return false;
  for (const auto& minor : leading_principal_minors(g))
    if (minor <= 0) return false;
  return true;
}

bool is_unimodular(const IntMatrix& u) {
  if (!u.square()) return false;
  return abs(determinant(u)) == 1;
}

IntMatrix congruence(const IntMatrix& g, const IntMatrix& basis) {
  return basis.transpose() * g * basis;
}

Integer dot(const IntVector& a, const IntVector& b) {
  if (a.size() != b.size()) throw DomainError("dot: length mismatch");
  return kernels::dot(a, b);
}

Integer content(const IntMatrix& m) { return kernels::content(m); }

Integer content(const IntVector& v) {
  Integer g = 0;
  for (const auto& x : v) g = gcd(g, x);
  return g;
}

std::string to_string(const IntVector& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i].get_str();
  os << ')';
  return os.str();
}

std::string to_string(const IntMatrix& m) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i ? "," : "") << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? "," : "") << m(i, j).get_str();
    os << ']';
  }
  os << ']';
  return os.str();
}

}  // namespace orthogrid
