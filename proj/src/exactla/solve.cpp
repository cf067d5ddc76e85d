#include "orthogrid/errors.hpp"
#include "orthogrid/exactla/exactla.hpp"

namespace orthogrid {

RatVector solve_rational(const RatMatrix& a, const RatVector& b) {
  if (!a.square() || a.rows() != b.size()) throw DomainError("solve_rational: shape mismatch");
  const std::size_t n = a.rows();
  RatMatrix m = a;
  RatVector x = b;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) throw DomainError("solve_rational: singular matrix");
    if (p != k) {
      m.swap_rows(p, k);
      std::swap(x[p], x[k]);
    }
    const Rational pivot = m(k, k);
    for (std::size_t j = k; j < n; ++j) m(k, j) /= pivot;
    x[k] /= pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || m(i, k) == 0) continue;
      const Rational f = m(i, k);
      for (std::size_t j = k; j < n; ++j) m(i, j) -= f * m(k, j);
      x[i] -= f * x[k];
    }
  }
  return x;
}

RatVector solve_rational(const IntMatrix& a, const IntVector& b) {
  return solve_rational(to_rational(a), to_rational(b));
}

RatMatrix inverse(const RatMatrix& a) {
  if (!a.square()) throw DomainError("inverse: non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix inv(n, n);
  for (std::size_t j = 0; j < n; ++j) {
    RatVector e(n, Rational(0));
    e[j] = 1;
    inv.set_column(j, solve_rational(a, e));
  }
  return inv;
}

}  // namespace orthogrid
