#pragma once

// Integer kernels templated on the ring type so that the hot per-vector
// paths can run on Checked64 (overflow-trapping int64) and fall back to
// Integer when a trap fires. Every instantiation is exact.

#include <cstddef>
#include <utility>
#include <vector>

#include "orthogrid/errors.hpp"
#include "orthogrid/exactla/integer.hpp"
#include "orthogrid/exactla/matrix.hpp"

namespace orthogrid::kernels {

// Fraction-free Gaussian elimination (Bareiss) with row pivoting.
template <typename Z>
Z bareiss_determinant(Matrix<Z> a) {
  const std::size_t n = a.rows();
  if (!a.square()) throw DomainError("determinant of a non-square matrix");
  if (n == 0) return Z(1);
  Z sign(1);
  Z prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == Z(0)) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == Z(0)) ++p;
      if (p == n) return Z(0);
      a.swap_rows(k, p);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Z t = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        a(i, j) = t / prev;
      }
      a(i, k) = Z(0);
    }
    prev = a(k, k);
  }
  Z det = a(n - 1, n - 1);
  return sign == Z(1) ? det : Z(-det);
}

// Unimodular completion of a primitive row vector by Euclidean column
// operations: returns U with v^T U = e_1^T and |det U| = 1. Column 0 of U is
// a vector w with <w, v> = 1; the remaining columns span Z^d cap v^perp.
// Pivot is the smallest nonzero |entry| (lowest index on ties); remainders
// are truncated toward zero.
template <typename Z>
Matrix<Z> unimodular_completion(const std::vector<Z>& v) {
  const std::size_t d = v.size();
  if (d == 0) throw DomainError("unimodular completion of an empty vector");
  std::vector<Z> r = v;
  Matrix<Z> u = Matrix<Z>::identity(d);
  std::size_t pivot = d;
  for (;;) {
    pivot = d;
    std::size_t nonzero = 0;
    for (std::size_t i = 0; i < d; ++i) {
      if (r[i] == Z(0)) continue;
      ++nonzero;
      if (pivot == d || abs(r[i]) < abs(r[pivot])) pivot = i;
    }
    if (pivot == d) throw DomainError("zero vector has no unimodular completion");
    if (nonzero == 1) break;
    for (std::size_t j = 0; j < d; ++j) {
      if (j == pivot || r[j] == Z(0)) continue;
      Z q = r[j] / r[pivot];
      if (q == Z(0)) continue;
      r[j] -= q * r[pivot];
      for (std::size_t i = 0; i < d; ++i) u(i, j) -= q * u(i, pivot);
    }
  }
  if (abs(r[pivot]) != Z(1)) throw DomainError("vector is not primitive");
  if (r[pivot] < Z(0)) {
    for (std::size_t i = 0; i < d; ++i) u(i, pivot) = -u(i, pivot);
  }
  // Move the pivot column to the front, keep the others in order.
  Matrix<Z> out(d, d);
  for (std::size_t i = 0; i < d; ++i) out(i, 0) = u(i, pivot);
  std::size_t c = 1;
  for (std::size_t j = 0; j < d; ++j) {
    if (j == pivot) continue;
    for (std::size_t i = 0; i < d; ++i) out(i, c) = u(i, j);
    ++c;
  }
  return out;
}

template <typename Z>
Z dot(const std::vector<Z>& a, const std::vector<Z>& b) {
  Z s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Gram matrix of a list of vectors under the standard inner product.
template <typename Z>
Matrix<Z> gram_of(const std::vector<std::vector<Z>>& basis) {
  const std::size_t n = basis.size();
  Matrix<Z> g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Z s = dot(basis[i], basis[j]);
      g(i, j) = s;
      g(j, i) = s;
    }
  return g;
}

template <typename Z>
Z content(const Matrix<Z>& m) {
  Z g(0);
  for (const Z& x : m.data()) g = gcd(g, x);
  return g;
}

}  // namespace orthogrid::kernels
