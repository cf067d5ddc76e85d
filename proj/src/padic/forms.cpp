#include "orthogrid/errors.hpp"
#include "orthogrid/padic/padic.hpp"

namespace orthogrid {

DiagonalForm diagonalize(const RatMatrix& m) {
  if (!m.is_symmetric() || m.rows() == 0) throw DomainError("diagonalize: need a nonempty symmetric matrix");
  const std::size_t n = m.rows();
  RatMatrix a = m;
  RatMatrix p = RatMatrix::identity(n);

  // Column operation c_i += f c_j together with the matching row operation.
  auto add_multiple = [&](std::size_t i, std::size_t j, const Rational& f) {
    for (std::size_t r = 0; r < n; ++r) a(r, i) += f * a(r, j);
    for (std::size_t c = 0; c < n; ++c) a(i, c) += f * a(j, c);
    for (std::size_t r = 0; r < n; ++r) p(r, i) += f * p(r, j);
  };
  auto swap = [&](std::size_t i, std::size_t j) {
    a.swap_columns(i, j);
    a.swap_rows(i, j);
    p.swap_columns(i, j);
  };

  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap(k, j);
      } else {
        // All remaining diagonal entries vanish: e_k + e_j has q = 2 a_kj.
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) throw DomainError("diagonalize: singular matrix");
        add_multiple(k, j, 1);
      }
    }
    for (std::size_t j = k + 1; j < n; ++j) {
      if (a(k, j) == 0) continue;
      add_multiple(j, k, -a(k, j) / a(k, k));
    }
  }
  DiagonalForm out;
  out.transform = std::move(p);
  for (std::size_t i = 0; i < n; ++i) out.entries.push_back(a(i, i));
  return out;
}

DiagonalForm diagonalize(const IntMatrix& m) { return diagonalize(to_rational(m)); }

int hasse_invariant(const std::vector<Rational>& diagonal, std::int64_t place) {
  int s = 1;
  for (std::size_t i = 0; i < diagonal.size(); ++i)
    for (std::size_t j = i + 1; j < diagonal.size(); ++j) s *= hilbert_symbol(diagonal[i], diagonal[j], place);
  return s;
}

int hasse_invariant(const RatMatrix& m, std::int64_t place) { return hasse_invariant(diagonalize(m).entries, place); }
int hasse_invariant(const IntMatrix& m, std::int64_t place) { return hasse_invariant(to_rational(m), place); }

bool is_isotropic(const RatMatrix& m, std::int64_t place) {
  const std::size_t n = m.rows();
  if (n < 2) throw DomainError("is_isotropic: dimension must be at least 2");
  const std::vector<Rational> a = diagonalize(m).entries;
  if (place == kInfinity) {
    bool pos = false, neg = false;
    for (const auto& x : a) (x > 0 ? pos : neg) = true;
    return pos && neg;
  }
  Rational det = 1;
  for (const auto& x : a) det *= x;
  const int eps = hasse_invariant(a, place);
  switch (n) {
    case 2:
      return is_local_square(-det, place);
    case 3:
      return hilbert_symbol(-1, -det, place) == eps;
    case 4:
      return !is_local_square(det, place) || eps == hilbert_symbol(-1, -1, place);
    default:
      return true;
  }
}

bool is_isotropic(const IntMatrix& m, std::int64_t place) { return is_isotropic(to_rational(m), place); }

Rational quadratic_value(const RatMatrix& m, const RatVector& x) {
  const RatVector mx = m * x;
  Rational s = 0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * mx[i];
  return s;
}

RatMatrix reflection_matrix(const RatMatrix& m, const RatVector& u) {
  const Rational q = quadratic_value(m, u);
  if (q == 0) throw DomainError("reflection in an isotropic vector");
  const RatVector mu = m * u;
  const std::size_t n = u.size();
  RatMatrix r = RatMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) -= 2 * u[i] * mu[j] / q;
  return r;
}

}  // namespace orthogrid
