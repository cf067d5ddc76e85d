#include <algorithm>

#include "orthogrid/errors.hpp"
#include "orthogrid/exactla/exactla.hpp"

namespace orthogrid {
namespace {

// Integral LLL on a Gram matrix (Cohen, integral variant). Indices are
// 1-based internally; d[0] = 1 and d[i] is the i-th leading Gram minor,
// lam[k][j] = d[j] * mu[k][j].
class GramLll {
 public:
  explicit GramLll(const IntMatrix& g)
      : n_(g.rows()), g_(g), h_(IntMatrix::identity(g.rows())), d_(n_ + 1), lam_(n_ + 1, IntVector(n_ + 1)) {}

  void run() {
    if (n_ <= 1) return;
    d_[0] = 1;
    d_[1] = gram(1, 1);
    std::size_t k = 2;
    std::size_t kmax = 1;
    while (k <= n_) {
      if (k > kmax) {
        kmax = k;
        for (std::size_t j = 1; j <= k; ++j) {
          Integer u = gram(k, j);
          for (std::size_t i = 1; i < j; ++i) u = (d_[i] * u - lam_[k][i] * lam_[j][i]) / d_[i - 1];
          if (j < k) {
            lam_[k][j] = u;
          } else {
            if (u <= 0) throw DomainError("lll_reduce_gram: Gram matrix is not positive definite");
            d_[k] = u;
          }
        }
      }
      reduce(k, k - 1);
      if (4 * d_[k] * d_[k - 2] < 3 * d_[k - 1] * d_[k - 1] - 4 * lam_[k][k - 1] * lam_[k][k - 1]) {
        swap(k, kmax);
        k = std::max<std::size_t>(2, k - 1);
        continue;
      }
      for (std::size_t l = k - 1; l-- > 1;) reduce(k, l);
      ++k;
    }
  }

  const IntMatrix& gram() const { return g_; }
  const IntMatrix& transform() const { return h_; }

 private:
  Integer& gram(std::size_t i, std::size_t j) { return g_(i - 1, j - 1); }

  void reduce(std::size_t k, std::size_t l) {
    if (2 * abs(lam_[k][l]) <= d_[l]) return;
    const Integer q = round_div(lam_[k][l], d_[l]);
    // b_k -= q b_l, applied to the Gram matrix and the transform.
    for (std::size_t j = 0; j < n_; ++j) g_(k - 1, j) -= q * g_(l - 1, j);
    for (std::size_t j = 0; j < n_; ++j) g_(j, k - 1) -= q * g_(j, l - 1);
    for (std::size_t i = 0; i < n_; ++i) h_(i, k - 1) -= q * h_(i, l - 1);
    lam_[k][l] -= q * d_[l];
    for (std::size_t i = 1; i < l; ++i) lam_[k][i] -= q * lam_[l][i];
  }

  void swap(std::size_t k, std::size_t kmax) {
    h_.swap_columns(k - 1, k - 2);
    g_.swap_columns(k - 1, k - 2);
    g_.swap_rows(k - 1, k - 2);
    for (std::size_t j = 1; j + 2 <= k; ++j) std::swap(lam_[k][j], lam_[k - 1][j]);
    const Integer lambda = lam_[k][k - 1];
    const Integer b = (d_[k - 2] * d_[k] + lambda * lambda) / d_[k - 1];
    for (std::size_t i = k + 1; i <= kmax; ++i) {
      const Integer t = lam_[i][k];
      lam_[i][k] = (d_[k] * lam_[i][k - 1] - lambda * t) / d_[k - 1];
      lam_[i][k - 1] = (b * t + lambda * lam_[i][k]) / d_[k];
    }
    d_[k - 1] = b;
  }

  std::size_t n_;
  IntMatrix g_;
  IntMatrix h_;
  IntVector d_;
  std::vector<IntVector> lam_;
};

}  // namespace

LllResult lll_reduce_gram(const IntMatrix& g) {
  if (!g.is_symmetric()) throw DomainError("lll_reduce_gram: Gram matrix must be symmetric");
  if (!is_positive_definite(g)) throw DomainError("lll_reduce_gram: Gram matrix is not positive definite");
  GramLll lll(g);
  lll.run();
  LllResult out{lll.gram(), lll.transform()};
  if (congruence(g, out.transform) != out.gram) throw InvariantViolation("lll_reduce_gram: U^T G U mismatch");
  return out;
}

bool is_lll_reduced(const IntMatrix& g) {
  const std::size_t n = g.rows();
  // Rational Gram-Schmidt on Gram data.
  RatMatrix mu(n, n);
  RatVector bstar(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < i; ++j) {
      Rational s = Rational(g(i, j));
      for (std::size_t k = 0; k < j; ++k) s -= mu(j, k) * mu(i, k) * bstar[k];
      mu(i, j) = s / bstar[j];
    }
    Rational s = Rational(g(i, i));
    for (std::size_t k = 0; k < i; ++k) s -= mu(i, k) * mu(i, k) * bstar[k];
    if (s <= 0) return false;
    bstar[i] = s;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (abs(mu(i, j)) > Rational(1, 2)) return false;
  for (std::size_t k = 1; k < n; ++k)
    if (bstar[k] < (Rational(3, 4) - mu(k, k - 1) * mu(k, k - 1)) * bstar[k - 1]) return false;
  return true;
}

}  // namespace orthogrid
