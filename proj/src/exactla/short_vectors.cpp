#include <algorithm>

#include "orthogrid/errors.hpp"
#include "orthogrid/exactla/exactla.hpp"

namespace orthogrid {
namespace {

// q(x) = sum_i Q(i,i) * (x_i + sum_{j>i} Q(i,j) x_j)^2
RatMatrix quadratic_decomposition(const IntMatrix& g) {
  const std::size_t n = g.rows();
  RatMatrix q = to_rational(g);
  for (std::size_t i = 0; i < n; ++i) {
    if (q(i, i) <= 0) throw DomainError("short_vectors: Gram matrix is not positive definite");
    for (std::size_t j = i + 1; j < n; ++j) {
      q(j, i) = q(i, j);
      q(i, j) /= q(i, i);
    }
    for (std::size_t k = i + 1; k < n; ++k)
      for (std::size_t l = k; l < n; ++l) q(k, l) -= q(k, i) * q(i, l);
  }
  return q;
}

class Enumerator {
 public:
  Enumerator(const IntMatrix& g, const Integer& bound)
      : g_(g), n_(g.rows()), q_(quadratic_decomposition(g)), bound_(bound), x_(n_) {}

  std::vector<LatticeVector> run() {
    descend(n_, Rational(bound_));
    return std::move(out_);
  }

 private:
  // Fix x_[i-1] given x_[i..n); `remaining` is the unused part of the bound.
  void descend(std::size_t i, const Rational& remaining) {
    if (i == 0) {
      bool zero = std::all_of(x_.begin(), x_.end(), [](const Integer& v) { return v == 0; });
      if (zero) return;
      LatticeVector lv{x_, 0};
      for (std::size_t a = 0; a < n_; ++a)
        for (std::size_t b = 0; b < n_; ++b) lv.norm += g_(a, b) * x_[a] * x_[b];
      if (lv.norm <= bound_) out_.push_back(std::move(lv));
      return;
    }
    const std::size_t k = i - 1;
    Rational center = 0;
    for (std::size_t j = k + 1; j < n_; ++j) center -= q_(k, j) * x_[j];
    // Integers x with q_kk (x - center)^2 <= remaining. With center = p/s,
    // |s x - p| <= isqrt(floor(s^2 remaining / q_kk)).
    const Rational radius_sq = remaining / q_(k, k);
    const Integer& p = center.get_num();
    const Integer& s = center.get_den();
    const Integer r = isqrt(floor(radius_sq * Rational(s * s)));
    const Integer lo = ceil(make_rational(p - r, s));
    const Integer hi = floor(make_rational(p + r, s));
    for (Integer v = lo; v <= hi; ++v) {
      x_[k] = v;
      const Rational diff = Rational(v) - center;
      const Rational next = remaining - q_(k, k) * diff * diff;
      if (next < 0) continue;
      descend(k, next);
    }
    x_[k] = 0;
  }

  const IntMatrix& g_;
  std::size_t n_;
  RatMatrix q_;
  Integer bound_;
  IntVector x_;
  std::vector<LatticeVector> out_;
};

}  // namespace

std::vector<LatticeVector> short_vectors(const IntMatrix& g, const Integer& bound) {
  if (!g.is_symmetric()) throw DomainError("short_vectors: Gram matrix must be symmetric");
  if (bound < 0) return {};
  auto out = Enumerator(g, bound).run();
  std::sort(out.begin(), out.end(), [](const LatticeVector& a, const LatticeVector& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.coords > b.coords;
  });
  return out;
}

std::vector<Integer> successive_minima(const IntMatrix& g) {
  const LllResult red = lll_reduce_gram(g);
  Integer bound = 0;
  for (std::size_t i = 0; i < g.rows(); ++i) bound = std::max(bound, red.gram(i, i));
  const auto vecs = short_vectors(red.gram, bound);
  std::vector<Integer> minima;
  std::vector<RatVector> echelon;  // rows in reduced echelon form over Q
  std::vector<std::size_t> pivots;
  for (const auto& lv : vecs) {
    RatVector r = to_rational(lv.coords);
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = r[pivots[e]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < r.size(); ++c) r[c] -= f * echelon[e][c];
    }
    auto it = std::find_if(r.begin(), r.end(), [](const Rational& x) { return x != 0; });
    if (it == r.end()) continue;
    const std::size_t piv = static_cast<std::size_t>(it - r.begin());
    const Rational lead = r[piv];
    for (auto& x : r) x /= lead;
    for (std::size_t e = 0; e < echelon.size(); ++e) {
      const Rational f = echelon[e][piv];
      if (f == 0) continue;
      for (std::size_t c = 0; c < r.size(); ++c) echelon[e][c] -= f * r[c];
    }
    echelon.push_back(std::move(r));
    pivots.push_back(piv);
    minima.push_back(lv.norm);
    if (minima.size() == g.rows()) break;
  }
  if (minima.size() != g.rows()) throw InvariantViolation("successive_minima: enumeration did not reach full rank");
  return minima;
}

}  // namespace orthogrid
