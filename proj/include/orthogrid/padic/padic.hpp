#pragma once

// Local invariants of rational quadratic forms: square classes, Hilbert
// symbols, diagonalization, Hasse invariant, isotropy, and the spinor norm
// computed from an explicit reflection factorization.

#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "orthogrid/exactla/integer.hpp"
#include "orthogrid/exactla/matrix.hpp"

namespace orthogrid {

// A place of Q: a prime p, or 0 for the real place.
inline constexpr std::int64_t kInfinity = 0;

// Element of Q_p^x / (Q_p^x)^2 for odd p, labelled 1, r, p, rp where r is the
// smallest positive quadratic non-residue mod p; or of R^x / (R^x)^2,
// labelled + and -.
class SquareClass {
 public:
  SquareClass(std::int64_t place, bool nonresidue, bool odd_valuation);

  static SquareClass one(std::int64_t place) { return SquareClass(place, false, false); }

  std::int64_t place() const { return place_; }
  bool nonresidue() const { return nonresidue_; }  // real place: negative
  bool odd_valuation() const { return odd_valuation_; }
  std::string label() const;
  // A rational representative: 1, r, p, rp (or 1, -1).
  Rational representative() const;

  friend SquareClass operator*(const SquareClass& a, const SquareClass& b);
  friend bool operator==(const SquareClass&, const SquareClass&) = default;
  friend auto operator<=>(const SquareClass&, const SquareClass&) = default;

 private:
  std::int64_t place_;
  bool nonresidue_;
  bool odd_valuation_;
};

// Smallest positive quadratic non-residue mod an odd prime.
std::int64_t smallest_nonresidue(std::int64_t p);

// p-adic valuation of a nonzero rational.
long valuation(const Rational& t, std::int64_t p);

// Throws DomainError for t = 0 or a place that is not an odd prime or infinity.
SquareClass square_class(const Rational& t, std::int64_t place);

// True iff t is a square in Q_place (any prime including 2, or infinity).
bool is_local_square(const Rational& t, std::int64_t place);

// (a, b)_place in {+1, -1}; place is a prime (2 included) or kInfinity.
int hilbert_symbol(const Rational& a, const Rational& b, std::int64_t place);

struct DiagonalForm {
  std::vector<Rational> entries;
  RatMatrix transform;  // P with P^T M P = diag(entries)
};

// Symmetric elimination over Q. Throws DomainError on singular or
// non-symmetric input.
DiagonalForm diagonalize(const RatMatrix& m);
DiagonalForm diagonalize(const IntMatrix& m);

// prod_{i<j} (a_i, a_j)_place over a diagonalization.
int hasse_invariant(const std::vector<Rational>& diagonal, std::int64_t place);
int hasse_invariant(const RatMatrix& m, std::int64_t place);
int hasse_invariant(const IntMatrix& m, std::int64_t place);

// Whether the form represents 0 nontrivially over Q_place. Requires dim >= 2.
bool is_isotropic(const RatMatrix& m, std::int64_t place);
bool is_isotropic(const IntMatrix& m, std::int64_t place);

// q(x) = x^T M x and the reflection tau_u(x) = x - 2 B(x, u) / q(u) u.
Rational quadratic_value(const RatMatrix& m, const RatVector& x);
RatMatrix reflection_matrix(const RatMatrix& m, const RatVector& u);

// Vectors u_1..u_k (primitive integer, q(u_i) != 0) with
// g = tau_{u_1} ... tau_{u_k}; k is even for det g = +1. `seed` = 0 gives the
// deterministic factorization, other seeds start from a randomly re-based
// orthogonal basis and so give alternative factorizations. Throws DomainError
// if g is not in SO(q).
std::vector<RatVector> reflection_factorization(const RatMatrix& g, const RatMatrix& m, std::uint64_t seed = 0);

// Class of prod q(u_i) over a reflection factorization of g.
SquareClass spinor_norm(const RatMatrix& g, const RatMatrix& m, std::int64_t place, std::uint64_t seed = 0);

// Searches random pairs tau_u tau_v in SO(q) and collects the spinor norms
// (each recomputed from a fresh factorization of the product matrix).
std::set<SquareClass> spinor_norm_image_search(const RatMatrix& m, std::int64_t p, std::mt19937_64& rng,
                                               int max_trials);

}  // namespace orthogrid
