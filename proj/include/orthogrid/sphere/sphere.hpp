#pragma once

// Primitive integer points on spheres and the action of
// Gamma_1 = SO_d(Z) (signed permutation matrices of determinant +1).

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "orthogrid/exactla/integer.hpp"
#include "orthogrid/exactla/matrix.hpp"

namespace orthogrid {

using Coords = std::vector<std::int64_t>;

inline constexpr int kMinDimension = 3;
inline constexpr int kMaxDimension = 8;

// A primitive v in Z^d with |v|^2 = D, d >= 3.
class PrimitiveVector {
 public:
  // Validates gcd = 1 and d >= 3; throws DomainError otherwise.
  explicit PrimitiveVector(Coords coords);

  int d() const { return static_cast<int>(coords_.size()); }
  const Coords& coords() const { return coords_; }
  const Integer& D() const { return norm_; }
  IntVector to_integer() const;

  friend bool operator==(const PrimitiveVector& a, const PrimitiveVector& b) { return a.coords_ == b.coords_; }

 private:
  Coords coords_;
  Integer norm_;
};

// Search volume (2 sqrt(D) + 1)^(d-1) of the coordinate box walk.
double search_volume(int d, const Integer& D);

// Default refuses exactly d >= 6 with D > 10^4 (volume 201^5).
inline constexpr double kDefaultSearchBudget = 201.0 * 201.0 * 201.0 * 201.0 * 201.0;

struct EnumerationBudget {
  double max_search_volume = kDefaultSearchBudget;
};

// True iff D lies in the admissible set for dimension d: d = 3 needs
// D mod 8 not in {0, 4, 7}; d = 4 needs 8 not dividing D; d >= 5 accepts
// every D >= 1. With p given, additionally p must not divide D. Throws
// DomainError when p is not an odd prime.
bool is_admissible(int d, const Integer& D, std::optional<std::int64_t> p = std::nullopt);

// All of S^{d-1}(D) in descending lexicographic order. Parallel over the
// first coordinate; the chunks are concatenated in order, so the output is
// identical to enumerate_sphere_serial.
std::vector<PrimitiveVector> enumerate_sphere(int d, const Integer& D, const EnumerationBudget& budget = {});
std::vector<PrimitiveVector> enumerate_sphere_serial(int d, const Integer& D, const EnumerationBudget& budget = {});

// One canonical representative per Gamma_1-orbit, descending lexicographic.
std::vector<PrimitiveVector> enumerate_orbit_reps(int d, const Integer& D, const EnumerationBudget& budget = {});

// |SO_d(Z)| = 2^(d-1) d!
std::int64_t gamma1_order(int d);

struct OrbitInfo {
  PrimitiveVector canonical_rep;
  std::int64_t stabilizer_size;
  std::int64_t orbit_size;
};

// Canonical representative is the lexicographically largest vector in the
// orbit. The stabilizer is counted from the multiset of |coords|.
OrbitInfo orbit_info(const PrimitiveVector& v);
std::int64_t stabilizer_size(const Coords& v);

// All distinct gamma v for gamma in SO_d(Z).
std::vector<Coords> orbit_images(const Coords& v);

// |{v in S^{d-1}(D) : S(v) > 1}| / |S^{d-1}(D)|. Throws DomainError on an
// empty sphere.
Rational stabilizer_fraction(int d, const Integer& D, const EnumerationBudget& budget = {});

// An element of the hyperoctahedral group: (g x)_i = sign_i * x_{perm_i}.
struct SignedPermutation {
  std::vector<int> perm;
  std::vector<int> sign;

  static SignedPermutation identity(int d);
  int determinant() const;
  Coords apply(const Coords& x) const;
  IntVector apply(const IntVector& x) const;
  IntMatrix matrix() const;
};

// Uniform element of SO_d(Z).
SignedPermutation random_rotation(int d, std::mt19937_64& rng);

}  // namespace orthogrid
