#include <algorithm>
#include <numeric>
#include <set>

#include "orthogrid/errors.hpp"
#include "orthogrid/sphere/sphere.hpp"

namespace orthogrid {
namespace {

Coords sorted_abs(const Coords& v) {
  Coords a(v.size());
  std::transform(v.begin(), v.end(), a.begin(), [](std::int64_t x) { return x < 0 ? -x : x; });
  std::sort(a.begin(), a.end(), std::greater<>());
  return a;
}

std::int64_t factorial(std::int64_t n) {
  std::int64_t f = 1;
  for (std::int64_t i = 2; i <= n; ++i) f *= i;
  return f;
}

int permutation_sign(std::vector<int> p) {
  int sign = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (p[i] != static_cast<int>(i)) {
      std::swap(p[i], p[static_cast<std::size_t>(p[i])]);
      sign = -sign;
    }
  }
  return sign;
}

// Determinant of the unique signed permutation taking v to sorted_abs(v),
// for v with distinct nonzero |coords|.
int sorting_determinant(const Coords& v) {
  const std::size_t d = v.size();
  std::vector<int> perm(d);
  std::iota(perm.begin(), perm.end(), 0);
  std::sort(perm.begin(), perm.end(), [&](int a, int b) { return std::abs(v[a]) > std::abs(v[b]); });
  int det = permutation_sign(perm);
  for (std::int64_t x : v)
    if (x < 0) det = -det;
  return det;
}

// Some stabilizer element has det -1, so the orbit meets both parities.
bool has_odd_symmetry(const Coords& v) {
  const Coords a = sorted_abs(v);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) return true;
    if (i > 0 && a[i] == a[i - 1]) return true;
  }
  return false;
}

}  // namespace

PrimitiveVector::PrimitiveVector(Coords coords) : coords_(std::move(coords)) {
  if (coords_.size() < static_cast<std::size_t>(kMinDimension))
    throw DomainError("PrimitiveVector: dimension must be at least 3");
  std::int64_t g = 0;
  for (std::int64_t x : coords_) {
    g = std::gcd(g, x);
    norm_ += Integer(static_cast<long>(x)) * Integer(static_cast<long>(x));
  }
  if (g != 1) throw DomainError("PrimitiveVector: coordinates are not coprime");
}

IntVector PrimitiveVector::to_integer() const {
  IntVector out;
  out.reserve(coords_.size());
  for (std::int64_t x : coords_) out.emplace_back(static_cast<long>(x));
  return out;
}

std::int64_t gamma1_order(int d) { return (std::int64_t{1} << (d - 1)) * factorial(d); }

std::int64_t stabilizer_size(const Coords& v) {
  const Coords a = sorted_abs(v);
  // Stabilizer in the full signed permutation group: m! for each block of
  // equal nonzero |coords|, z! 2^z for the zero block.
  std::int64_t full = 1;
  bool odd_element = false;
  std::size_t i = 0;
  while (i < a.size()) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    const auto m = static_cast<std::int64_t>(j - i);
    full *= factorial(m);
    if (a[i] == 0) {
      full <<= m;
      odd_element = true;
    } else if (m >= 2) {
      odd_element = true;
    }
    i = j;
  }
  // A det -1 element exists iff there is a zero or a repeated |coord|; then
  // exactly half the stabilizer lies in SO_d(Z).
  return odd_element ? full / 2 : full;
}

OrbitInfo orbit_info(const PrimitiveVector& v) {
  const std::int64_t stab = stabilizer_size(v.coords());
  Coords rep = sorted_abs(v.coords());
  if (!has_odd_symmetry(v.coords()) && sorting_determinant(v.coords()) < 0) rep.back() = -rep.back();
  return OrbitInfo{PrimitiveVector(std::move(rep)), stab, gamma1_order(v.d()) / stab};
}

std::vector<Coords> orbit_images(const Coords& v) {
  Coords a = sorted_abs(v);
  std::sort(a.begin(), a.end());
  const bool restrict_parity = !has_odd_symmetry(v);
  const int target_det = restrict_parity ? sorting_determinant(v) : 0;
  std::vector<Coords> out;
  do {
    std::vector<std::size_t> nonzero;
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) nonzero.push_back(i);
    const std::size_t patterns = std::size_t{1} << nonzero.size();
    for (std::size_t mask = 0; mask < patterns; ++mask) {
      Coords x = a;
      for (std::size_t b = 0; b < nonzero.size(); ++b)
        if (mask & (std::size_t{1} << b)) x[nonzero[b]] = -x[nonzero[b]];
      if (restrict_parity && sorting_determinant(x) != target_det) continue;
      out.push_back(std::move(x));
    }
  } while (std::next_permutation(a.begin(), a.end()));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

Rational stabilizer_fraction(int d, const Integer& D, const EnumerationBudget& budget) {
  const auto reps = enumerate_orbit_reps(d, D, budget);
  if (reps.empty()) throw DomainError("stabilizer_fraction: the sphere is empty");
  Integer with_symmetry = 0;
  Integer total = 0;
  for (const auto& r : reps) {
    const auto info = orbit_info(r);
    total += info.orbit_size;
    if (info.stabilizer_size > 1) with_symmetry += info.orbit_size;
  }
  return make_rational(with_symmetry, total);
}

SignedPermutation SignedPermutation::identity(int d) {
  SignedPermutation g;
  g.perm.resize(static_cast<std::size_t>(d));
  std::iota(g.perm.begin(), g.perm.end(), 0);
  g.sign.assign(static_cast<std::size_t>(d), 1);
  return g;
}

int SignedPermutation::determinant() const {
  int det = permutation_sign(perm);
  for (int s : sign) det *= s;
  return det;
}

Coords SignedPermutation::apply(const Coords& x) const {
  Coords y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = sign[i] * x[static_cast<std::size_t>(perm[i])];
  return y;
}

IntVector SignedPermutation::apply(const IntVector& x) const {
  IntVector y(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) y[i] = sign[i] * x[static_cast<std::size_t>(perm[i])];
  return y;
}

IntMatrix SignedPermutation::matrix() const {
  IntMatrix m(perm.size(), perm.size());
  for (std::size_t i = 0; i < perm.size(); ++i) m(i, static_cast<std::size_t>(perm[i])) = sign[i];
  return m;
}

SignedPermutation random_rotation(int d, std::mt19937_64& rng) {
  SignedPermutation g = SignedPermutation::identity(d);
  // Fisher-Yates with explicit modulo draws keeps the sequence portable.
  for (int i = d - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng() % static_cast<std::uint64_t>(i + 1));
    std::swap(g.perm[static_cast<std::size_t>(i)], g.perm[static_cast<std::size_t>(j)]);
  }
  for (auto& s : g.sign) s = (rng() & 1U) ? -1 : 1;
  if (g.determinant() < 0) g.sign[0] = -g.sign[0];
  return g;
}

}  // namespace orthogrid
