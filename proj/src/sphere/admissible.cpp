#include <cmath>

#include "orthogrid/errors.hpp"
#include "orthogrid/sphere/sphere.hpp"

namespace orthogrid {

bool is_admissible(int d, const Integer& D, std::optional<std::int64_t> p) {
  if (d < kMinDimension) throw DomainError("is_admissible: dimension must be at least 3");
  if (p) {
    if (*p == 2 || !is_prime(to_integer(*p))) throw DomainError("is_admissible: p must be an odd prime");
  }
  if (D < 1) return false;
  if (p && D % *p == 0) return false;
  const Integer r8 = D % 8;
  if (d == 3) return r8 != 0 && r8 != 4 && r8 != 7;
  if (d == 4) return r8 != 0;
  return true;
}

double search_volume(int d, const Integer& D) {
  const double side = 2.0 * std::sqrt(D.get_d()) + 1.0;
  return std::pow(side, d - 1);
}

}  // namespace orthogrid
