#include "orthogrid/errors.hpp"
#include "orthogrid/padic/padic.hpp"

namespace orthogrid {
namespace {

void check_place(std::int64_t place) {
  if (place == kInfinity) return;
  if (place <= 2 || !is_prime(to_integer(place)))
    throw DomainError("square_class: place must be an odd prime or infinity, got " + std::to_string(place));
}

// Strips every factor p from z, returns how many were removed.
long strip(Integer& z, const Integer& p) {
  return static_cast<long>(mpz_remove(z.get_mpz_t(), z.get_mpz_t(), p.get_mpz_t()));
}

int legendre(const Integer& a, const Integer& p) { return mpz_legendre(a.get_mpz_t(), p.get_mpz_t()); }

}  // namespace

SquareClass::SquareClass(std::int64_t place, bool nonresidue, bool odd_valuation)
    : place_(place), nonresidue_(nonresidue), odd_valuation_(place != kInfinity && odd_valuation) {
  check_place(place);
}

std::string SquareClass::label() const {
  if (place_ == kInfinity) return nonresidue_ ? "-" : "+";
  if (nonresidue_) return odd_valuation_ ? "rp" : "r";
  return odd_valuation_ ? "p" : "1";
}

Rational SquareClass::representative() const {
  if (place_ == kInfinity) return nonresidue_ ? -1 : 1;
  Integer x = 1;
  if (nonresidue_) x *= to_integer(smallest_nonresidue(place_));
  if (odd_valuation_) x *= to_integer(place_);
  return Rational(x);
}

SquareClass operator*(const SquareClass& a, const SquareClass& b) {
  if (a.place_ != b.place_) throw DomainError("square classes at different places");
  return SquareClass(a.place_, a.nonresidue_ != b.nonresidue_, a.odd_valuation_ != b.odd_valuation_);
}

std::int64_t smallest_nonresidue(std::int64_t p) {
  const Integer pz = to_integer(p);
  for (std::int64_t r = 2;; ++r)
    if (legendre(to_integer(r), pz) == -1) return r;
}

long valuation(const Rational& t, std::int64_t p) {
  if (t == 0) throw DomainError("valuation of zero");
  const Integer pz = to_integer(p);
  Integer num = t.get_num();
  Integer den = t.get_den();
  return strip(num, pz) - strip(den, pz);
}

SquareClass square_class(const Rational& t, std::int64_t place) {
  if (t == 0) throw DomainError("square_class: zero has no square class");
  check_place(place);
  if (place == kInfinity) return SquareClass(place, t < 0, false);
  const Integer pz = to_integer(place);
  Integer num = t.get_num();
  Integer den = t.get_den();
  const long k = strip(num, pz) - strip(den, pz);
  // (num/den | p) = (num | p)(den | p) for units.
  const bool nonresidue = legendre(num, pz) * legendre(den, pz) == -1;
  return SquareClass(place, nonresidue, k % 2 != 0);
}

bool is_local_square(const Rational& t, std::int64_t place) {
  if (t == 0) throw DomainError("is_local_square: zero");
  if (place == kInfinity) return t > 0;
  if (place == 2) {
    Integer num = t.get_num();
    Integer den = t.get_den();
    const long k = strip(num, 2) - strip(den, 2);
    if (k % 2 != 0) return false;
    // Odd unit num/den is a 2-adic square iff num * den = 1 mod 8.
    const Integer u = num * den;
    Integer r = u % 8;
    if (r < 0) r += 8;
    return r == 1;
  }
  const SquareClass c = square_class(t, place);
  return !c.nonresidue() && !c.odd_valuation();
}

}  // namespace orthogrid
