#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace orthogrid {

using Integer = mpz_class;
using Rational = mpq_class;

// Raised by Checked64 when a result does not fit in 64 bits. Callers that use
// the fixed-width fast path catch it and redo the work with Integer.
class Overflow : public std::overflow_error {
 public:
  Overflow() : std::overflow_error("int64 overflow") {}
};

// 64-bit integer whose arithmetic traps on overflow instead of wrapping.
// Results are either exact or an Overflow is thrown; never rounded.
class Checked64 {
 public:
  constexpr Checked64() = default;
  constexpr Checked64(std::int64_t v) : v_(v) {}  // NOLINT(google-explicit-constructor)

  constexpr std::int64_t value() const { return v_; }

  friend Checked64 operator+(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_add_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend Checked64 operator-(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_sub_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  friend Checked64 operator*(Checked64 a, Checked64 b) {
    std::int64_t r;
    if (__builtin_mul_overflow(a.v_, b.v_, &r)) throw Overflow();
    return r;
  }
  // Truncating division, same rounding as mpz_class::operator/.
  friend Checked64 operator/(Checked64 a, Checked64 b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (a.v_ == INT64_MIN && b.v_ == -1) throw Overflow();
    return a.v_ / b.v_;
  }
  friend Checked64 operator%(Checked64 a, Checked64 b) {
    if (b.v_ == 0) throw std::domain_error("division by zero");
    if (b.v_ == -1) return 0;
    return a.v_ % b.v_;
  }
  Checked64 operator-() const {
    if (v_ == INT64_MIN) throw Overflow();
    return -v_;
  }
  Checked64& operator+=(Checked64 o) { return *this = *this + o; }
  Checked64& operator-=(Checked64 o) { return *this = *this - o; }
  Checked64& operator*=(Checked64 o) { return *this = *this * o; }
  Checked64& operator/=(Checked64 o) { return *this = *this / o; }

  friend constexpr bool operator==(Checked64, Checked64) = default;
  friend constexpr auto operator<=>(Checked64, Checked64) = default;

  friend Checked64 abs(Checked64 a) { return a.v_ < 0 ? -a : a; }
  friend Checked64 gcd(Checked64 a, Checked64 b) {
    std::int64_t x = abs(a).v_, y = abs(b).v_;
    while (y != 0) {
      std::int64_t t = x % y;
      x = y;
      y = t;
    }
    return x;
  }
  friend int sgn(Checked64 a) { return (a.v_ > 0) - (a.v_ < 0); }

 private:
  std::int64_t v_ = 0;
};

inline Integer to_integer(const Integer& x) { return x; }
inline Integer to_integer(Checked64 x) { return Integer(static_cast<long>(x.value())); }
inline Integer to_integer(std::int64_t x) { return Integer(static_cast<long>(x)); }

// Throws Overflow when x does not fit.
std::int64_t to_int64(const Integer& x);

// floor(a / b) for b != 0.
Integer floor_div(const Integer& a, const Integer& b);
// Nearest integer to a / b, ties rounded toward +infinity.
Integer round_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
// Nearest integer to q, ties toward +infinity.
Integer round_nearest(const Rational& q);

// floor(sqrt(n)) for n >= 0.
Integer isqrt(const Integer& n);
bool is_square(const Integer& n);
std::int64_t isqrt64(std::int64_t n);

Rational make_rational(const Integer& num, const Integer& den);
// "n" or "n/d" in lowest terms.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);
// Parses "n" or "n/d".
Rational parse_rational(const std::string& s);

// Trial division primality; adequate for the small primes used as places.
bool is_prime(const Integer& n);

}  // namespace orthogrid
