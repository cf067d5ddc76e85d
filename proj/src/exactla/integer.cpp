#include "orthogrid/exactla/integer.hpp"

#include <cmath>

#include "orthogrid/errors.hpp"

namespace orthogrid {

std::int64_t to_int64(const Integer& x) {
  if (!x.fits_slong_p()) throw Overflow();
  return x.get_si();
}

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("floor_div: division by zero");
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer round_div(const Integer& a, const Integer& b) {
  if (b == 0) throw DomainError("round_div: division by zero");
  // floor((2a + b) / 2b), with the sign of b folded into the numerator.
  Integer num = 2 * a + abs(b);
  Integer den = 2 * abs(b);
  if (b < 0) num = -2 * a + abs(b);
  return floor_div(num, den);
}

Integer floor(const Rational& q) {
  Integer r;
  mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer ceil(const Rational& q) {
  Integer r;
  mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return r;
}

Integer round_nearest(const Rational& q) { return floor(q + Rational(1, 2)); }

Integer isqrt(const Integer& n) {
  if (n < 0) throw DomainError("isqrt: negative argument");
  Integer r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

bool is_square(const Integer& n) { return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0; }

std::int64_t isqrt64(std::int64_t n) {
  if (n < 0) throw DomainError("isqrt64: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r * r > n) --r;
  while ((r + 1) * (r + 1) <= n) ++r;
  return r;
}

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return make_rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw DomainError("not a rational number: '" + s + "'");
  }
}

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (n < 4) return true;
  if (n % 2 == 0) return false;
  for (Integer k = 3; k * k <= n; k += 2) {
    if (n % k == 0) return false;
  }
  return true;
}

}  // namespace orthogrid
