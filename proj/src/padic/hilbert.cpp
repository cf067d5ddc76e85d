#include "orthogrid/errors.hpp"
#include "orthogrid/padic/padic.hpp"

namespace orthogrid {
namespace {

// t = p^k * (num / den) with num, den prime to p.
struct Split {
  long k;
  Integer num;
  Integer den;
};

Split split(const Rational& t, const Integer& p) {
  Split s{0, t.get_num(), t.get_den()};
  s.k = static_cast<long>(mpz_remove(s.num.get_mpz_t(), s.num.get_mpz_t(), p.get_mpz_t())) -
        static_cast<long>(mpz_remove(s.den.get_mpz_t(), s.den.get_mpz_t(), p.get_mpz_t()));
  return s;
}

int unit_legendre(const Split& s, const Integer& p) {
  return mpz_legendre(s.num.get_mpz_t(), p.get_mpz_t()) * mpz_legendre(s.den.get_mpz_t(), p.get_mpz_t());
}

// Residue mod 8 of an odd 2-adic unit num/den (den^-1 = den mod 8).
int mod8(const Split& s) {
  Integer r = (s.num * s.den) % 8;
  if (r < 0) r += 8;
  return static_cast<int>(r.get_si());
}

int odd_place(const Rational& a, const Rational& b, const Integer& p) {
  const Split sa = split(a, p);
  const Split sb = split(b, p);
  int sign = 1;
  // (-1)^{alpha beta eps(p)} with eps(p) = (p - 1) / 2 mod 2.
  if ((sa.k & 1) && (sb.k & 1) && p % 4 == 3) sign = -sign;
  if (sb.k & 1) sign *= unit_legendre(sa, p);
  if (sa.k & 1) sign *= unit_legendre(sb, p);
  return sign;
}

int two_place(const Rational& a, const Rational& b) {
  const Integer two = 2;
  const Split sa = split(a, two);
  const Split sb = split(b, two);
  const int u = mod8(sa);
  const int v = mod8(sb);
  const int eps_u = ((u - 1) / 2) & 1;
  const int eps_v = ((v - 1) / 2) & 1;
  const int omega_u = ((u * u - 1) / 8) & 1;
  const int omega_v = ((v * v - 1) / 8) & 1;
  const long e = eps_u * eps_v + (sa.k & 1) * omega_v + (sb.k & 1) * omega_u;
  return (e & 1) ? -1 : 1;
}

}  // namespace

int hilbert_symbol(const Rational& a, const Rational& b, std::int64_t place) {
  if (a == 0 || b == 0) throw DomainError("hilbert_symbol: zero argument");
  if (place == kInfinity) return (a < 0 && b < 0) ? -1 : 1;
  if (place < 2 || !is_prime(to_integer(place))) throw DomainError("hilbert_symbol: place is not a prime");
  if (place == 2) return two_place(a, b);
  return odd_place(a, b, to_integer(place));
}

}  // namespace orthogrid
