#include <cmath>

#include "orthogrid/errors.hpp"
#include "orthogrid/ortho/ortho.hpp"

namespace orthogrid {

double ModularPoint::imag() const { return std::sqrt(y2.get_d()); }

ModularPoint modular_point(const IntMatrix& gram) {
  if (gram.rows() != 2 || !is_positive_definite(gram))
    throw DomainError("modular_point: need a positive-definite 2x2 Gram matrix");
  const Integer& a = gram(0, 0);
  const Integer& b = gram(0, 1);
  const Integer& c = gram(1, 1);
  ModularPoint p{make_rational(b, a), make_rational(a * c - b * b, a * a)};
  const Rational half(1, 2);
  for (;;) {
    p.x -= Rational(round_nearest(p.x));
    // round_nearest sends 1/2 to 1, so x now lies in [-1/2, 1/2).
    const Rational r2 = p.x * p.x + p.y2;
    if (r2 >= 1) break;
    // tau -> -1/tau: x -> -x / |tau|^2, y -> y / |tau|^2.
    p.x = -p.x / r2;
    p.y2 = p.y2 / (r2 * r2);
  }
  if (p.x == -half) p.x = half;
  if (p.x < 0 && p.x * p.x + p.y2 == 1) p.x = -p.x;
  return p;
}

ModularPoint modular_point(const ShapeClass& s) {
  if (s.dim != 2) throw DomainError("modular_point: shape must have rank 2");
  return modular_point(s.gram);
}

}  // namespace orthogrid
