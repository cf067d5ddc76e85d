#include "orthogrid/errors.hpp"
#include "orthogrid/padic/padic.hpp"

namespace orthogrid {
namespace {

// Scales a nonzero rational vector to a primitive integer vector.
RatVector primitive_multiple(const RatVector& u) {
  Integer den = 1;
  for (const auto& x : u) den = lcm(den, Integer(x.get_den()));
  IntVector z;
  z.reserve(u.size());
  for (const auto& x : u) z.push_back(Rational(x * den).get_num());
  const Integer g = content(z);
  RatVector out;
  out.reserve(u.size());
  for (const auto& x : z) out.emplace_back(Integer(x / g));
  return out;
}

RatVector difference(const RatVector& a, const RatVector& b, int sign) {
  RatVector d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] + sign * b[i];
  return d;
}

// Columns of P form an orthogonal basis of (Q^n, q).
RatMatrix orthogonal_basis(const RatMatrix& m, std::uint64_t seed) {
  if (seed == 0) return diagonalize(m).transform;
  std::mt19937_64 rng(seed);
  const std::size_t n = m.rows();
  for (;;) {
    RatMatrix t(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) t(i, j) = static_cast<long>(rng() % 7) - 3;
    if (determinant(t) == 0) continue;
    return t * diagonalize(t.transpose() * m * t).transform;
  }
}

void check_special_orthogonal(const RatMatrix& g, const RatMatrix& m) {
  if (!m.is_symmetric() || !g.square() || g.rows() != m.rows())
    throw DomainError("reflection_factorization: shape mismatch");
  if (determinant(m) == 0) throw DomainError("reflection_factorization: degenerate form");
  if (g.transpose() * m * g != m) throw DomainError("reflection_factorization: g does not preserve q");
  if (determinant(g) != 1) throw DomainError("reflection_factorization: det g != +1");
}

}  // namespace

std::vector<RatVector> reflection_factorization(const RatMatrix& g, const RatMatrix& m, std::uint64_t seed) {
  check_special_orthogonal(g, m);
  const std::size_t n = m.rows();
  const RatMatrix p = orthogonal_basis(m, seed);
  std::vector<std::size_t> open(n);
  for (std::size_t i = 0; i < n; ++i) open[i] = i;

  RatMatrix h = g;
  std::vector<RatVector> out;
  auto reflect = [&](const RatVector& u) {
    RatVector prim = primitive_multiple(u);
    h = reflection_matrix(m, prim) * h;
    out.push_back(std::move(prim));
  };

  // h fixes the closed basis vectors, hence preserves the span of the open
  // ones. Each round fixes one more.
  while (!open.empty()) {
    std::size_t pick = open.size();
    bool fixed = false;
    for (std::size_t k = 0; k < open.size() && pick == open.size(); ++k) {
      const RatVector x = p.column(open[k]);
      const RatVector y = h * x;
      if (y == x) {
        pick = k;
        fixed = true;
      } else if (quadratic_value(m, difference(y, x, -1)) != 0) {
        pick = k;
      }
    }
    if (pick == open.size()) {
      // q(hx - x) = 0 for every candidate: hx + x is anisotropic, so
      // tau_{hx+x} sends hx to -x, and tau_x finishes.
      pick = 0;
      const RatVector x = p.column(open[0]);
      reflect(difference(h * x, x, 1));
      reflect(x);
    } else if (!fixed) {
      const RatVector x = p.column(open[pick]);
      reflect(difference(h * x, x, -1));
    }
    open.erase(open.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  if (h != RatMatrix::identity(n)) throw InvariantViolation("reflection_factorization: residual is not the identity");

  RatMatrix prod = RatMatrix::identity(n);
  for (const auto& u : out) prod = prod * reflection_matrix(m, u);
  if (prod != g) throw InvariantViolation("reflection_factorization: product does not reproduce g");
  if (out.size() % 2 != 0) throw InvariantViolation("reflection_factorization: odd length for det +1");
  return out;
}

SquareClass spinor_norm(const RatMatrix& g, const RatMatrix& m, std::int64_t place, std::uint64_t seed) {
  Rational prod = 1;
  for (const auto& u : reflection_factorization(g, m, seed)) prod *= quadratic_value(m, u);
  return square_class(prod, place);
}

std::set<SquareClass> spinor_norm_image_search(const RatMatrix& m, std::int64_t p, std::mt19937_64& rng,
                                               int max_trials) {
  const std::size_t n = m.rows();
  const auto span = static_cast<std::uint64_t>(6 * p + 1);
  auto random_vector = [&] {
    RatVector u(n);
    for (auto& x : u) x = static_cast<long>(rng() % span) - 3 * p;
    return u;
  };
  std::set<SquareClass> found;
  for (int trial = 0; trial < max_trials && found.size() < 4; ++trial) {
    const RatVector u = random_vector();
    const RatVector v = random_vector();
    const Rational qu = quadratic_value(m, u);
    const Rational qv = quadratic_value(m, v);
    if (qu == 0 || qv == 0) continue;
    const RatMatrix g = reflection_matrix(m, u) * reflection_matrix(m, v);
    const SquareClass c = spinor_norm(g, m, p, rng() | 1U);
    if (c != square_class(qu * qv, p)) throw InvariantViolation("spinor norm depends on the factorization");
    found.insert(c);
  }
  return found;
}

}  // namespace orthogrid
