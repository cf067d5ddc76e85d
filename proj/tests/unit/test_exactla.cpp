#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <set>

#include "../support/generators.hpp"
#include "orthogrid/exactla/exactla.hpp"
#include "orthogrid/exactla/kernels.hpp"

using namespace orthogrid;
using orthogrid::testing::Gen;

namespace {

IntVector iv(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntMatrix im(std::initializer_list<std::initializer_list<long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  std::size_t i = 0;
  for (const auto& r : rows) {
    std::size_t j = 0;
    for (long x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

// Leibniz expansion; independent of the Bareiss code.
Integer leibniz(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> p(n);
  for (std::size_t i = 0; i < n; ++i) p[i] = i;
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, p[i]);
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

// All nonzero x in [-r, r]^n with x^T G x <= bound.
// |x_i| <= sqrt(bound * (G^-1)_ii) bounds the search box.
std::multiset<Integer> brute_norms(const IntMatrix& g, const Integer& bound) {
  const std::size_t n = g.rows();
  const RatMatrix inv = inverse(to_rational(g));
  long r = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational q = Rational(bound) * inv(i, i);
    r = std::max(r, static_cast<long>(std::sqrt(q.get_d())) + 1);
  }
  std::vector<long> x(n, -r);
  std::multiset<Integer> out;
  for (;;) {
    bool zero = true;
    for (long c : x) zero = zero && c == 0;
    if (!zero) {
      Integer q = 0;
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) q += g(i, j) * x[i] * x[j];
      if (q <= bound) out.insert(q);
    }
    std::size_t i = 0;
    while (i < n && x[i] == r) x[i++] = -r;
    if (i == n) break;
    ++x[i];
  }
  return out;
}

}  // namespace

TEST_SUITE("exactla") {
  TEST_CASE("checked64 traps instead of wrapping") {
    const Checked64 big(INT64_MAX);
    CHECK_THROWS_AS(big + Checked64(1), Overflow);
    CHECK_THROWS_AS(big * Checked64(2), Overflow);
    CHECK_THROWS_AS(-Checked64(INT64_MIN), Overflow);
    CHECK((Checked64(-7) / Checked64(2)).value() == -3);
    CHECK((Checked64(-7) % Checked64(2)).value() == -1);
    CHECK(gcd(Checked64(-12), Checked64(18)).value() == 6);
  }

  TEST_CASE("integer helpers") {
    CHECK(isqrt(Integer(0)) == 0);
    CHECK(isqrt(Integer(99)) == 9);
    CHECK(isqrt(Integer(100)) == 10);
    CHECK(is_square(Integer(144)));
    CHECK_FALSE(is_square(Integer(-4)));
    CHECK(floor_div(Integer(-7), Integer(2)) == -4);
    CHECK(round_div(Integer(5), Integer(2)) == 3);
    CHECK(round_div(Integer(-5), Integer(2)) == -2);
    CHECK(round_nearest(Rational(7, 3)) == 2);
    CHECK(to_string(make_rational(Integer(-6), Integer(4))) == "-3/2");
    CHECK(parse_rational("-3/2") == Rational(-3, 2));
    CHECK(is_prime(Integer(10009)));
    CHECK_FALSE(is_prime(Integer(10007 * 3)));
    CHECK_THROWS_AS(to_int64(Integer("100000000000000000000")), Overflow);
  }

  TEST_CASE("ext_complete examples") {
    CHECK(ext_complete(iv({1, 0, 0})) == iv({1, 0, 0}));
    CHECK(dot(ext_complete(iv({2, 3})), iv({2, 3})) == 1);
    CHECK(dot(ext_complete(iv({1, 1, 1})), iv({1, 1, 1})) == 1);
    CHECK_THROWS_AS(ext_complete(iv({2, 4, 6})), DomainError);
  }

  TEST_CASE("ext_complete stays within the coordinate bound on random vectors") {
    Gen gen(11);
    for (int k = 0; k < 300; ++k) {
      const int d = static_cast<int>(gen.uniform(2, 6));
      const Coords c = gen.primitive(d, 40);
      IntVector v;
      for (auto x : c) v.emplace_back(static_cast<long>(x));
      const IntVector w = ext_complete(v);
      REQUIRE(dot(w, v) == 1);
      Integer bound = 0;
      for (const auto& x : v) bound = std::max(bound, Integer(abs(x)));
      for (const auto& x : w) CHECK(abs(x) <= bound);
    }
  }

  TEST_CASE("kernel_basis spans the full kernel") {
    const auto k = kernel_basis(iv({0, 0, 1}));
    REQUIRE(k.size() == 2);
    for (const auto& b : k) CHECK(b[2] == 0);
    CHECK(abs(determinant(IntMatrix::from_columns({k[0], k[1], iv({0, 0, 1})}))) == 1);

    Gen gen(12);
    for (int n = 0; n < 200; ++n) {
      const int d = static_cast<int>(gen.uniform(3, 7));
      const Coords c = gen.primitive(d, 30);
      IntVector v;
      for (auto x : c) v.emplace_back(static_cast<long>(x));
      auto basis = kernel_basis(v);
      REQUIRE(basis.size() == static_cast<std::size_t>(d - 1));
      for (const auto& b : basis) CHECK(dot(b, v) == 0);
      // Index 1 in the kernel: [basis, v] has determinant +-|v|^2.
      basis.push_back(v);
      CHECK(abs(determinant(IntMatrix::from_columns(basis))) == dot(v, v));
    }
    CHECK_THROWS_AS(kernel_basis(iv({0, 0, 0})), DomainError);
  }

  TEST_CASE("unimodular completion") {
    Gen gen(13);
    for (int n = 0; n < 200; ++n) {
      const Coords c = gen.primitive(static_cast<int>(gen.uniform(2, 6)), 1000);
      IntVector v;
      for (auto x : c) v.emplace_back(static_cast<long>(x));
      const IntMatrix u = unimodular_completion(v);
      CHECK(is_unimodular(u));
      const IntVector row = u.transpose() * v;
      CHECK(row[0] == 1);
      for (std::size_t i = 1; i < row.size(); ++i) CHECK(row[i] == 0);
    }
  }

  TEST_CASE("checked64 and Integer kernels agree") {
    Gen gen(14);
    for (int n = 0; n < 200; ++n) {
      const Coords c = gen.primitive(static_cast<int>(gen.uniform(3, 6)), 5000);
      std::vector<Checked64> small(c.begin(), c.end());
      IntVector big;
      for (auto x : c) big.emplace_back(static_cast<long>(x));
      const auto us = kernels::unimodular_completion(small);
      const auto ub = kernels::unimodular_completion(big);
      for (std::size_t i = 0; i < c.size(); ++i)
        for (std::size_t j = 0; j < c.size(); ++j) CHECK(to_integer(us(i, j)) == ub(i, j));
    }
  }

  TEST_CASE("determinant matches the Leibniz expansion") {
    Gen gen(15);
    for (int n = 0; n < 100; ++n) {
      const auto size = static_cast<std::size_t>(gen.uniform(1, 5));
      IntMatrix m(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m(i, j) = static_cast<long>(gen.uniform(-9, 9));
      CHECK(determinant(m) == leibniz(m));
      CHECK(determinant(to_rational(m)) == Rational(leibniz(m)));
    }
  }

  TEST_CASE("solve_rational examples and Cramer oracle") {
    CHECK(solve_rational(IntMatrix::identity(2), iv({1, 2})) == RatVector{1, 2});
    CHECK(solve_rational(im({{2, -1}, {-1, 2}}), iv({1, 0})) == RatVector{Rational(2, 3), Rational(1, 3)});
    CHECK(solve_rational(im({{2, 0}, {0, 1}}), iv({1, 0})) == RatVector{Rational(1, 2), 0});
    CHECK_THROWS_AS(solve_rational(im({{1, 2}, {2, 4}}), iv({1, 0})), DomainError);

    Gen gen(16);
    for (int n = 0; n < 200; ++n) {
      IntMatrix a(2, 2);
      for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) a(i, j) = static_cast<long>(gen.uniform(-20, 20));
      const Integer det = a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
      if (det == 0) continue;
      const IntVector b = iv({static_cast<long>(gen.uniform(-20, 20)), static_cast<long>(gen.uniform(-20, 20))});
      const RatVector x = solve_rational(a, b);
      CHECK(x[0] == make_rational(b[0] * a(1, 1) - a(0, 1) * b[1], det));
      CHECK(x[1] == make_rational(a(0, 0) * b[1] - b[0] * a(1, 0), det));
    }
  }

  TEST_CASE("solve_rational reproduces b and denominators divide det") {
    Gen gen(17);
    for (int n = 0; n < 100; ++n) {
      const auto size = static_cast<std::size_t>(gen.uniform(2, 5));
      IntMatrix a(size, size);
      for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) a(i, j) = static_cast<long>(gen.uniform(-9, 9));
      const Integer det = determinant(a);
      if (det == 0) continue;
      IntVector b;
      for (std::size_t i = 0; i < size; ++i) b.emplace_back(static_cast<long>(gen.uniform(-9, 9)));
      const RatVector x = solve_rational(a, b);
      CHECK(to_rational(a) * x == to_rational(b));
      for (const auto& q : x) CHECK(det % q.get_den() == 0);
    }
  }

  TEST_CASE("rational inverse") {
    Gen gen(18);
    for (int n = 0; n < 50; ++n) {
      const RatMatrix a = gen.invertible_rational(static_cast<std::size_t>(gen.uniform(1, 4)), 7);
      CHECK(a * inverse(a) == RatMatrix::identity(a.rows()));
    }
  }

  TEST_CASE("lll examples") {
    const auto id = lll_reduce_gram(IntMatrix::identity(3));
    CHECK(id.gram == IntMatrix::identity(3));
    CHECK(is_unimodular(id.transform));

    const IntMatrix hex = im({{2, -1}, {-1, 2}});
    const auto h = lll_reduce_gram(hex);
    CHECK(determinant(h.gram) == 3);
    CHECK(h.gram(0, 0) == 2);
    CHECK(h.gram(1, 1) == 2);

    const auto r = lll_reduce_gram(im({{5, 3}, {3, 2}}));
    CHECK(r.gram == IntMatrix::identity(2));
    CHECK(congruence(im({{5, 3}, {3, 2}}), r.transform) == r.gram);

    CHECK_THROWS_AS(lll_reduce_gram(im({{1, 2}, {2, 1}})), DomainError);
    CHECK_THROWS_AS(lll_reduce_gram(im({{1, 2}, {0, 5}})), DomainError);
  }

  TEST_CASE("lll properties on random forms") {
    Gen gen(19);
    for (int n = 0; n < 150; ++n) {
      const auto size = static_cast<std::size_t>(gen.uniform(2, 6));
      const IntMatrix g = congruence(gen.positive_definite(size, 4), gen.unimodular(size, 12, 5));
      const auto r = lll_reduce_gram(g);
      CHECK(is_unimodular(r.transform));
      CHECK(congruence(g, r.transform) == r.gram);
      CHECK(determinant(r.gram) == determinant(g));
      CHECK(is_lll_reduced(r.gram));
    }
  }

  TEST_CASE("short vectors match a box search") {
    Gen gen(20);
    for (int n = 0; n < 40; ++n) {
      const auto size = static_cast<std::size_t>(gen.uniform(1, 3));
      const IntMatrix g = gen.positive_definite(size, 3);
      const Integer bound = g(0, 0) + 3;
      std::multiset<Integer> got;
      for (const auto& sv : short_vectors(g, bound)) {
        Integer q = 0;
        for (std::size_t i = 0; i < size; ++i)
          for (std::size_t j = 0; j < size; ++j) q += g(i, j) * sv.coords[i] * sv.coords[j];
        CHECK(q == sv.norm);
        got.insert(sv.norm);
      }
      CHECK(got == brute_norms(g, bound));
    }
  }

  TEST_CASE("successive minima") {
    CHECK(successive_minima(IntMatrix::identity(3)) == std::vector<Integer>{1, 1, 1});
    CHECK(successive_minima(im({{2, 1}, {1, 2}})) == std::vector<Integer>{2, 2});
    CHECK(successive_minima(im({{1, 0}, {0, 7}})) == std::vector<Integer>{1, 7});
  }

  TEST_CASE("canonical_gram examples") {
    CHECK(canonical_gram(im({{2, 0}, {0, 1}})) == im({{1, 0}, {0, 2}}));
    CHECK(canonical_gram(im({{2, -1}, {-1, 2}})) == canonical_gram(im({{2, 1}, {1, 2}})));
    CHECK(canonical_gram(im({{5, 3}, {3, 2}})) == IntMatrix::identity(2));
    CHECK(canonical_gram(im({{7}})) == im({{7}}));
    CHECK_THROWS_AS(canonical_gram(IntMatrix::identity(5)), Unsupported);
  }

  TEST_CASE("proper automorphism group orders") {
    CHECK(proper_automorphisms(IntMatrix::identity(2)).size() == 4);
    CHECK(proper_automorphisms(canonical_gram(im({{2, 1}, {1, 2}}))).size() == 6);
    CHECK(proper_automorphisms(IntMatrix::identity(3)).size() == 24);
    CHECK(proper_automorphisms(IntMatrix::identity(4)).size() == 192);
    CHECK(proper_automorphisms(im({{1, 0}, {0, 3}})).size() == 2);
  }

  TEST_CASE("canonical form is idempotent and a proper class invariant") {
    Gen gen(21);
    for (int n = 0; n < 120; ++n) {
      const auto size = static_cast<std::size_t>(gen.uniform(2, 4));
      const IntMatrix g = lll_reduce_gram(gen.positive_definite(size, 3)).gram;
      const CanonicalForm cf = canonicalize(g);
      CHECK(canonical_gram(cf.gram) == cf.gram);
      for (const auto& u : cf.transforms) {
        CHECK(determinant(u) == 1);
        CHECK(congruence(g, u) == cf.gram);
      }
      CHECK(cf.transforms.size() == proper_automorphisms(cf.gram).size());
      const IntMatrix u = gen.small_unimodular(size);
      CHECK(canonical_gram(congruence(g, u)) == cf.gram);
    }
  }

  TEST_CASE("mirror images stay distinct in rank 2") {
    // [[a,b],[b,c]] and [[a,-b],[-b,c]] are SL_2(Z)-equivalent only on the
    // boundary b = 0, 2|b| = a or a = c of the reduced domain.
    CHECK(canonical_gram(im({{3, 1}, {1, 4}})) != canonical_gram(im({{3, -1}, {-1, 4}})));
    CHECK(canonical_gram(im({{2, 1}, {1, 3}})) == canonical_gram(im({{2, -1}, {-1, 3}})));
    CHECK(canonical_gram(im({{3, 1}, {1, 3}})) == canonical_gram(im({{3, -1}, {-1, 3}})));
  }
}
