#include <doctest.h>

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>
#include <numbers>

#include "../support/generators.hpp"
#include "orthogrid/equistats/equistats.hpp"

using namespace orthogrid;
using orthogrid::testing::Gen;

namespace {

constexpr double kPi = std::numbers::pi;

double chi2_quantile(double dof, double q) {
  return boost::math::quantile(boost::math::chi_squared_distribution<double>(dof), q);
}

WeightedDirections unit_vectors(int d) {
  WeightedDirections w;
  w.d = d;
  for (int i = 0; i < d; ++i)
    for (int s : {1, -1}) {
      for (int k = 0; k < d; ++k) w.coords.push_back(k == i ? s : 0);
      w.weights.push_back(1);
      ++w.total;
    }
  return w;
}

// Normalized hyperbolic mass of [0, a] x [y1, y2] for y1 < 1 <= y2 and a <= 1/2,
// from the arcsin antiderivative of 1 / sqrt(1 - x^2).
double arc_cell(double a, double y1, double y2) {
  const double c = std::sqrt(1.0 - y1 * y1);  // where the arc meets y = y1
  const double top = std::isinf(y2) ? 0.0 : 1.0 / y2;
  double total;
  if (c >= a) {
    total = (std::asin(a)) - a * top;
  } else {
    total = (std::asin(c) - c * top) + (a - c) * (1.0 / y1 - top);
  }
  return 3.0 / kPi * total;
}

// x uniform, 1 / y uniform, rejected below the unit circle: exact draws from
// the normalized hyperbolic measure on the fundamental domain.
ModularPoint draw_modular(Gen& gen) {
  for (;;) {
    const double x = gen.unit() - 0.5;
    const double u = gen.unit() * 2.0 / std::sqrt(3.0);
    if (u == 0) continue;
    const double y = 1.0 / u;
    if (x * x + y * y < 1.0) continue;
    // 2^-30 grid keeps the point exact as a rational.
    const Rational xr(static_cast<long>(std::lround(x * 0x1p30)), 1UL << 30);
    const Rational yr(static_cast<long>(std::lround(y * 0x1p20)), 1UL << 20);
    ModularPoint p{xr, yr * yr};
    p.x.canonicalize();
    p.y2.canonicalize();
    if (p.x == Rational(-1, 2)) p.x = Rational(1, 2);
    return p;
  }
}

}  // namespace

TEST_SUITE("equistats") {
  TEST_CASE("cap area examples") {
    CHECK(cap_area(3, -1.0) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(cap_area(5, 0.0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(cap_area(3, 0.5) == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(cap_area(3, 1.0) == 0.0);
    CHECK_THROWS_AS(cap_area(3, 1.5), DomainError);
    CHECK_THROWS_AS(cap_area(1, 0.0), DomainError);
  }

  TEST_CASE("cap area closed forms") {
    for (double t = -1.0; t <= 1.0; t += 0.0625) {
      // S^2 (Archimedes) and S^1.
      CHECK(std::abs(cap_area(3, t) - (1.0 - t) / 2.0) < 1e-12);
      CHECK(std::abs(cap_area(2, t) - std::acos(t) / kPi) < 1e-12);
      // S^3: (theta - sin theta cos theta) / pi with t = cos theta.
      const double th = std::acos(t);
      CHECK(std::abs(cap_area(4, t) - (th - std::sin(th) * std::cos(th)) / kPi) < 1e-12);
      for (int d = 2; d <= 8; ++d) CHECK(std::abs(cap_area(d, t) + cap_area(d, -t) - 1.0) < 1e-12);
    }
  }

  TEST_CASE("cap family is deterministic and well formed") {
    const auto a = cap_family(4, 100, 7);
    const auto b = cap_family(4, 100, 7);
    REQUIRE(a.size() == 100);
    for (std::size_t i = 0; i < a.size(); ++i) {
      CHECK(a[i].center == b[i].center);
      CHECK(a[i].height == b[i].height);
      double n2 = 0;
      for (double x : a[i].center) n2 += x * x;
      CHECK(std::abs(n2 - 1.0) < 1e-12);
      CHECK(std::abs(a[i].height) < 1.0);
    }
    CHECK(cap_family(4, 1, 8)[0].center != a[0].center);
  }

  TEST_CASE("cap discrepancy of the unit vectors") {
    const auto pts = unit_vectors(3);
    // Hemisphere around e_1 holds e_1, +-e_2, +-e_3 (boundary included): 5/6.
    const std::vector<Cap> axis = {Cap{{1, 0, 0}, 0.0}};
    CHECK(cap_discrepancy(pts, axis) == doctest::Approx(1.0 / 3.0).epsilon(1e-14));
    const std::vector<Cap> lifted = {Cap{{1, 0, 0}, 0.5}};
    // Only e_1 reaches height 1/2; the cap has area 1/4.
    CHECK(cap_discrepancy(pts, lifted) == doctest::Approx(1.0 / 12.0).epsilon(1e-14));

    WeightedDirections single;
    single.d = 3;
    single.coords = {0, 0, 1};
    single.weights = {1};
    single.total = 1;
    const auto caps = cap_family(3, 512, 3);
    double worst_area = 0;
    for (const auto& c : caps) worst_area = std::max(worst_area, std::min(cap_area(3, c.height), 1 - cap_area(3, c.height)));
    CHECK(cap_discrepancy(single, caps) >= worst_area - 1e-12);

    WeightedDirections empty;
    empty.d = 3;
    CHECK_THROWS_AS(cap_discrepancy(empty, caps), DomainError);
  }

  TEST_CASE("cap discrepancy: parallel equals serial") {
    const SampleBatch b = build_batch(3, Integer(1009), SampleMode::raw);
    const auto pts = directions(b);
    const auto caps = cap_family(3, 2000, 5);
    CHECK(cap_discrepancy(pts, caps) == cap_discrepancy_serial(pts, caps));
  }

  TEST_CASE("ks statistic") {
    std::vector<std::pair<double, std::int64_t>> zeros(30, {0.0, 1});
    CHECK(ks_uniform(zeros) == doctest::Approx(1.0));
    const int n = 64;
    std::vector<std::pair<double, std::int64_t>> grid;
    for (int i = 0; i < n; ++i) grid.emplace_back(static_cast<double>(i) / n, 1);
    CHECK(ks_uniform(grid) <= 1.0 / n + 1e-15);
    // Weights act as multiplicities.
    CHECK(ks_uniform({{0.25, 3}, {0.75, 1}}) == doctest::Approx(ks_uniform({{0.25, 1}, {0.25, 1}, {0.25, 1}, {0.75, 1}})));
    CHECK(ks_uniform({{0.5, 1}}) == doctest::Approx(0.5));
    CHECK_THROWS_AS(ks_uniform({}), DomainError);
  }

  TEST_CASE("hyperbolic cell measure") {
    CHECK(hyperbolic_cell_measure(-0.5, 0.5, 0.0, INFINITY) == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(hyperbolic_cell_measure(-0.5, 0.5, 1.0, INFINITY) == doctest::Approx(3.0 / kPi).epsilon(1e-14));
    CHECK(hyperbolic_cell_measure(-0.5, 0.5, 2.0, INFINITY) == doctest::Approx(1.5 / kPi).epsilon(1e-14));
    CHECK(hyperbolic_cell_measure(-3, 3, 0.0, 0.5) == 0.0);
    CHECK_THROWS_AS(hyperbolic_cell_measure(0, 1, -1, 2), DomainError);

    for (double a : {0.1, 0.3, 0.5})
      for (double y1 : {0.0, 0.5, 0.8, 0.9, 0.95})
        for (double y2 : {1.0, 1.3, static_cast<double>(INFINITY)})
          CHECK(std::abs(hyperbolic_cell_measure(0, a, y1, y2) - arc_cell(a, y1, y2)) < 1e-10);
    // Mirror symmetry.
    CHECK(hyperbolic_cell_measure(-0.4, -0.1, 0.9, 1.2) ==
          doctest::Approx(hyperbolic_cell_measure(0.1, 0.4, 0.9, 1.2)).epsilon(1e-12));
  }

  TEST_CASE("hyperbolic measure is additive") {
    Gen gen(61);
    for (int n = 0; n < 100; ++n) {
      const double x1 = gen.unit() - 0.5, x2 = x1 + gen.unit() * (0.5 - x1);
      const double xm = x1 + gen.unit() * (x2 - x1);
      const double y1 = 0.8 * gen.unit(), y2 = y1 + 1.5 * gen.unit(), ym = y1 + gen.unit() * (y2 - y1);
      const double whole = hyperbolic_cell_measure(x1, x2, y1, y2);
      CHECK(std::abs(whole - hyperbolic_cell_measure(x1, xm, y1, y2) - hyperbolic_cell_measure(xm, x2, y1, y2)) < 1e-10);
      CHECK(std::abs(whole - hyperbolic_cell_measure(x1, x2, y1, ym) - hyperbolic_cell_measure(x1, x2, ym, y2)) < 1e-10);
    }
  }

  TEST_CASE("shape cells partition the fundamental domain") {
    const auto m = shape_cell_measures();
    double total = 0;
    for (std::size_t c = 0; c < kShapeCells; ++c) {
      CHECK(m[c] > 0.02);
      total += m[c];
    }
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    for (std::size_t b = 0; b < 6; ++b) CHECK(m[2 * b] == doctest::Approx(m[2 * b + 1]).epsilon(1e-12));

    CHECK(shape_cell(ModularPoint{0, 1}) == 3);  // band [1, 1.25), x >= 0
    CHECK(shape_cell(ModularPoint{Rational(1, 2), Rational(3, 4)}) == 1);
    CHECK(shape_cell(ModularPoint{Rational(-1, 4), Rational(15, 16)}) == 0);
    CHECK(shape_cell(ModularPoint{0, 100}) == 11);
    CHECK(shape_cell(ModularPoint{0, Rational(25, 16)}) == 5);  // band edges belong to the upper band
  }

  TEST_CASE("shape chi-square: synthetic hyperbolic sample passes at 5%") {
    Gen gen(62);
    std::vector<std::pair<ModularPoint, std::int64_t>> pts;
    const int n = 4000;
    for (int i = 0; i < n; ++i) pts.emplace_back(draw_modular(gen), 1);
    const ShapeChi2 s = shape_chi2(pts);
    CHECK(s.n == n);
    CHECK(n * s.distance < chi2_quantile(kShapeCells - 1, 0.95));

    // Degenerate sample: all mass in one cell.
    std::vector<std::pair<ModularPoint, std::int64_t>> one(200, {ModularPoint{0, 1}, 1});
    const ShapeChi2 d = shape_chi2(one);
    CHECK(d.distance == doctest::Approx(1.0 / shape_cell_measures()[3] - 1.0));
    CHECK_THROWS_AS(shape_chi2({{ModularPoint{0, 1}, 10}}), DomainError);
  }

  TEST_CASE("cramer V^2") {
    CHECK(cramer_v2({{5, 0}, {0, 5}}) == doctest::Approx(1.0));
    CHECK(cramer_v2({{10, 10}, {10, 10}}) == doctest::Approx(0.0));
    CHECK(cramer_v2({{7, 7, 7}}) == 1.0);
    CHECK(cramer_v2({{4}, {9}}) == 1.0);
    // 2x2: V^2 = (ad - bc)^2 / (row and column products).
    CHECK(cramer_v2({{3, 1}, {2, 4}}) == doctest::Approx(100.0 / (4.0 * 6.0 * 5.0 * 5.0)));

    // Independent synthetic table: n V^2 (min - 1) ~ chi2 with 9 dof.
    Gen gen(63);
    std::vector<std::vector<std::int64_t>> t(4, std::vector<std::int64_t>(4, 0));
    const int n = 5000;
    for (int i = 0; i < n; ++i) ++t[static_cast<std::size_t>(gen.uniform(0, 3))][static_cast<std::size_t>(gen.uniform(0, 3))];
    CHECK(n * cramer_v2(t) * 3 < chi2_quantile(9, 0.95));
  }

  TEST_CASE("orbit and raw batches describe the same measure") {
    for (long D : {101L, 1009L, 206L}) {
      const SampleBatch orbit = build_batch(3, Integer(D), SampleMode::orbit);
      const SampleBatch raw = build_batch(3, Integer(D), SampleMode::raw);
      CHECK(orbit.n_points() == raw.n_points());
      CHECK(orbit.n_points() == static_cast<std::int64_t>(enumerate_sphere(3, Integer(D)).size()));
      const StatReport a = compute_report(orbit, 1024);
      const StatReport b = compute_report(raw, 1024);
      CHECK(a.cap_discrepancy == doctest::Approx(b.cap_discrepancy).epsilon(1e-12));
      CHECK(a.torus.ks == b.torus.ks);
      CHECK(a.torus.pair_chi2.size() == b.torus.pair_chi2.size());
      REQUIRE(a.shape.has_value() == b.shape.has_value());
      if (a.shape) CHECK(a.shape->counts == b.shape->counts);
      if (a.joint) CHECK(*a.joint == doctest::Approx(*b.joint).epsilon(1e-12));
    }
    const SampleBatch o4 = build_batch(4, Integer(150), SampleMode::orbit);
    const SampleBatch r4 = build_batch(4, Integer(150), SampleMode::raw);
    const StatReport a4 = compute_report(o4, 512), b4 = compute_report(r4, 512);
    CHECK(a4.torus.ks == b4.torus.ks);
    CHECK(*a4.lambda1_mean == doctest::Approx(*b4.lambda1_mean).epsilon(1e-12));
  }

  TEST_CASE("parallel batch equals the serial reference") {
    for (int d = 3; d <= 5; ++d) {
      const SampleBatch par = build_batch(d, Integer(101), SampleMode::raw);
      const SampleBatch ser = build_batch_serial(d, Integer(101), SampleMode::raw);
      REQUIRE(par.records.size() == ser.records.size());
      for (std::size_t i = 0; i < par.records.size(); ++i) {
        CHECK(par.records[i].v == ser.records[i].v);
        CHECK(par.records[i].shape == ser.records[i].shape);
        CHECK(par.records[i].t == ser.records[i].t);
      }
    }
  }

  TEST_CASE("report content and ranges") {
    const StatReport r = compute_report(build_batch(3, Integer(1009), SampleMode::orbit));
    CHECK(r.n_points == 240);
    CHECK(r.cap_discrepancy >= 0);
    CHECK(r.cap_discrepancy <= 1);
    REQUIRE(r.torus.ks.size() == 2);
    for (double k : r.torus.ks) CHECK((k >= 0 && k <= 1));
    CHECK(r.shape.has_value());
    CHECK_FALSE(r.lambda1_mean.has_value());
    CHECK_FALSE(r.joint.has_value());

    const StatReport big = compute_report(build_batch(3, Integer(10009), SampleMode::orbit), 256);
    REQUIRE(big.joint.has_value());
    CHECK((*big.joint >= 0 && *big.joint <= 1));

    const StatReport tiny = compute_report(build_batch(3, Integer(3), SampleMode::orbit), 64);
    CHECK(tiny.n_points == 8);
    CHECK(tiny.torus.ks.empty());
    CHECK_THROWS_AS(torus_uniformity(build_batch(3, Integer(3), SampleMode::orbit)), DomainError);
  }

  TEST_CASE("degenerate torus sample") {
    // Every record of S^2(1) has marked point 0.
    SampleBatch b = build_batch(3, Integer(1), SampleMode::raw);
    const auto extra = b.records;
    for (int k = 0; k < 3; ++k) b.records.insert(b.records.end(), extra.begin(), extra.end());
    const TorusReport t = torus_uniformity(b);
    for (double k : t.ks) CHECK(k == doctest::Approx(1.0));
  }
}
