#include <algorithm>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <cmath>
#include <limits>
#include <numbers>

#include "orthogrid/equistats/equistats.hpp"
#include "orthogrid/errors.hpp"

namespace orthogrid {

double hyperbolic_cell_measure(double x1, double x2, double y1, double y2) {
  if (!(y1 >= 0) || !(y2 >= y1) || !(x2 >= x1)) throw DomainError("hyperbolic_cell_measure: cell outside the upper half-plane");
  const double norm = 3.0 / std::numbers::pi;
  const double inv_top = std::isinf(y2) ? 0.0 : 1.0 / y2;
  x1 = std::max(x1, -0.5);
  x2 = std::min(x2, 0.5);
  if (x1 >= x2 || y1 == y2) return 0.0;
  if (y1 >= 1.0) return norm * (x2 - x1) * (1.0 / y1 - inv_top);

  // Inner integral of dy / y^2 from max(y1, sqrt(1 - x^2)) to y2.
  auto inner = [&](double x) {
    const double floor_y = std::max(y1, std::sqrt(std::max(0.0, 1.0 - x * x)));
    return std::max(0.0, 1.0 / floor_y - inv_top);
  };
  // The integrand has kinks where the arc crosses y1 or y2.
  std::vector<double> cuts = {x1, x2};
  for (double y : {y1, y2}) {
    if (y >= 1.0 || std::isinf(y)) continue;
    const double c = std::sqrt(1.0 - y * y);
    for (double x : {-c, c})
      if (x > x1 && x < x2) cuts.push_back(x);
  }
  std::sort(cuts.begin(), cuts.end());
  double total = 0;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    if (cuts[i + 1] <= cuts[i]) continue;
    total += boost::math::quadrature::gauss_kronrod<double, 31>::integrate(inner, cuts[i], cuts[i + 1], 15, 1e-13);
  }
  return norm * total;
}

std::size_t shape_cell(const ModularPoint& p) {
  // Squares of the interior band edges 1, 5/4, 8/5, 11/5, 7/2, compared
  // exactly against y^2.
  static const Rational edges2[] = {Rational(1), Rational(25, 16), Rational(64, 25), Rational(121, 25), Rational(49, 4)};
  std::size_t band = 0;
  for (const auto& e : edges2)
    if (p.y2 >= e) ++band;
  return 2 * band + (p.x < 0 ? 0 : 1);
}

std::array<double, kShapeCells> shape_cell_measures() {
  std::array<double, kShapeCells> m{};
  for (std::size_t band = 0; band + 1 < kShapeBands.size(); ++band) {
    const double top = band + 2 == kShapeBands.size() ? std::numeric_limits<double>::infinity() : kShapeBands[band + 1];
    m[2 * band] = hyperbolic_cell_measure(-0.5, 0.0, kShapeBands[band], top);
    m[2 * band + 1] = hyperbolic_cell_measure(0.0, 0.5, kShapeBands[band], top);
  }
  return m;
}

ShapeChi2 shape_chi2(const std::vector<std::pair<ModularPoint, std::int64_t>>& points) {
  ShapeChi2 out;
  for (const auto& [p, w] : points) {
    out.counts[shape_cell(p)] += w;
    out.n += w;
  }
  if (out.n < kMinShapePoints) throw DomainError("shape_chi2: too few points");
  const auto expected = shape_cell_measures();
  for (std::size_t c = 0; c < kShapeCells; ++c) {
    const double diff = static_cast<double>(out.counts[c]) / static_cast<double>(out.n) - expected[c];
    out.distance += diff * diff / expected[c];
  }
  return out;
}

ShapeChi2 shape_chi2_d3(const SampleBatch& batch) {
  if (batch.d != 3) throw DomainError("shape_chi2_d3: batch must have d = 3");
  std::vector<std::pair<ModularPoint, std::int64_t>> pts;
  pts.reserve(batch.records.size());
  for (const auto& r : batch.records) pts.emplace_back(*r.modular, r.weight);
  return shape_chi2(pts);
}

}  // namespace orthogrid
