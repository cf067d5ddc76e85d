#include <boost/math/special_functions/beta.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "orthogrid/equistats/equistats.hpp"
#include "orthogrid/errors.hpp"

namespace orthogrid {
namespace {

// Uniform in [0, 1) from the top 53 bits; unlike std::uniform_real_distribution
// the sequence is the same on every standard library.
double unit_uniform(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

double gaussian(std::mt19937_64& rng) {
  const double u1 = 1.0 - unit_uniform(rng);
  const double u2 = unit_uniform(rng);
  return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
}

std::int64_t cap_count(const WeightedDirections& pts, const Cap& cap) {
  const std::size_t d = static_cast<std::size_t>(pts.d);
  std::int64_t inside = 0;
  for (std::size_t k = 0; k < pts.size(); ++k) {
    const double* x = &pts.coords[k * d];
    double s = 0;
    for (std::size_t i = 0; i < d; ++i) s += x[i] * cap.center[i];
    if (s >= cap.height) inside += pts.weights[k];
  }
  return inside;
}

double cap_error(const WeightedDirections& pts, const Cap& cap) {
  const double emp = static_cast<double>(cap_count(pts, cap)) / static_cast<double>(pts.total);
  return std::abs(emp - cap_area(pts.d, cap.height));
}

void check_points(const WeightedDirections& pts, const std::vector<Cap>& caps) {
  if (pts.total <= 0) throw DomainError("cap_discrepancy: empty batch");
  for (const auto& c : caps)
    if (c.center.size() != static_cast<std::size_t>(pts.d)) throw DomainError("cap_discrepancy: cap of wrong dimension");
}

}  // namespace

double cap_area(int d, double t) {
  if (d < 2) throw DomainError("cap_area: d must be at least 2");
  if (!(t >= -1.0 && t <= 1.0)) throw DomainError("cap_area: height outside [-1, 1]");
  if (t < 0) return 1.0 - cap_area(d, -t);
  if (t == 1.0) return 0.0;
  // The cap of height t has normalized area I_{1-t^2}((d-1)/2, 1/2) / 2.
  return 0.5 * boost::math::ibeta(0.5 * (d - 1), 0.5, 1.0 - t * t);
}

std::vector<Cap> cap_family(int d, int count, std::uint64_t seed) {
  if (d < 2 || count < 1) throw DomainError("cap_family: bad arguments");
  std::mt19937_64 rng(seed);
  std::vector<Cap> caps;
  caps.reserve(static_cast<std::size_t>(count));
  while (static_cast<int>(caps.size()) < count) {
    Cap c;
    double norm2 = 0;
    for (int i = 0; i < d; ++i) {
      c.center.push_back(gaussian(rng));
      norm2 += c.center.back() * c.center.back();
    }
    if (norm2 == 0) continue;
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& x : c.center) x *= inv;
    c.height = 2.0 * unit_uniform(rng) - 1.0;
    caps.push_back(std::move(c));
  }
  return caps;
}

double cap_discrepancy_serial(const WeightedDirections& pts, const std::vector<Cap>& caps) {
  check_points(pts, caps);
  double worst = 0;
  for (const auto& c : caps) worst = std::max(worst, cap_error(pts, c));
  return worst;
}

double cap_discrepancy(const WeightedDirections& pts, const std::vector<Cap>& caps) {
  check_points(pts, caps);
  double worst = 0;
  const auto n = static_cast<std::int64_t>(caps.size());
#pragma omp parallel for reduction(max : worst) schedule(static)
  for (std::int64_t k = 0; k < n; ++k) worst = std::max(worst, cap_error(pts, caps[static_cast<std::size_t>(k)]));
  return worst;
}

double cap_discrepancy(const SampleBatch& batch, const std::vector<Cap>& caps) {
  return cap_discrepancy(directions(batch), caps);
}

WeightedDirections directions(const SampleBatch& batch) {
  WeightedDirections out;
  out.d = batch.d;
  const double scale = 1.0 / std::sqrt(batch.D.get_d());
  auto push = [&](const Coords& v, std::int64_t w) {
    for (std::int64_t x : v) out.coords.push_back(static_cast<double>(x) * scale);
    out.weights.push_back(w);
    out.total += w;
  };
  for (const auto& r : batch.records) {
    if (batch.mode == SampleMode::raw) {
      push(r.v, r.weight);
    } else {
      for (const auto& image : orbit_images(r.v)) push(image, 1);
    }
  }
  return out;
}

}  // namespace orthogrid
