#include <algorithm>
#include <numeric>

#include "orthogrid/equistats/equistats.hpp"
#include "orthogrid/errors.hpp"

namespace orthogrid {
namespace {

constexpr int kPairBins = 8;

struct WeightedPoint {
  std::vector<double> t;
  std::int64_t weight;
};

// Each record spreads its weight evenly over its automorphism images; L is
// chosen so that the split stays integral.
std::vector<WeightedPoint> symmetrized_points(const SampleBatch& batch) {
  std::int64_t l = 1;
  for (const auto& r : batch.records) l = std::lcm(l, static_cast<std::int64_t>(r.t_images.size()));
  std::vector<WeightedPoint> out;
  for (const auto& r : batch.records) {
    const std::int64_t share = r.weight * (l / static_cast<std::int64_t>(r.t_images.size()));
    for (const auto& t : r.t_images) {
      WeightedPoint p{{}, share};
      for (const auto& q : t) p.t.push_back(q.get_d());
      out.push_back(std::move(p));
    }
  }
  return out;
}

int bin(double x) { return std::clamp(static_cast<int>(x * kPairBins), 0, kPairBins - 1); }

}  // namespace

double ks_uniform(std::vector<std::pair<double, std::int64_t>> sample) {
  std::sort(sample.begin(), sample.end());
  std::int64_t total = 0;
  for (const auto& [x, w] : sample) total += w;
  if (total <= 0) throw DomainError("ks_uniform: empty sample");
  const auto n = static_cast<double>(total);
  double worst = 0;
  std::int64_t below = 0;
  std::size_t i = 0;
  while (i < sample.size()) {
    const double x = sample[i].first;
    std::int64_t at = 0;
    for (; i < sample.size() && sample[i].first == x; ++i) at += sample[i].second;
    worst = std::max(worst, x - static_cast<double>(below) / n);
    below += at;
    worst = std::max(worst, static_cast<double>(below) / n - x);
  }
  // Mass ends at the last atom; F = 1 from there up to x = 1.
  return worst;
}

TorusReport torus_uniformity(const SampleBatch& batch) {
  if (batch.n_points() < kMinTorusPoints) throw DomainError("torus_uniformity: too few points");
  const auto points = symmetrized_points(batch);
  const std::size_t n = static_cast<std::size_t>(batch.d - 1);
  TorusReport rep;
  for (std::size_t axis = 0; axis < n; ++axis) {
    std::vector<std::pair<double, std::int64_t>> s;
    s.reserve(points.size());
    for (const auto& p : points) s.emplace_back(p.t[axis], p.weight);
    rep.ks.push_back(ks_uniform(std::move(s)));
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      std::vector<std::int64_t> counts(kPairBins * kPairBins, 0);
      std::int64_t total = 0;
      for (const auto& p : points) {
        counts[static_cast<std::size_t>(bin(p.t[a]) * kPairBins + bin(p.t[b]))] += p.weight;
        total += p.weight;
      }
      const double expected = 1.0 / (kPairBins * kPairBins);
      double dist = 0;
      for (std::int64_t c : counts) {
        const double diff = static_cast<double>(c) / static_cast<double>(total) - expected;
        dist += diff * diff / expected;
      }
      rep.pair_chi2.push_back(dist);
    }
  return rep;
}

}  // namespace orthogrid
