#include <algorithm>
#include <cmath>

#include "orthogrid/equistats/equistats.hpp"
#include "orthogrid/errors.hpp"

namespace orthogrid {
namespace {

// Quartile class (0..3) of each key: the number of weighted quartiles the
// key strictly exceeds.
template <typename Key>
std::vector<std::size_t> quartile_classes(const std::vector<Key>& keys, const std::vector<std::int64_t>& weights) {
  std::vector<std::size_t> order(keys.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  std::int64_t total = 0;
  for (std::int64_t w : weights) total += w;
  std::vector<Key> cuts;
  std::int64_t acc = 0;
  std::size_t next = 1;
  for (std::size_t i : order) {
    acc += weights[i];
    while (next <= 3 && 4 * acc >= static_cast<std::int64_t>(next) * total) {
      cuts.push_back(keys[i]);
      ++next;
    }
  }
  std::vector<std::size_t> cls(keys.size());
  for (std::size_t i = 0; i < keys.size(); ++i) {
    std::size_t c = 0;
    for (const auto& q : cuts)
      if (keys[i] > q) ++c;
    cls[i] = c;
  }
  return cls;
}

}  // namespace

double cramer_v2(const std::vector<std::vector<std::int64_t>>& table) {
  std::vector<double> rows, cols;
  double n = 0;
  for (const auto& r : table) {
    if (cols.size() < r.size()) cols.resize(r.size(), 0.0);
    double s = 0;
    for (std::size_t j = 0; j < r.size(); ++j) {
      s += static_cast<double>(r[j]);
      cols[j] += static_cast<double>(r[j]);
    }
    rows.push_back(s);
    n += s;
  }
  const auto live = [](const std::vector<double>& v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](double x) { return x > 0; }));
  };
  const std::size_t nr = live(rows), nc = live(cols);
  if (nr < 2 || nc < 2) return 1.0;
  double chi2 = 0;
  for (std::size_t i = 0; i < table.size(); ++i) {
    if (rows[i] == 0) continue;
    for (std::size_t j = 0; j < cols.size(); ++j) {
      if (cols[j] == 0) continue;
      const double observed = j < table[i].size() ? static_cast<double>(table[i][j]) : 0.0;
      const double expected = rows[i] * cols[j] / n;
      chi2 += (observed - expected) * (observed - expected) / expected;
    }
  }
  return chi2 / n / static_cast<double>(std::min(nr, nc) - 1);
}

double joint_independence(const SampleBatch& batch) {
  if (batch.n_points() < kMinJointPoints) throw DomainError("joint_independence: too few points");
  std::vector<std::int64_t> weights, max_coord;
  std::vector<Rational> t1;
  for (const auto& r : batch.records) {
    weights.push_back(r.weight);
    std::int64_t m = 0;
    for (std::int64_t x : r.v) m = std::max(m, x < 0 ? -x : x);
    max_coord.push_back(m);
    t1.push_back(r.t.front());
  }
  const auto row = quartile_classes(max_coord, weights);
  std::vector<std::size_t> col;
  std::size_t ncols = 4;
  if (batch.d == 3) {
    ncols = kShapeCells;
    for (const auto& r : batch.records) col.push_back(shape_cell(*r.modular));
  } else {
    col = quartile_classes(t1, weights);
  }
  std::vector<std::vector<std::int64_t>> table(4, std::vector<std::int64_t>(ncols, 0));
  for (std::size_t i = 0; i < batch.records.size(); ++i) table[row[i]][col[i]] += weights[i];
  return cramer_v2(table);
}

StatReport compute_report(const SampleBatch& batch, int cap_count, std::uint64_t cap_seed) {
  StatReport rep;
  rep.d = batch.d;
  rep.D = batch.D;
  rep.mode = batch.mode;
  rep.n_points = batch.n_points();
  rep.n_records = static_cast<std::int64_t>(batch.records.size());
  rep.cap_count = cap_count;
  rep.cap_seed = cap_seed;
  rep.cap_discrepancy = cap_discrepancy(batch, cap_family(batch.d, cap_count, cap_seed));
  if (rep.n_points >= kMinTorusPoints) rep.torus = torus_uniformity(batch);
  if (batch.d == 3 && rep.n_points >= kMinShapePoints) rep.shape = shape_chi2_d3(batch);
  if (batch.d >= 4) {
    // lambda_1 * covol^{-1/(d-1)} with covol = sqrt(D).
    const double scale = std::pow(batch.D.get_d(), -0.5 / (batch.d - 1));
    double acc = 0;
    for (const auto& r : batch.records) acc += static_cast<double>(r.weight) * std::sqrt(r.lambda1.get_d()) * scale;
    rep.lambda1_mean = acc / static_cast<double>(rep.n_points);
  }
  if (rep.n_points >= kMinJointPoints) rep.joint = joint_independence(batch);
  return rep;
}

}  // namespace orthogrid
