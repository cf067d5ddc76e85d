#include <exception>

#include "orthogrid/equistats/equistats.hpp"
#include "orthogrid/errors.hpp"

namespace orthogrid {
namespace {

std::vector<std::pair<PrimitiveVector, std::int64_t>> sources(int d, const Integer& D, SampleMode mode,
                                                              const EnumerationBudget& budget) {
  std::vector<std::pair<PrimitiveVector, std::int64_t>> out;
  if (mode == SampleMode::raw) {
    for (auto& v : enumerate_sphere(d, D, budget)) out.emplace_back(std::move(v), 1);
  } else {
    for (auto& v : enumerate_orbit_reps(d, D, budget)) {
      const std::int64_t size = orbit_info(v).orbit_size;
      out.emplace_back(std::move(v), size);
    }
  }
  return out;
}

}  // namespace

std::string to_string(SampleMode m) { return m == SampleMode::orbit ? "orbit" : "raw"; }

SampleMode parse_sample_mode(const std::string& s) {
  if (s == "orbit") return SampleMode::orbit;
  if (s == "raw") return SampleMode::raw;
  throw DomainError("unknown mode '" + s + "' (expected orbit or raw)");
}

std::int64_t SampleBatch::n_points() const {
  std::int64_t n = 0;
  for (const auto& r : records) n += r.weight;
  return n;
}

SampleRecord make_record(const PrimitiveVector& v, std::int64_t weight) {
  ShapeAndGrid sg = classify(ortho_frame(v));
  SampleRecord r;
  r.v = v.coords();
  r.weight = weight;
  r.shape = std::move(sg.shape);
  r.t = std::move(sg.grid.t);
  r.t_images = std::move(sg.t_images);
  if (v.d() == 3) r.modular = modular_point(r.shape);
  r.lambda1 = r.shape.canonical ? r.shape.gram(0, 0) : successive_minima(r.shape.gram).front();
  return r;
}

SampleBatch build_batch_serial(int d, const Integer& D, SampleMode mode, const EnumerationBudget& budget) {
  SampleBatch batch{d, D, mode, {}};
  for (const auto& [v, w] : sources(d, D, mode, budget)) batch.records.push_back(make_record(v, w));
  return batch;
}

SampleBatch build_batch(int d, const Integer& D, SampleMode mode, const EnumerationBudget& budget) {
  return make_batch(d, D, mode, sources(d, D, mode, budget));
}

SampleBatch make_batch(int d, const Integer& D, SampleMode mode,
                       const std::vector<std::pair<PrimitiveVector, std::int64_t>>& src) {
  SampleBatch batch{d, D, mode, {}};
  batch.records.resize(src.size());
  const auto n = static_cast<std::int64_t>(src.size());
  std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 16)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto k = static_cast<std::size_t>(i);
    try {
      batch.records[k] = make_record(src[k].first, src[k].second);
    } catch (...) {
#pragma omp critical(batch_failure)
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return batch;
}

}  // namespace orthogrid
