#include "frame_kernel.hpp"
#include "orthogrid/ortho/ortho.hpp"

namespace orthogrid {
namespace {

struct Outcome {
  std::optional<std::string> failure;
  bool widened = false;
};

Outcome check_one(const Coords& v, std::int64_t D) {
  Outcome out;
  try {
    try {
      const std::vector<Checked64> narrow(v.begin(), v.end());
      out.failure = detail::frame_identity_failure(narrow, Checked64(D));
    } catch (const Overflow&) {
      out.widened = true;
      IntVector wide;
      for (std::int64_t x : v) wide.push_back(to_integer(x));
      out.failure = detail::frame_identity_failure(wide, to_integer(D));
    }
  } catch (const std::exception& e) {
    out.failure = std::string("exception: ") + e.what();
  }
  return out;
}

void record(IdentityReport& report, const Coords& v, Outcome&& o) {
  ++report.checked;
  if (o.widened) ++report.wide_fallbacks;
  if (o.failure) report.violations.push_back({v, std::move(*o.failure)});
}

}  // namespace

IdentityReport check_identities_serial(const std::vector<Coords>& vectors, std::int64_t D) {
  IdentityReport report;
  for (const auto& v : vectors) record(report, v, check_one(v, D));
  return report;
}

IdentityReport check_identities(const std::vector<Coords>& vectors, std::int64_t D) {
  const auto n = static_cast<std::int64_t>(vectors.size());
  std::vector<Outcome> outcomes(vectors.size());
#pragma omp parallel for schedule(dynamic, 256)
  for (std::int64_t i = 0; i < n; ++i) outcomes[static_cast<std::size_t>(i)] = check_one(vectors[static_cast<std::size_t>(i)], D);
  IdentityReport report;
  for (std::size_t i = 0; i < vectors.size(); ++i) record(report, vectors[i], std::move(outcomes[i]));
  return report;
}

}  // namespace orthogrid
