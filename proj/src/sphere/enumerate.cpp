#include <numeric>
#include <sstream>

#include "orthogrid/errors.hpp"
#include "orthogrid/sphere/sphere.hpp"

namespace orthogrid {
namespace {

void check_request(int d, const Integer& D, double volume, const EnumerationBudget& budget) {
  if (d < kMinDimension || d > kMaxDimension) throw DomainError("enumerate_sphere: d must lie in [3, 8]");
  if (D < 1) throw DomainError("enumerate_sphere: D must be positive");
  if (volume > budget.max_search_volume) {
    std::ostringstream os;
    os << "search volume " << volume << " for d=" << d << ", D=" << D.get_str() << " exceeds budget "
       << budget.max_search_volume;
    throw BudgetExceeded(os.str());
  }
  if (!D.fits_slong_p()) throw BudgetExceeded("enumerate_sphere: D does not fit in 64 bits");
}

// Depth-first walk over coordinates in descending order; `g` is the gcd of
// the prefix.
class SphereWalk {
 public:
  SphereWalk(int d, std::vector<PrimitiveVector>& out) : d_(d), x_(d), out_(out) {}

  void walk(int i, std::int64_t remaining, std::int64_t g) {
    if (i == d_ - 1) {
      const std::int64_t s = isqrt64(remaining);
      if (s * s != remaining) return;
      for (std::int64_t last : {s, -s}) {
        if (std::gcd(g, last) == 1) {
          x_[i] = last;
          out_.emplace_back(x_);
        }
        if (s == 0) break;
      }
      return;
    }
    const std::int64_t s = isqrt64(remaining);
    for (std::int64_t x = s; x >= -s; --x) {
      x_[i] = x;
      walk(i + 1, remaining - x * x, std::gcd(g, x));
    }
  }

  Coords& prefix() { return x_; }

 private:
  int d_;
  Coords x_;
  std::vector<PrimitiveVector>& out_;
};

// Nonincreasing nonnegative tuples with the given square sum.
class SortedWalk {
 public:
  SortedWalk(int d, std::vector<Coords>& out) : d_(d), x_(d), out_(out) {}

  void walk(int i, std::int64_t remaining, std::int64_t cap, std::int64_t g) {
    const int left = d_ - i;
    if (i == d_ - 1) {
      const std::int64_t s = isqrt64(remaining);
      if (s * s != remaining || s > cap || std::gcd(g, s) != 1) return;
      x_[i] = s;
      out_.push_back(x_);
      return;
    }
    const std::int64_t hi = std::min(cap, isqrt64(remaining));
    // remaining <= left * x^2 is needed for the tail to fit under x.
    std::int64_t lo = isqrt64(remaining / left);
    while (lo * lo * left < remaining) ++lo;
    for (std::int64_t x = hi; x >= lo; --x) {
      x_[i] = x;
      walk(i + 1, remaining - x * x, x, std::gcd(g, x));
    }
  }

  void set_first(std::int64_t x) { x_[0] = x; }

 private:
  int d_;
  Coords x_;
  std::vector<Coords>& out_;
};

bool has_odd_stabilizer(const Coords& sorted_abs) {
  for (std::size_t i = 0; i < sorted_abs.size(); ++i) {
    if (sorted_abs[i] == 0) return true;
    if (i > 0 && sorted_abs[i] == sorted_abs[i - 1]) return true;
  }
  return false;
}

}  // namespace

std::vector<PrimitiveVector> enumerate_sphere_serial(int d, const Integer& D, const EnumerationBudget& budget) {
  check_request(d, D, search_volume(d, D), budget);
  std::vector<PrimitiveVector> out;
  SphereWalk(d, out).walk(0, D.get_si(), 0);
  return out;
}

std::vector<PrimitiveVector> enumerate_sphere(int d, const Integer& D, const EnumerationBudget& budget) {
  check_request(d, D, search_volume(d, D), budget);
  const std::int64_t n = D.get_si();
  const std::int64_t s = isqrt64(n);
  const std::int64_t chunks = 2 * s + 1;
  std::vector<std::vector<PrimitiveVector>> parts(static_cast<std::size_t>(chunks));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t c = 0; c < chunks; ++c) {
    const std::int64_t first = s - c;
    auto& part = parts[static_cast<std::size_t>(c)];
    SphereWalk walk(d, part);
    walk.prefix()[0] = first;
    walk.walk(1, n - first * first, std::abs(first));
  }
  std::vector<PrimitiveVector> out;
  std::size_t total = 0;
  for (const auto& p : parts) total += p.size();
  out.reserve(total);
  for (auto& p : parts) {
    for (auto& v : p) out.push_back(std::move(v));
  }
  return out;
}

std::vector<PrimitiveVector> enumerate_orbit_reps(int d, const Integer& D, const EnumerationBudget& budget) {
  // Sorted tuples cover a 1/(2^d d!) slice of the box.
  double slice = 1.0;
  for (int i = 1; i <= d; ++i) slice *= 2.0 * i;
  check_request(d, D, search_volume(d, D) / slice, budget);
  const std::int64_t n = D.get_si();
  const std::int64_t hi = isqrt64(n);
  std::int64_t lo = isqrt64(n / d);
  while (lo * lo * d < n) ++lo;

  std::vector<std::vector<Coords>> parts(static_cast<std::size_t>(hi - lo + 1));
#pragma omp parallel for schedule(dynamic, 1)
  for (std::int64_t first = hi; first >= lo; --first) {
    auto& part = parts[static_cast<std::size_t>(hi - first)];
    SortedWalk walk(d, part);
    walk.set_first(first);
    if (d == 1) continue;
    walk.walk(1, n - first * first, first, first);
  }

  std::vector<PrimitiveVector> out;
  for (auto& part : parts) {
    for (auto& a : part) {
      if (has_odd_stabilizer(a)) {
        out.emplace_back(std::move(a));
      } else {
        Coords flipped = a;
        flipped.back() = -flipped.back();
        out.emplace_back(std::move(a));
        out.emplace_back(std::move(flipped));
      }
    }
  }
  return out;
}

}  // namespace orthogrid
