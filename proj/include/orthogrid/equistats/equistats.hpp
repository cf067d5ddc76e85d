#pragma once

// Discrepancy statistics for the joint distribution of (direction, shape,
// marked point) over a sphere S^{d-1}(D), measured against the uniform
// measure on the sphere, the hyperbolic measure on the modular surface
// (d = 3), and Lebesgue measure on the torus fiber.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "orthogrid/ortho/ortho.hpp"
#include "orthogrid/sphere/sphere.hpp"

namespace orthogrid {

enum class SampleMode { orbit, raw };
std::string to_string(SampleMode m);
SampleMode parse_sample_mode(const std::string& s);

// One Gamma_1-orbit (orbit mode, weight = orbit size) or one vector (raw
// mode, weight 1). Shape and grid are constant on orbits, so both modes
// describe the same measure.
struct SampleRecord {
  Coords v;
  std::int64_t weight = 1;
  ShapeClass shape;
  RatVector t;
  // The images of t under the proper automorphisms of the canonical Gram,
  // with multiplicity; t alone when the shape is not canonical.
  std::vector<RatVector> t_images;
  std::optional<ModularPoint> modular;  // d = 3 only
  Integer lambda1;                      // first minimum of the shape
};

struct SampleBatch {
  int d = 0;
  Integer D;
  SampleMode mode = SampleMode::orbit;
  std::vector<SampleRecord> records;

  std::int64_t n_points() const;
};

SampleRecord make_record(const PrimitiveVector& v, std::int64_t weight);

// Classifies the given (vector, weight) pairs in parallel, keeping order.
SampleBatch make_batch(int d, const Integer& D, SampleMode mode,
                       const std::vector<std::pair<PrimitiveVector, std::int64_t>>& source);

// Enumerates the sphere (orbit reps or all vectors) and classifies every
// record. Parallel over records; identical to the serial version.
SampleBatch build_batch(int d, const Integer& D, SampleMode mode, const EnumerationBudget& budget = {});
SampleBatch build_batch_serial(int d, const Integer& D, SampleMode mode, const EnumerationBudget& budget = {});

// Every point of the batch on the unit sphere with its integer multiplicity
// (orbit records are expanded through orbit_images).
struct WeightedDirections {
  int d = 0;
  std::vector<double> coords;  // row-major, d per point
  std::vector<std::int64_t> weights;
  std::int64_t total = 0;
  std::size_t size() const { return weights.size(); }
};
WeightedDirections directions(const SampleBatch& batch);

// ---- caps ----

// Normalized area of {x in S^{d-1} : <x, n> >= t}.
double cap_area(int d, double t);

struct Cap {
  std::vector<double> center;  // unit vector
  double height = 0;           // caps are {<x, center> >= height}
};

inline constexpr int kDefaultCapCount = 4096;
inline constexpr std::uint64_t kDefaultCapSeed = 20240601;

// Centers from normalized Gaussian vectors (Box-Muller on mt19937_64 bits),
// heights uniform in (-1, 1).
std::vector<Cap> cap_family(int d, int count = kDefaultCapCount, std::uint64_t seed = kDefaultCapSeed);

// max over caps of |empirical mass - cap_area|; caps are lower-inclusive.
double cap_discrepancy(const WeightedDirections& pts, const std::vector<Cap>& caps);
double cap_discrepancy_serial(const WeightedDirections& pts, const std::vector<Cap>& caps);
double cap_discrepancy(const SampleBatch& batch, const std::vector<Cap>& caps);

// ---- torus ----

// sup_x |F_emp(x) - x| for a weighted sample in [0, 1).
double ks_uniform(std::vector<std::pair<double, std::int64_t>> sample);

struct TorusReport {
  std::vector<double> ks;         // per axis
  std::vector<double> pair_chi2;  // per axis pair (i < j), chi-square distance on 8x8 cells
};

inline constexpr std::int64_t kMinTorusPoints = 20;

// Uses the automorphism-symmetrized marked points.
TorusReport torus_uniformity(const SampleBatch& batch);

// ---- modular surface ----

// Normalized hyperbolic measure (3/pi) dx dy / y^2 of [x1, x2] x [y1, y2]
// intersected with the fundamental domain. y2 may be +infinity.
double hyperbolic_cell_measure(double x1, double x2, double y1, double y2);

// 12 cells: 6 bands in y times the halves [-1/2, 0) and [0, 1/2].
inline constexpr std::array<double, 7> kShapeBands = {0.0, 1.0, 1.25, 1.6, 2.2, 3.5, 1e300};
inline constexpr std::size_t kShapeCells = 12;
std::size_t shape_cell(const ModularPoint& p);
std::array<double, kShapeCells> shape_cell_measures();

struct ShapeChi2 {
  double distance = 0;  // sum (phat - p)^2 / p
  std::array<std::int64_t, kShapeCells> counts{};
  std::int64_t n = 0;
};

inline constexpr std::int64_t kMinShapePoints = 100;
ShapeChi2 shape_chi2(const std::vector<std::pair<ModularPoint, std::int64_t>>& points);
ShapeChi2 shape_chi2_d3(const SampleBatch& batch);

// ---- joint ----

// Normalized chi-square (Cramer's V^2) of a contingency table; 1 when the
// table has fewer than two nonempty rows or columns.
double cramer_v2(const std::vector<std::vector<std::int64_t>>& table);

inline constexpr std::int64_t kMinJointPoints = 500;

// Rows: quartile class of max_i |v_i| / |v| (Gamma_1-invariant); columns:
// the 12 modular cells for d = 3, quartiles of t_1 otherwise.
double joint_independence(const SampleBatch& batch);

// ---- reports ----

struct StatReport {
  int d = 0;
  Integer D;
  SampleMode mode = SampleMode::orbit;
  std::int64_t n_points = 0;
  std::int64_t n_records = 0;
  double cap_discrepancy = 0;
  TorusReport torus;
  std::optional<ShapeChi2> shape;        // d = 3
  std::optional<double> lambda1_mean;    // d >= 4: mean of lambda_1 * covol^{-1/(d-1)}, covol = sqrt(D)
  std::optional<double> joint;           // when n_points >= kMinJointPoints
  int cap_count = kDefaultCapCount;
  std::uint64_t cap_seed = kDefaultCapSeed;
};

StatReport compute_report(const SampleBatch& batch, int cap_count = kDefaultCapCount,
                          std::uint64_t cap_seed = kDefaultCapSeed);

}  // namespace orthogrid
