#pragma once

// The orthogonal lattice Lambda_v = Z^d cap v^perp of a primitive vector:
// frame (basis, w, g_v), Gram form, shape and grid classes, and the
// modular-surface point of a rank-2 shape.

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "orthogrid/exactla/exactla.hpp"
#include "orthogrid/sphere/sphere.hpp"

namespace orthogrid {

// basis v_1..v_{d-1} of Lambda_v, a completion vector w with <w, v> = 1, and
// g_v = [v_1 .. v_{d-1} w] with det g_v = +1.
class OrthoFrame {
 public:
  // Validates every frame identity and throws InvariantViolation if one
  // fails. If det [basis, w] = -1, basis[0] is negated first.
  OrthoFrame(PrimitiveVector v, std::vector<IntVector> basis, IntVector w);

  const PrimitiveVector& v() const { return v_; }
  const std::vector<IntVector>& basis() const { return basis_; }
  const IntVector& w() const { return w_; }
  const IntMatrix& g() const { return g_; }
  std::size_t rank() const { return basis_.size(); }

 private:
  PrimitiveVector v_;
  std::vector<IntVector> basis_;
  IntVector w_;
  IntMatrix g_;
};

// Deterministic frame from the Euclidean unimodular completion of v.
OrthoFrame ortho_frame(const PrimitiveVector& v);

// Another valid frame for the same v: the basis is re-based by a random
// unimodular matrix and w is shifted by a random element of Lambda_v.
OrthoFrame randomized_frame(const PrimitiveVector& v, std::mt19937_64& rng);

// M_ij = <v_i, v_j>, with det M = D and content 1.
struct GramForm {
  IntMatrix M;
  Integer D;
};

// Throws InvariantViolation if det M != D or the entries are not coprime.
GramForm gram_form(const OrthoFrame& frame);

struct ShapeClass {
  IntMatrix gram;  // canonical Gram, or LLL-reduced when rank > 4
  Integer D;
  std::size_t dim = 0;
  bool canonical = true;

  friend bool operator==(const ShapeClass&, const ShapeClass&) = default;
};

struct GridClass {
  ShapeClass shape;
  RatVector t;  // marked point in the canonical basis, entries in [0, 1)

  friend bool operator==(const GridClass&, const GridClass&) = default;
};

ShapeClass shape(const OrthoFrame& frame);
ShapeClass shape(const PrimitiveVector& v);
GridClass grid(const OrthoFrame& frame);
GridClass grid(const PrimitiveVector& v);

// Coordinates of the orthogonal projection of w onto v^perp in the frame
// basis: M^{-1} c with c_i = <w, v_i>.
RatVector marked_point(const OrthoFrame& frame, const GramForm& form);

// Both at once, sharing the canonicalization.
struct ShapeAndGrid {
  ShapeClass shape;
  GridClass grid;
  // t in every canonical basis (one per proper automorphism), mod 1.
  std::vector<RatVector> t_images;
};
ShapeAndGrid classify(const OrthoFrame& frame);

// "dim|D|g00,g01,...|canonical" and the same followed by "|t1,t2,...".
std::string serialize(const ShapeClass& s);
std::string serialize(const GridClass& g);

// tau = x + i y in the closed fundamental domain |x| <= 1/2, |tau| >= 1,
// kept exactly as the pair (x, y^2). Ties: x = -1/2 becomes +1/2, and on
// |tau| = 1 the point with x >= 0 is chosen.
struct ModularPoint {
  Rational x;
  Rational y2;

  double real() const { return x.get_d(); }
  double imag() const;
  friend bool operator==(const ModularPoint&, const ModularPoint&) = default;
};

// From any positive-definite 2x2 Gram [[a, b], [b, c]]: tau = (b + i sqrt(ac - b^2)) / a,
// then reduced by SL_2(Z).
ModularPoint modular_point(const IntMatrix& gram);
ModularPoint modular_point(const ShapeClass& s);

// Exact identity checks over a list of vectors: gcd, norm, det M = D,
// content M = 1, <w, v> = 1, det g_v = +1, |det(v_1..v_{d-1}, v)| = D.
struct IdentityViolation {
  Coords v;
  std::string what;
};

struct IdentityReport {
  std::int64_t checked = 0;
  std::int64_t wide_fallbacks = 0;  // vectors that needed arbitrary precision
  std::vector<IdentityViolation> violations;
};

// OpenMP over vectors; violations are reported in input order.
IdentityReport check_identities(const std::vector<Coords>& vectors, std::int64_t D);
IdentityReport check_identities_serial(const std::vector<Coords>& vectors, std::int64_t D);

}  // namespace orthogrid
