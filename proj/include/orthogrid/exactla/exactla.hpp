#pragma once

// Exact integer and rational linear algebra used by every other module:
// unimodular completion, kernel lattices, Gram-only LLL, exact short-vector
// enumeration and canonical forms of small positive-definite Gram matrices.

#include <cstddef>
#include <vector>

#include "orthogrid/exactla/integer.hpp"
#include "orthogrid/exactla/matrix.hpp"

namespace orthogrid {

// w with <w, v> = 1. Throws DomainError if v is not primitive.
IntVector ext_complete(const IntVector& v);

// d-1 vectors forming a Z-basis of Z^d cap v^perp. Throws on the zero vector.
std::vector<IntVector> kernel_basis(const IntVector& v);

// U with v^T U = e_1^T, |det U| = 1 (column 0 is ext_complete(v)).
IntMatrix unimodular_completion(const IntVector& v);

struct LllResult {
  IntMatrix gram;       // U^T G U
  IntMatrix transform;  // U, columns are the reduced basis in input coordinates
};

// LLL reduction with delta = 3/4 on Gram data alone (integral variant, all
// Gram-Schmidt quantities kept as exact integers). Rejects matrices that are
// not symmetric positive definite.
LllResult lll_reduce_gram(const IntMatrix& g);

// True if g satisfies the size and Lovasz conditions for delta = 3/4.
bool is_lll_reduced(const IntMatrix& g);

struct LatticeVector {
  IntVector coords;  // coefficients w.r.t. the basis of the Gram matrix
  Integer norm;      // coords^T G coords
};

// All nonzero x with x^T G x <= bound, both signs, sorted by (norm, coords
// descending). Exact Fincke-Pohst: interval bounds come from integer square
// roots of rational quantities, so nothing is rounded.
std::vector<LatticeVector> short_vectors(const IntMatrix& g, const Integer& bound);

// Successive minima (as squared norms) of the lattice with Gram matrix g.
std::vector<Integer> successive_minima(const IntMatrix& g);

// Largest rank for which canonical_gram is exact.
inline constexpr std::size_t kMaxCanonicalRank = 4;

struct CanonicalForm {
  IntMatrix gram;
  // Every U with det U = +1 and U^T G U = gram. The first entry is the one
  // used as "the" canonical basis change; the rest differ from it by the
  // proper automorphisms of gram.
  std::vector<IntMatrix> transforms;
};

// Canonical representative of the proper (det +1) Z-equivalence class of a
// positive-definite Gram matrix of rank <= 4. Among all bases whose vectors
// realize the successive minima, picks the Gram matrix whose off-diagonal
// entries, read column-major from the upper triangle (g01, g02, g12, g03,
// ...), are lexicographically largest. Throws Unsupported for rank > 4.
CanonicalForm canonicalize(const IntMatrix& g);
IntMatrix canonical_gram(const IntMatrix& g);

// Proper automorphism group {A : det A = 1, A^T C A = C} of a canonical Gram.
std::vector<IntMatrix> proper_automorphisms(const IntMatrix& canonical);

// Exact solution of A x = b for square nonsingular A.
RatVector solve_rational(const IntMatrix& a, const IntVector& b);
RatVector solve_rational(const RatMatrix& a, const RatVector& b);
RatMatrix inverse(const RatMatrix& a);

}  // namespace orthogrid
