#include <algorithm>
#include <optional>

#include "orthogrid/errors.hpp"
#include "orthogrid/exactla/exactla.hpp"

namespace orthogrid {
namespace {

// Branch and bound over bases made of minimal vectors. Level i picks a
// vector of norm lambda_i; the key is the sequence of off-diagonal entries
// in column-major upper-triangular order, and larger keys win.
class CanonicalSearch {
 public:
  // Leaves must have determinant `orientation` so that, composed with the
  // reduction transform, the total change of basis is proper.
  CanonicalSearch(const IntMatrix& reduced, std::vector<std::vector<IntVector>> candidates, int orientation)
      : g_(reduced), n_(reduced.rows()), orientation_(orientation), candidates_(std::move(candidates)) {}

  void run() {
    chosen_.clear();
    key_.clear();
    descend(0);
  }

  const std::vector<IntMatrix>& leaves() const { return leaves_; }
  const std::vector<Integer>& best_key() const { return *best_; }

 private:
  Integer inner(const IntVector& a, const IntVector& b) const {
    Integer s = 0;
    for (std::size_t i = 0; i < n_; ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < n_; ++j) s += a[i] * g_(i, j) * b[j];
    }
    return s;
  }

  // -1: prefix worse than best, 0: equal, +1: better (or no best yet).
  int compare_prefix() const {
    if (!best_) return 1;
    for (std::size_t i = 0; i < key_.size(); ++i) {
      if (key_[i] != (*best_)[i]) return key_[i] > (*best_)[i] ? 1 : -1;
    }
    return 0;
  }

  bool independent_with(const IntVector& x) const {
    // Gram determinant of the chosen vectors plus x is positive iff independent.
    const std::size_t m = chosen_.size() + 1;
    IntMatrix sub(m, m);
    for (std::size_t a = 0; a < m; ++a) {
      const IntVector& va = a + 1 == m ? x : chosen_[a];
      for (std::size_t b = a; b < m; ++b) {
        const IntVector& vb = b + 1 == m ? x : chosen_[b];
        sub(a, b) = sub(b, a) = inner(va, vb);
      }
    }
    return determinant(sub) > 0;
  }

  void descend(std::size_t level) {
    if (level == n_) {
      IntMatrix basis = IntMatrix::from_columns(chosen_);
      if (determinant(basis) != orientation_) return;
      const int cmp = compare_prefix();
      if (cmp > 0) {
        best_ = key_;
        leaves_.clear();
      }
      if (cmp >= 0) leaves_.push_back(std::move(basis));
      return;
    }
    for (const IntVector& x : candidates_[level]) {
      if (std::find(chosen_.begin(), chosen_.end(), x) != chosen_.end()) continue;
      const std::size_t before = key_.size();
      for (const auto& c : chosen_) key_.push_back(inner(c, x));
      if (compare_prefix() >= 0 && independent_with(x)) {
        chosen_.push_back(x);
        descend(level + 1);
        chosen_.pop_back();
      }
      key_.resize(before);
    }
  }

  const IntMatrix& g_;
  std::size_t n_;
  int orientation_;
  std::vector<std::vector<IntVector>> candidates_;
  std::vector<IntVector> chosen_;
  std::vector<Integer> key_;
  std::optional<std::vector<Integer>> best_;
  std::vector<IntMatrix> leaves_;
};

}  // namespace

CanonicalForm canonicalize(const IntMatrix& g) {
  const std::size_t n = g.rows();
  if (n == 0) throw DomainError("canonicalize: empty Gram matrix");
  if (n > kMaxCanonicalRank) throw Unsupported("canonical_gram: rank > 4 is not supported, use lll_reduce_gram");
  const LllResult red = lll_reduce_gram(g);

  Integer bound = 0;
  for (std::size_t i = 0; i < n; ++i) bound = std::max(bound, red.gram(i, i));
  const auto vecs = short_vectors(red.gram, bound);
  const std::vector<Integer> minima = successive_minima(red.gram);

  std::vector<std::vector<IntVector>> candidates(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& lv : vecs)
      if (lv.norm == minima[i]) candidates[i].push_back(lv.coords);
  }

  CanonicalSearch search(red.gram, std::move(candidates), determinant(red.transform) > 0 ? 1 : -1);
  search.run();
  if (search.leaves().empty()) throw InvariantViolation("canonicalize: no proper basis realizes the successive minima");

  CanonicalForm out;
  out.transforms.reserve(search.leaves().size());
  for (const auto& x : search.leaves()) out.transforms.push_back(red.transform * x);
  out.gram = congruence(g, out.transforms.front());
  for (const auto& u : out.transforms) {
    if (congruence(g, u) != out.gram || determinant(u) != 1)
      throw InvariantViolation("canonicalize: transform does not reproduce the canonical Gram");
  }
  return out;
}

IntMatrix canonical_gram(const IntMatrix& g) { return canonicalize(g).gram; }

std::vector<IntMatrix> proper_automorphisms(const IntMatrix& canonical) {
  const CanonicalForm cf = canonicalize(canonical);
  if (cf.gram != canonical) throw DomainError("proper_automorphisms: input is not in canonical form");
  // Every transform maps the input basis onto a canonical basis; since the
  // input is already canonical, they are exactly the automorphisms.
  return cf.transforms;
}

}  // namespace orthogrid
