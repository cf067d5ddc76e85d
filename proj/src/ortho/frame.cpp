#include "frame_kernel.hpp"
#include "orthogrid/errors.hpp"
#include "orthogrid/ortho/ortho.hpp"

namespace orthogrid {
namespace {

IntVector widen(const std::vector<Checked64>& x) {
  IntVector out;
  out.reserve(x.size());
  for (Checked64 c : x) out.push_back(to_integer(c));
  return out;
}

// Random element of GL_n(Z): a shuffle of signed elementary column operations.
IntMatrix random_unimodular(std::size_t n, std::mt19937_64& rng) {
  IntMatrix a = IntMatrix::identity(n);
  if (n == 1) {
    if (rng() & 1U) a(0, 0) = -1;
    return a;
  }
  for (int step = 0; step < 6; ++step) {
    const std::size_t i = rng() % n;
    std::size_t j = rng() % (n - 1);
    if (j >= i) ++j;
    const long k = static_cast<long>(rng() % 7) - 3;
    for (std::size_t r = 0; r < n; ++r) a(r, i) += k * a(r, j);
    if (rng() % 4 == 0) a.swap_columns(i, j);
  }
  return a;
}

}  // namespace

OrthoFrame::OrthoFrame(PrimitiveVector v, std::vector<IntVector> basis, IntVector w)
    : v_(std::move(v)), basis_(std::move(basis)), w_(std::move(w)) {
  const std::size_t d = static_cast<std::size_t>(v_.d());
  if (basis_.size() + 1 != d || w_.size() != d) throw DomainError("OrthoFrame: wrong number of vectors");
  for (const auto& b : basis_)
    if (b.size() != d) throw DomainError("OrthoFrame: basis vector of wrong length");
  const IntVector vi = v_.to_integer();
  Integer det = determinant(detail::frame_matrix(basis_, w_));
  if (det == -1) {
    for (auto& x : basis_.front()) x = -x;
    det = 1;
  }
  if (det != 1) throw InvariantViolation("OrthoFrame: [basis, w] is not unimodular");
  if (dot(w_, vi) != 1) throw InvariantViolation("OrthoFrame: <w, v> != 1");
  for (const auto& b : basis_)
    if (dot(b, vi) != 0) throw InvariantViolation("OrthoFrame: basis vector not orthogonal to v");
  if (abs(determinant(detail::frame_matrix(basis_, vi))) != v_.D())
    throw InvariantViolation("OrthoFrame: |det(basis, v)| != D");
  g_ = detail::frame_matrix(basis_, w_);
}

OrthoFrame ortho_frame(const PrimitiveVector& v) {
  try {
    std::vector<Checked64> narrow(v.coords().begin(), v.coords().end());
    auto f = detail::raw_frame(narrow);
    std::vector<IntVector> basis;
    for (const auto& b : f.basis) basis.push_back(widen(b));
    return OrthoFrame(v, std::move(basis), widen(f.w));
  } catch (const Overflow&) {
    auto f = detail::raw_frame(v.to_integer());
    return OrthoFrame(v, std::move(f.basis), std::move(f.w));
  }
}

OrthoFrame randomized_frame(const PrimitiveVector& v, std::mt19937_64& rng) {
  const OrthoFrame base = ortho_frame(v);
  const std::size_t n = base.rank();
  const IntMatrix a = random_unimodular(n, rng);
  const IntMatrix b = IntMatrix::from_columns(base.basis()) * a;
  std::vector<IntVector> basis;
  for (std::size_t j = 0; j < n; ++j) basis.push_back(b.column(j));
  IntVector w = base.w();
  for (std::size_t j = 0; j < n; ++j) {
    const long lambda = static_cast<long>(rng() % 11) - 5;
    for (std::size_t i = 0; i < w.size(); ++i) w[i] += lambda * basis[j][i];
  }
  return OrthoFrame(v, std::move(basis), std::move(w));
}

GramForm gram_form(const OrthoFrame& frame) {
  GramForm form{kernels::gram_of(frame.basis()), frame.v().D()};
  if (determinant(form.M) != form.D) throw InvariantViolation("gram_form: det M != D");
  if (content(form.M) != 1) throw InvariantViolation("gram_form: M is not primitive");
  return form;
}

RatVector marked_point(const OrthoFrame& frame, const GramForm& form) {
  IntVector c;
  c.reserve(frame.rank());
  for (const auto& b : frame.basis()) c.push_back(dot(frame.w(), b));
  return solve_rational(form.M, c);
}

}  // namespace orthogrid
