#pragma once

// Frame construction and identity checks, templated on the ring so the sweep
// can run on Checked64 and retry in Integer after an overflow trap.

#include <optional>
#include <string>
#include <vector>

#include "orthogrid/exactla/kernels.hpp"

namespace orthogrid::detail {

template <typename Z>
struct RawFrame {
  std::vector<std::vector<Z>> basis;
  std::vector<Z> w;
  Z det_g;  // after the orientation fix
};

template <typename Z>
Matrix<Z> frame_matrix(const std::vector<std::vector<Z>>& basis, const std::vector<Z>& last) {
  std::vector<std::vector<Z>> cols = basis;
  cols.push_back(last);
  return Matrix<Z>::from_columns(cols);
}

template <typename Z>
RawFrame<Z> raw_frame(const std::vector<Z>& v) {
  const Matrix<Z> u = kernels::unimodular_completion(v);
  RawFrame<Z> f;
  f.w = u.column(0);
  for (std::size_t j = 1; j < u.cols(); ++j) f.basis.push_back(u.column(j));
  f.det_g = kernels::bareiss_determinant(frame_matrix(f.basis, f.w));
  if (f.det_g == Z(-1)) {
    for (auto& x : f.basis.front()) x = -x;
    f.det_g = Z(1);
  }
  return f;
}

// First failing identity, or nullopt.
template <typename Z>
std::optional<std::string> frame_identity_failure(const std::vector<Z>& v, const Z& D) {
  Z g(0);
  for (const Z& x : v) g = gcd(g, x);
  if (g != Z(1)) return "gcd(v) != 1";
  if (kernels::dot(v, v) != D) return "|v|^2 != D";
  const RawFrame<Z> f = raw_frame(v);
  if (f.det_g != Z(1)) return "det g_v != +1";
  if (kernels::dot(f.w, v) != Z(1)) return "<w, v> != 1";
  for (const auto& b : f.basis)
    if (kernels::dot(b, v) != Z(0)) return "basis vector not orthogonal to v";
  const Matrix<Z> m = kernels::gram_of(f.basis);
  if (kernels::bareiss_determinant(m) != D) return "det M != D";
  if (kernels::content(m) != Z(1)) return "M not primitive";
  if (abs(kernels::bareiss_determinant(frame_matrix(f.basis, v))) != D) return "|det(v_1..v_{d-1}, v)| != D";
  return std::nullopt;
}

}  // namespace orthogrid::detail
