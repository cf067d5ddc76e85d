#include "orthogrid/errors.hpp"
#include "orthogrid/exactla/exactla.hpp"
#include "orthogrid/exactla/kernels.hpp"

namespace orthogrid {

IntMatrix unimodular_completion(const IntVector& v) {
  if (content(v) != 1) throw DomainError("unimodular completion needs a primitive vector, got " + to_string(v));
  return kernels::unimodular_completion(v);
}

IntVector ext_complete(const IntVector& v) { return unimodular_completion(v).column(0); }

std::vector<IntVector> kernel_basis(const IntVector& v) {
  const Integer g = content(v);
  if (g == 0) throw DomainError("kernel_basis: zero vector");
  IntVector prim = v;
  for (auto& x : prim) x /= g;
  const IntMatrix u = kernels::unimodular_completion(prim);
  std::vector<IntVector> basis;
  basis.reserve(v.size() - 1);
  for (std::size_t j = 1; j < u.cols(); ++j) basis.push_back(u.column(j));
  return basis;
}

}  // namespace orthogrid
