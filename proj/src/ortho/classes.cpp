#include <algorithm>
#include <sstream>

#include "orthogrid/errors.hpp"
#include "orthogrid/ortho/ortho.hpp"

namespace orthogrid {
namespace {

Rational frac(const Rational& q) { return q - Rational(floor(q)); }

// Coordinates of the point t (old basis) in the basis old * u, reduced mod 1.
RatVector rebase_mod1(const IntMatrix& u, const RatVector& t) {
  RatVector x = solve_rational(to_rational(u), t);
  for (auto& q : x) q = frac(q);
  return x;
}

void check_denominators(const RatVector& t, const Integer& D) {
  for (const auto& q : t)
    if (D % q.get_den() != 0) throw InvariantViolation("grid: denominator of t does not divide D");
}

}  // namespace

ShapeAndGrid classify(const OrthoFrame& frame) {
  const GramForm form = gram_form(frame);
  const RatVector t0 = marked_point(frame, form);
  ShapeAndGrid out;
  out.shape.D = form.D;
  out.shape.dim = frame.rank();

  if (frame.rank() <= kMaxCanonicalRank) {
    const CanonicalForm cf = canonicalize(form.M);
    out.shape.gram = cf.gram;
    out.shape.canonical = true;
    for (const auto& u : cf.transforms) out.t_images.push_back(rebase_mod1(u, t0));
    out.grid.t = *std::min_element(out.t_images.begin(), out.t_images.end());
  } else {
    const LllResult red = lll_reduce_gram(form.M);
    out.shape.gram = red.gram;
    out.shape.canonical = false;
    out.grid.t = rebase_mod1(red.transform, t0);
    out.t_images.push_back(out.grid.t);
  }
  if (determinant(out.shape.gram) != form.D) throw InvariantViolation("shape: det of reduced Gram != D");
  check_denominators(out.grid.t, form.D);
  out.grid.shape = out.shape;
  return out;
}

ShapeClass shape(const OrthoFrame& frame) {
  const GramForm form = gram_form(frame);
  ShapeClass s;
  s.D = form.D;
  s.dim = frame.rank();
  if (frame.rank() <= kMaxCanonicalRank) {
    s.gram = canonical_gram(form.M);
  } else {
    s.gram = lll_reduce_gram(form.M).gram;
    s.canonical = false;
  }
  return s;
}

ShapeClass shape(const PrimitiveVector& v) { return shape(ortho_frame(v)); }
GridClass grid(const OrthoFrame& frame) { return classify(frame).grid; }
GridClass grid(const PrimitiveVector& v) { return grid(ortho_frame(v)); }

std::string serialize(const ShapeClass& s) {
  std::ostringstream os;
  os << s.dim << '|' << s.D.get_str() << '|';
  bool first = true;
  for (std::size_t i = 0; i < s.gram.rows(); ++i)
    for (std::size_t j = i; j < s.gram.cols(); ++j) {
      os << (first ? "" : ",") << s.gram(i, j).get_str();
      first = false;
    }
  os << '|' << (s.canonical ? "canonical" : "lll");
  return os.str();
}

std::string serialize(const GridClass& g) {
  std::ostringstream os;
  os << serialize(g.shape) << '|';
  for (std::size_t i = 0; i < g.t.size(); ++i) os << (i ? "," : "") << to_string(g.t[i]);
  return os.str();
}

}  // namespace orthogrid
