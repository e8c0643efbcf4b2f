#pragma once

#include "cubics/classify/singular.hpp"
#include "cubics/poly/hessian.hpp"

namespace cubics {

/// Decision tree over the singular locus. Inputs outside Q(w)'s reach
/// propagate UnsupportedExtension from singular_points.
inline CubicType classify(const TernaryForm<Eis>& f) {
  if (f.is_zero() || f.degree() != 3) throw Error("classify: expected a nonzero cubic");
  SingularLocus loc = singular_points(f);

  if (loc.infinite) {
    const PLine<Eis>& w = *loc.witness_line;
    TernaryForm<Eis> l = linear_form(w[0], w[1], w[2]);
    return proportional(f, l * l * l) ? CubicType::TripleLine : CubicType::DoubleLinePlusLine;
  }
  switch (loc.points.size()) {
    case 0:
      return CubicType::Elliptic;
    case 3:
      return CubicType::Triangle;
    case 2:
      return CubicType::ConicPlusSecantLine;
    default:
      break;
  }

  // One singular point p: move it to (0:0:1), then f = x2 q2(x0,x1) + q3(x0,x1).
  const PPoint<Eis>& p = loc.points[0];
  int pos = 0;
  while (p[pos].is_zero()) ++pos;
  Mat3<Eis> v;
  for (auto& row : v.m) row.fill(Eis(0));
  int col = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pos) continue;
    v[i][col++] = Eis(1);
  }
  for (int i = 0; i < 3; ++i) v[i][2] = p[i];
  TernaryForm<Eis> g = f.substitute(v);
  if (!g.at(0, 0, 3).is_zero() || !g.at(1, 0, 2).is_zero() || !g.at(0, 1, 2).is_zero())
    throw Error("classify: singular point failed to normalize");

  Eis a = g.at(2, 0, 1), b = g.at(1, 1, 1), c = g.at(0, 2, 1);  // q2 coefficients
  if (a.is_zero() && b.is_zero() && c.is_zero()) return CubicType::ThreeConcurrentLines;

  Eis disc = b * b - Eis(4) * a * c;
  if (!disc.is_zero()) return CubicType::NodalCubic;

  // q2 = const * l^2; tangency <=> l divides the cubic part q3.
  TernaryForm<Eis> l = !a.is_zero() ? linear_form(Eis(2) * a, b, Eis(0))
                                    : linear_form(b, Eis(2) * c, Eis(0));
  TernaryForm<Eis> q3(3);
  for (int i1 = 0; i1 <= 3; ++i1) q3.at(3 - i1, i1, 0) = g.at(3 - i1, i1, 0);
  return try_divide(q3, l) ? CubicType::ConicPlusTangentLine : CubicType::CuspidalCubic;
}

inline bool is_elliptic(const TernaryForm<Eis>& f) { return classify(f) == CubicType::Elliptic; }

/// Whether the component {p = 0} of the curve {f = 0} lies inside the flex
/// locus, i.e. inside the Hessian curve. p must divide f (degree 1 or 2).
inline bool component_in_flex_locus(const TernaryForm<Eis>& p, const TernaryForm<Eis>& f) {
  if (!try_divide(f, p)) throw NonDivisor();
  TernaryForm<Eis> h = hessian(f);
  if (h.is_zero()) return true;
  return try_divide(h, p).has_value();
}

}  // namespace cubics
