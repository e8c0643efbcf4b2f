#pragma once

#include "cubics/poly/ternary_form.hpp"

namespace cubics {

/// Hessian covariant: determinant of the matrix of second partials. For a
/// cubic the entries are linear forms and the determinant is again a cubic.
/// No normalization is applied, so integer constants come out as-is
/// (e.g. hessian of x0^3+x1^3+x2^3 is 216*x0*x1*x2).
template <class S>
TernaryForm<S> hessian(const TernaryForm<S>& f) {
  std::array<std::array<TernaryForm<S>, 3>, 3> h;
  for (int i = 0; i < 3; ++i) {
    TernaryForm<S> di = f.derivative(i);
    for (int j = 0; j < 3; ++j) h[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = di.derivative(j);
  }
  auto minor2 = [&](int r0, int r1, int c0, int c1) {
    return h[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c0)] * h[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c1)] -
           h[static_cast<std::size_t>(r0)][static_cast<std::size_t>(c1)] * h[static_cast<std::size_t>(r1)][static_cast<std::size_t>(c0)];
  };
  return h[0][0] * minor2(1, 2, 1, 2) - h[0][1] * minor2(1, 2, 0, 2) + h[0][2] * minor2(1, 2, 0, 1);
}

}  // namespace cubics
