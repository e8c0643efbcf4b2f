#pragma once

#include "cubics/exact/linalg.hpp"
#include "cubics/poly/ternary_form.hpp"

namespace cubics {

/// Infinitesimal action of a 3x3 matrix on a form: X.f = -sum_i (Xx)_i df/dx_i.
template <class S>
TernaryForm<S> lie_derivative(const Mat3<S>& x, const TernaryForm<S>& f) {
  TernaryForm<S> r(f.degree());
  for (int i = 0; i < 3; ++i) {
    TernaryForm<S> row(1);
    for (int j = 0; j < 3; ++j) row[j] = x[i][j];
    r = r - row * f.derivative(i);
  }
  return r;
}

/// Dimension of the SL3-orbit of f, computed as the rank of the tangent
/// space at f: the span of X.f over a basis of traceless matrices.
inline int sl3_orbit_dim(const TernaryForm<Eis>& f) {
  std::vector<Mat3<Eis>> basis;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (i == j) continue;
      Mat3<Eis> e;
      for (auto& row : e.m) row.fill(Eis(0));
      e[i][j] = Eis(1);
      basis.push_back(e);
    }
  for (int k = 0; k < 2; ++k) {
    Mat3<Eis> h;
    for (auto& row : h.m) row.fill(Eis(0));
    h[k][k] = Eis(1);
    h[k + 1][k + 1] = Eis(-1);
    basis.push_back(h);
  }
  Matrix<Eis> tangent;
  for (const auto& x : basis) {
    TernaryForm<Eis> xf = lie_derivative(x, f);
    std::vector<Eis> row;
    for (int i = 0; i < xf.size(); ++i) row.push_back(xf[i]);
    tangent.push_back(std::move(row));
  }
  return rank(std::move(tangent));
}

}  // namespace cubics
