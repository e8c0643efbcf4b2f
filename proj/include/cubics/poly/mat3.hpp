#pragma once

#include <array>

#include "cubics/scalar/traits.hpp"

namespace cubics {

/// Plain 3x3 matrix over a scalar ring.
template <class S>
struct Mat3 {
  std::array<std::array<S, 3>, 3> m{};

  static Mat3 identity() {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = (i == j) ? scalar_traits<S>::one() : scalar_traits<S>::zero();
    return r;
  }

  std::array<S, 3>& operator[](int i) { return m[i]; }
  const std::array<S, 3>& operator[](int i) const { return m[i]; }

  friend bool operator==(const Mat3& x, const Mat3& y) { return x.m == y.m; }

  friend Mat3 operator*(const Mat3& x, const Mat3& y) {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) {
        S acc = scalar_traits<S>::zero();
        for (int k = 0; k < 3; ++k) acc = acc + x.m[i][k] * y.m[k][j];
        r.m[i][j] = acc;
      }
    return r;
  }

  std::array<S, 3> apply(const std::array<S, 3>& v) const {
    std::array<S, 3> r;
    for (int i = 0; i < 3; ++i) r[i] = m[i][0] * v[0] + m[i][1] * v[1] + m[i][2] * v[2];
    return r;
  }

  Mat3 transposed() const {
    Mat3 r;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) r.m[i][j] = m[j][i];
    return r;
  }
};

template <class S>
S det(const Mat3<S>& a) {
  return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) -
         a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
         a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

template <class S>
Mat3<S> adjugate(const Mat3<S>& a) {
  Mat3<S> r;
  r[0][0] = a[1][1] * a[2][2] - a[1][2] * a[2][1];
  r[0][1] = a[0][2] * a[2][1] - a[0][1] * a[2][2];
  r[0][2] = a[0][1] * a[1][2] - a[0][2] * a[1][1];
  r[1][0] = a[1][2] * a[2][0] - a[1][0] * a[2][2];
  r[1][1] = a[0][0] * a[2][2] - a[0][2] * a[2][0];
  r[1][2] = a[0][2] * a[1][0] - a[0][0] * a[1][2];
  r[2][0] = a[1][0] * a[2][1] - a[1][1] * a[2][0];
  r[2][1] = a[0][1] * a[2][0] - a[0][0] * a[2][1];
  r[2][2] = a[0][0] * a[1][1] - a[0][1] * a[1][0];
  return r;
}

template <class S>
Mat3<S> inverse(const Mat3<S>& a) {
  S d = det(a);
  if (scalar_traits<S>::is_zero(d)) throw SingularMatrix();
  Mat3<S> adj = adjugate(a);
  S di = scalar_traits<S>::inverse(d);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) adj[i][j] = adj[i][j] * di;
  return adj;
}

inline Mat3<CF> embed(const Mat3<Eis>& a) {
  Mat3<CF> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) r[i][j] = embed(a[i][j]);
  return r;
}

}  // namespace cubics
