#pragma once

#include <array>
#include <cmath>

#include "cubics/poly/mat3.hpp"

namespace cubics {

namespace detail {

template <class S>
std::array<S, 3> canonical_coords(std::array<S, 3> c);

/// Exact scalars: scale the first nonzero coordinate to 1.
template <>
inline std::array<Eis, 3> canonical_coords<Eis>(std::array<Eis, 3> c) {
  for (const Eis& x : c) {
    if (!x.is_zero()) {
      Eis inv = inverse(x);
      for (Eis& y : c) y = inv * y;
      return c;
    }
  }
  return c;
}

/// Complex floats: unit norm with the first significant coordinate real
/// and positive. "Significant" is relative, so coordinates that are pure
/// numerical noise do not get to fix the phase.
template <>
inline std::array<CF, 3> canonical_coords<CF>(std::array<CF, 3> c) {
  double n = std::sqrt(std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]));
  if (n == 0.0) return c;
  for (int i = 0; i < 3; ++i) {
    double m = std::abs(c[static_cast<std::size_t>(i)]);
    if (m > 1e-5 * n) {
      CF phase = c[static_cast<std::size_t>(i)] / m;
      CF scale = std::conj(phase) / n;
      for (CF& y : c) y = scale * y;
      return c;
    }
  }
  return c;
}

}  // namespace detail

/// Point of the projective plane, stored by its canonical representative.
template <class S>
struct PPoint {
  std::array<S, 3> c{};

  PPoint() = default;
  PPoint(S c0, S c1, S c2) : c(detail::canonical_coords<S>({std::move(c0), std::move(c1), std::move(c2)})) {}
  explicit PPoint(std::array<S, 3> coords) : c(detail::canonical_coords<S>(std::move(coords))) {}

  const S& operator[](int i) const { return c[static_cast<std::size_t>(i)]; }

  friend bool operator==(const PPoint& p, const PPoint& q) { return p.c == q.c; }
  friend bool operator!=(const PPoint& p, const PPoint& q) { return !(p == q); }
};

inline PPoint<CF> embed(const PPoint<Eis>& p) {
  return PPoint<CF>(embed(p[0]), embed(p[1]), embed(p[2]));
}

/// Phase-free distance between complex projective points: chordal distance
/// between unit representatives under the optimal phase alignment.
inline double point_distance(const PPoint<CF>& p, const PPoint<CF>& q) {
  CF inner = p[0] * std::conj(q[0]) + p[1] * std::conj(q[1]) + p[2] * std::conj(q[2]);
  double np = std::sqrt(std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2]));
  double nq = std::sqrt(std::norm(q[0]) + std::norm(q[1]) + std::norm(q[2]));
  if (np == 0.0 || nq == 0.0) return 2.0;
  double cosang = std::abs(inner) / (np * nq);
  return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::min(1.0, cosang)));
}

inline bool approx_equal(const PPoint<CF>& p, const PPoint<CF>& q, double tol) {
  return point_distance(p, q) <= tol;
}

/// Collinearity of three points: the 3x3 coordinate determinant vanishes.
inline bool collinear(const PPoint<Eis>& p, const PPoint<Eis>& q, const PPoint<Eis>& r) {
  Mat3<Eis> m;
  for (int j = 0; j < 3; ++j) {
    m[0][j] = p[j];
    m[1][j] = q[j];
    m[2][j] = r[j];
  }
  return det(m).is_zero();
}

inline bool collinear(const PPoint<CF>& p, const PPoint<CF>& q, const PPoint<CF>& r,
                      double tol = 1e-6) {
  Mat3<CF> m;
  for (int j = 0; j < 3; ++j) {
    m[0][j] = p[j];
    m[1][j] = q[j];
    m[2][j] = r[j];
  }
  // canonical representatives have unit norm, so the scale is 1
  return std::abs(det(m)) < tol;
}

}  // namespace cubics
