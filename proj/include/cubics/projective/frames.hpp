#pragma once

#include "cubics/projective/transform.hpp"

namespace cubics {

/// Matrix sending the standard frame e0, e1, e2, e0+e1+e2 to the given
/// quadruple: columns are the frame points scaled so they sum to the fourth.
template <class S>
Mat3<S> frame_matrix(const std::array<PPoint<S>, 4>& f) {
  using T = scalar_traits<S>;
  Mat3<S> cols;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) cols[i][j] = f[static_cast<std::size_t>(j)][i];
  S d = det(cols);
  if (T::negligible(d, 1.0)) throw DegenerateFrame("first three points are collinear");
  // solve cols * lambda = f[3]
  Mat3<S> adj = adjugate(cols);
  S dinv = T::inverse(d);
  std::array<S, 3> lambda = adj.apply(f[3].c);
  for (auto& l : lambda) l = dinv * l;
  Mat3<S> r;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (T::negligible(lambda[static_cast<std::size_t>(j)], 1.0))
        throw DegenerateFrame("fourth point is collinear with two of the others");
      r[i][j] = lambda[static_cast<std::size_t>(j)] * cols[i][j];
    }
  return r;
}

/// The unique projective transformation carrying one frame to another
/// (four points, no three collinear, on each side).
template <class S>
PTransform<S> transform_from_frames(const std::array<PPoint<S>, 4>& src,
                                    const std::array<PPoint<S>, 4>& dst) {
  Mat3<S> a = frame_matrix(src);
  Mat3<S> b = frame_matrix(dst);
  return PTransform<S>(b * adjugate(a));
}

}  // namespace cubics
