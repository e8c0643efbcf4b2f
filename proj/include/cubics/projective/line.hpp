#pragma once

#include "cubics/projective/point.hpp"

namespace cubics {

/// Line of the projective plane: a nonzero linear form modulo scalar,
/// canonicalized like point coordinates.
template <class S>
struct PLine {
  std::array<S, 3> f{};

  PLine() = default;
  PLine(S f0, S f1, S f2) : f(detail::canonical_coords<S>({std::move(f0), std::move(f1), std::move(f2)})) {}
  explicit PLine(std::array<S, 3> form) : f(detail::canonical_coords<S>(std::move(form))) {}

  const S& operator[](int i) const { return f[static_cast<std::size_t>(i)]; }

  S eval(const PPoint<S>& p) const { return f[0] * p[0] + f[1] * p[1] + f[2] * p[2]; }

  friend bool operator==(const PLine& l, const PLine& m) { return l.f == m.f; }
  friend bool operator!=(const PLine& l, const PLine& m) { return !(l == m); }
};

inline bool contains(const PLine<Eis>& l, const PPoint<Eis>& p) { return l.eval(p).is_zero(); }

/// The unique line through two distinct points (cross product of coordinates).
template <class S>
PLine<S> line_through(const PPoint<S>& p, const PPoint<S>& q) {
  std::array<S, 3> x{p[1] * q[2] - p[2] * q[1],
                     p[2] * q[0] - p[0] * q[2],
                     p[0] * q[1] - p[1] * q[0]};
  bool all_zero = scalar_traits<S>::is_zero(x[0]) && scalar_traits<S>::is_zero(x[1]) &&
                  scalar_traits<S>::is_zero(x[2]);
  if (all_zero) throw EqualPoints();
  return PLine<S>(std::move(x));
}

}  // namespace cubics
