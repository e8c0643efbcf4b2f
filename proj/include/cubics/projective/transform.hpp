#pragma once

#include "cubics/projective/point.hpp"

namespace cubics {

namespace detail {

/// Scale so the first nonzero entry in row-major order is 1 (exact scalars).
inline Mat3<Eis> canonical_matrix(Mat3<Eis> m) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (!m[i][j].is_zero()) {
        Eis inv = inverse(m[i][j]);
        for (int a = 0; a < 3; ++a)
          for (int b = 0; b < 3; ++b) m[a][b] = inv * m[a][b];
        return m;
      }
    }
  return m;
}

}  // namespace detail

/// Projective transformation: an invertible matrix modulo scalar. For exact
/// scalars the stored matrix is the canonical representative, so equality of
/// transforms is plain matrix equality (this is equality in PGL3, with the
/// center of SL3 quotiented away).
template <class S>
struct PTransform {
  Mat3<S> m;

  PTransform() : m(Mat3<S>::identity()) {}
  explicit PTransform(Mat3<S> mat) : m(normalize(std::move(mat))) {
    if (scalar_traits<S>::is_zero(det(m))) throw SingularMatrix();
  }

  static Mat3<S> normalize(Mat3<S> mat) {
    if constexpr (scalar_traits<S>::exact) {
      return detail::canonical_matrix(std::move(mat));
    } else {
      return mat;
    }
  }

  friend bool operator==(const PTransform& g, const PTransform& h) { return g.m == h.m; }
  friend bool operator!=(const PTransform& g, const PTransform& h) { return !(g == h); }

  friend PTransform operator*(const PTransform& g, const PTransform& h) {
    return PTransform(g.m * h.m);
  }

  PTransform inv() const { return PTransform(adjugate(m)); }
};

template <class S>
PPoint<S> apply(const PTransform<S>& g, const PPoint<S>& p) {
  return PPoint<S>(g.m.apply(p.c));
}

/// Total order on canonical matrices, for use as a map key.
inline bool lex_less(const Rat& x, const Rat& y) { return x < y; }

inline bool lex_less(const Eis& x, const Eis& y) {
  if (x.a != y.a) return x.a < y.a;
  return x.b < y.b;
}

inline bool lex_less(const Mat3<Eis>& x, const Mat3<Eis>& y) {
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      if (x[i][j] != y[i][j]) return lex_less(x[i][j], y[i][j]);
    }
  return false;
}

struct PTransformLess {
  bool operator()(const PTransform<Eis>& g, const PTransform<Eis>& h) const {
    return lex_less(g.m, h.m);
  }
};

inline PTransform<CF> embed(const PTransform<Eis>& g) { return PTransform<CF>(embed(g.m)); }

}  // namespace cubics
