#pragma once

#include "cubics/classify/classify.hpp"

namespace cubics {

/// Dimension of the flex locus Fl(C(f)) = C(f) n {H_f = 0}: one-dimensional
/// exactly for reducible cubics, zero-dimensional otherwise.
inline int fl_dimension(const TernaryForm<Eis>& f) {
  return is_reducible_type(classify(f)) ? 1 : 0;
}

/// Fiber structure of the flex variety over the cubic's coefficient point:
/// the fiber is a curve precisely over the locus of reducible cubics.
struct FiberProfile {
  bool in_j;
  int fiber_dim;
};

inline FiberProfile fiber_profile(const TernaryForm<Eis>& f) {
  int d = fl_dimension(f);
  return FiberProfile{d == 1, d};
}

}  // namespace cubics
