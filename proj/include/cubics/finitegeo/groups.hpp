#pragma once

#include <algorithm>

#include "cubics/finitegeo/f3.hpp"

namespace cubics {

/// All affine transformations of F3^2 (order 432).
inline std::vector<AffMap3> aff_enumerate() {
  std::vector<AffMap3> out;
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c)
        for (int d = 0; d < 3; ++d) {
          AffMap3 m;
          m.a = {{{F3(a), F3(b)}, {F3(c), F3(d)}}};
          if (m.det() == F3(0)) continue;
          for (int t0 = 0; t0 < 3; ++t0)
            for (int t1 = 0; t1 < 3; ++t1) {
              m.t = {F3(t0), F3(t1)};
              out.push_back(m);
            }
        }
  return out;
}

/// The subgroup with linear part of determinant 1 (order 216).
inline std::vector<AffMap3> saff_enumerate() {
  std::vector<AffMap3> out;
  for (const AffMap3& m : aff_enumerate())
    if (m.det() == F3(1)) out.push_back(m);
  return out;
}

/// Structural test for the binary tetrahedral group SL2(F3) sitting inside
/// SAff as a point stabilizer: order 24, a common fixed point, and after
/// moving that point to the origin the linear parts run over all 24
/// determinant-1 matrices.
inline bool sl2f3_recognize(const std::vector<AffMap3>& group) {
  for (const AffMap3& f : group)
    for (const AffMap3& g : group) {
      AffMap3 h = f * g;
      if (std::find(group.begin(), group.end(), h) == group.end())
        throw NotAGroup("composition leaves the given set");
    }
  if (group.size() != 24) return false;

  PointF3 fixed{};
  bool have_fixed = false;
  for (int idx = 0; idx < 9 && !have_fixed; ++idx) {
    PointF3 p = point_at(idx);
    bool all = true;
    for (const AffMap3& g : group) all = all && g.apply(p) == p;
    if (all) {
      fixed = p;
      have_fixed = true;
    }
  }
  if (!have_fixed) return false;

  std::vector<std::array<std::array<F3, 2>, 2>> linears;
  for (const AffMap3& g : group) {
    // conjugate by the translation moving the fixed point to the origin
    PointF3 img = g.apply(fixed);
    if (!(img == fixed)) return false;
    if (g.det() != F3(1)) return false;
    if (std::find(linears.begin(), linears.end(), g.a) != linears.end()) return false;
    linears.push_back(g.a);
  }
  return linears.size() == 24;
}

}  // namespace cubics
