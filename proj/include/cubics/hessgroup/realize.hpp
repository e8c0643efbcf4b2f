#pragma once

#include "cubics/hessgroup/table.hpp"
#include "cubics/poly/action.hpp"
#include "cubics/projective/frames.hpp"

namespace cubics {

/// The canonical flex frame used for all frame arguments:
/// t_{0,0}, t_{1,0}, t_{1,1}, t_{2,1}.
inline std::array<std::pair<int, int>, 4> flex_frame_indices() {
  return {{{0, 0}, {1, 0}, {1, 1}, {2, 1}}};
}

/// Attempts to realize a collineation of AG(2,3) as a projective
/// transformation of the plane: the unique map carrying the flex frame to
/// its image frame is computed, then checked on the remaining five flexes.
/// Exactly the determinant-1 collineations are realizable.
inline std::optional<PTransform<Eis>> realize_collineation(const AffMap3& sigma) {
  if (sigma.det() == F3(0)) throw Error("realize_collineation: singular linear part");
  const HesseConfig& cfg = incidence_report();
  std::array<PPoint<Eis>, 4> src, dst;
  int k = 0;
  for (auto [i, j] : flex_frame_indices()) {
    src[static_cast<std::size_t>(k)] = cfg.flex(i, j);
    PointF3 img = sigma.apply(PointF3{F3(i), F3(j)});
    dst[static_cast<std::size_t>(k)] = cfg.flexes[static_cast<std::size_t>(point_index(img))];
    ++k;
  }
  PTransform<Eis> g = transform_from_frames(src, dst);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PointF3 img = sigma.apply(PointF3{F3(i), F3(j)});
      if (apply(g, cfg.flex(i, j)) != cfg.flexes[static_cast<std::size_t>(point_index(img))])
        return std::nullopt;
    }
  return g;
}

/// The collineation induced by complex conjugation: it fixes the t_{i,0}
/// and swaps t_{i,1} with t_{i,2}, so its affine form is (i,j) -> (i,2j).
/// Its linear part has determinant 2, and it is not realizable.
inline AffMap3 conjugation_collineation() {
  AffMap3 m;
  m.a[0][0] = F3(1);
  m.a[1][1] = F3(2);
  return m;
}

struct H12Check {
  bool g_in_hes = false;
  bool image_in_pencil = false;
};

/// Evaluates both sides of the "normalizer = pencil-preserver" equivalence
/// for one transformation and one elliptic pencil member.
inline H12Check h12_check(const PTransform<Eis>& g, const PencilParam& lambda) {
  H12Check out;
  out.g_in_hes = HesGroupTable::get().find(g).has_value();
  TernaryForm<Eis> image = act(g.m, pencil_member(lambda));
  out.image_in_pencil = in_pencil(image).has_value();
  return out;
}

}  // namespace cubics
