#pragma once

#include "cubics/finitegeo/f3.hpp"
#include "cubics/flexsolve/flexes.hpp"
#include "cubics/hesse/config.hpp"
#include "cubics/poly/action.hpp"
#include "cubics/projective/frames.hpp"

namespace cubics {

struct NormalFormResult {
  PTransform<CF> transform;  // act(transform, f) lies in the pencil
  PencilFit fit;
};

namespace detail {

/// All labelings of the nine numeric flexes by F3^2 that carry the twelve
/// collinear triples to the twelve affine lines, with one point pinned to
/// the origin. Valid labelings differ by collineations; only half of those
/// are realizable by projective maps, so the caller tries each labeling
/// until the induced frame transform actually lands in the pencil.
inline std::vector<std::array<int, 9>> label_flexes(
    const std::vector<std::array<int, 3>>& triples) {
  std::array<std::array<int, 9>, 9> third{};
  for (auto& row : third) row.fill(-1);
  for (const auto& t : triples)
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        third[static_cast<std::size_t>(t[static_cast<std::size_t>(a)])]
             [static_cast<std::size_t>(t[static_cast<std::size_t>(b)])] =
            t[static_cast<std::size_t>(3 - a - b)];
      }
  std::vector<std::array<int, 9>> out;
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      if (a != b && third[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] < 0)
        return out;  // some pair on no line

  std::vector<std::array<int, 3>> through0;
  for (const auto& t : triples)
    if (t[0] == 0 || t[1] == 0 || t[2] == 0) through0.push_back(t);
  if (through0.size() != 4) return out;

  auto others = [](const std::array<int, 3>& t) {
    std::array<int, 2> r{};
    int k = 0;
    for (int x : t)
      if (x != 0) r[static_cast<std::size_t>(k++)] = x;
    return r;
  };

  for (std::size_t xl = 0; xl < 4; ++xl)
    for (int xo = 0; xo < 2; ++xo)
      for (std::size_t yl = 0; yl < 4; ++yl) {
        if (yl == xl) continue;
        for (int yo = 0; yo < 2; ++yo) {
          auto xs = others(through0[xl]);
          auto ys = others(through0[yl]);
          // label[point] = F3^2 index (3i + j)
          std::array<int, 9> label;
          label.fill(-1);
          auto put = [&](int pt, int i, int j) { label[static_cast<std::size_t>(pt)] = 3 * i + j; };
          put(0, 0, 0);
          put(xs[static_cast<std::size_t>(xo)], 1, 0);
          put(xs[static_cast<std::size_t>(1 - xo)], 2, 0);
          put(ys[static_cast<std::size_t>(yo)], 0, 1);
          put(ys[static_cast<std::size_t>(1 - yo)], 0, 2);
          int p10 = xs[static_cast<std::size_t>(xo)];
          int p01 = ys[static_cast<std::size_t>(yo)], p02 = ys[static_cast<std::size_t>(1 - yo)];
          // forced by the rule a + b + c = 0 on each line
          int p22 = third[static_cast<std::size_t>(p10)][static_cast<std::size_t>(p01)];
          int p11 = third[static_cast<std::size_t>(p22)][0];
          int p21 = third[static_cast<std::size_t>(p10)][static_cast<std::size_t>(p02)];
          int p12 = third[static_cast<std::size_t>(p21)][0];
          put(p22, 2, 2);
          put(p11, 1, 1);
          put(p21, 2, 1);
          put(p12, 1, 2);
          bool complete = true;
          std::array<bool, 9> used{};
          for (int v : label) {
            if (v < 0 || used[static_cast<std::size_t>(v)]) complete = false;
            if (v >= 0) used[static_cast<std::size_t>(v)] = true;
          }
          if (!complete) continue;
          bool ok = true;
          for (const auto& t : triples) {
            PointF3 a = point_at(label[static_cast<std::size_t>(t[0])]);
            PointF3 b = point_at(label[static_cast<std::size_t>(t[1])]);
            PointF3 c = point_at(label[static_cast<std::size_t>(t[2])]);
            ok = ok && collinear_f3(a, b, c);
          }
          if (ok) out.push_back(label);
        }
      }
  return out;
}

}  // namespace detail

/// Reduction of a smooth cubic to the Hesse pencil: compute the nine flexes
/// numerically, identify their collinearity pattern with AG(2,3), and send
/// the flex frame to the reference frame t_{0,0}, t_{1,0}, t_{1,1}, t_{2,1}.
inline NormalFormResult to_hesse_normal_form(const TernaryForm<CF>& f, std::uint64_t seed = 0,
                                             double tol = 1e-6) {
  FlexResult fr = flexes_numeric(f, seed, 1e-6);
  if (fr.dim != 0 || fr.points.size() != 9)
    throw NumericFailure("to_hesse_normal_form: did not find nine distinct flexes");

  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b)
      for (int c = b + 1; c < 9; ++c)
        if (collinear(fr.points[static_cast<std::size_t>(a)].point,
                      fr.points[static_cast<std::size_t>(b)].point,
                      fr.points[static_cast<std::size_t>(c)].point, 1e-6))
          triples.push_back({a, b, c});
  if (triples.size() != 12)
    throw NumericFailure("to_hesse_normal_form: flex collinearity graph is not the expected one");

  auto labels = detail::label_flexes(triples);
  if (labels.empty())
    throw NumericFailure("to_hesse_normal_form: flexes admit no affine-plane labeling");

  const HesseConfig& cfg = incidence_report();
  for (const auto& label : labels) {
    std::array<PPoint<CF>, 4> src, dst;
    int k = 0;
    for (auto [i, j] : std::array<std::pair<int, int>, 4>{{{0, 0}, {1, 0}, {1, 1}, {2, 1}}}) {
      int want = 3 * i + j;
      int found = -1;
      for (int p = 0; p < 9; ++p)
        if (label[static_cast<std::size_t>(p)] == want) found = p;
      src[static_cast<std::size_t>(k)] = fr.points[static_cast<std::size_t>(found)].point;
      dst[static_cast<std::size_t>(k)] = embed(cfg.flex(i, j));
      ++k;
    }
    NormalFormResult out;
    out.transform = transform_from_frames(src, dst);
    TernaryForm<CF> image = act(out.transform.m, f);
    auto fit = in_pencil(image, tol);
    if (!fit) continue;  // labeling differs by a non-realizable collineation
    out.fit = *fit;
    return out;
  }
  throw NumericFailure("to_hesse_normal_form: pencil residual above tolerance");
}

}  // namespace cubics
