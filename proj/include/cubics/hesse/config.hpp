#pragma once

#include <array>

#include "cubics/exact/linalg.hpp"
#include "cubics/hesse/pencil.hpp"
#include "cubics/projective/line.hpp"

namespace cubics {

/// The nine base points of the Hesse pencil (the common flexes of all its
/// smooth members), the twelve lines spanned by them, and their incidence.
/// Flexes are indexed by F3 x F3 as index = 3*i + j.
struct HesseConfig {
  std::array<PPoint<Eis>, 9> flexes;
  std::array<PLine<Eis>, 12> lines;
  std::array<std::array<bool, 9>, 12> incidence{};
  // third[a][b]: the third flex on the line through distinct flexes a, b
  std::array<std::array<int, 9>, 9> third{};

  static int index(int i, int j) { return 3 * i + j; }

  const PPoint<Eis>& flex(int i, int j) const { return flexes[static_cast<std::size_t>(index(i, j))]; }
};

namespace detail {

inline HesseConfig build_hesse_config() {
  HesseConfig cfg;
  Eis one(1), w = Eis::omega(), w2 = w * w;

  auto pt = [](Eis a, Eis b, Eis c) { return PPoint<Eis>(std::move(a), std::move(b), std::move(c)); };
  cfg.flexes = {pt(Eis(0), -one, one),  pt(Eis(0), -w, one),  pt(Eis(0), -w2, one),
                pt(one, Eis(0), -one),  pt(one, Eis(0), -w),  pt(one, Eis(0), -w2),
                pt(-one, one, Eis(0)),  pt(-w, one, Eis(0)),  pt(-w2, one, Eis(0))};

  // The twelve lines are the factors of the four singular pencil members:
  // x0 x1 x2 and the three triangles over lambda = -3, -3w, -3w^2.
  auto ln = [](Eis a, Eis b, Eis c) { return PLine<Eis>(std::move(a), std::move(b), std::move(c)); };
  cfg.lines = {ln(one, Eis(0), Eis(0)), ln(Eis(0), one, Eis(0)), ln(Eis(0), Eis(0), one),
               ln(one, one, one),       ln(one, w, w2),          ln(one, w2, w),
               ln(one, one, w),         ln(one, w, one),         ln(one, w2, w2),
               ln(one, one, w2),        ln(one, w, w),           ln(one, w2, one)};

  for (int l = 0; l < 12; ++l)
    for (int p = 0; p < 9; ++p)
      cfg.incidence[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)] =
          contains(cfg.lines[static_cast<std::size_t>(l)], cfg.flexes[static_cast<std::size_t>(p)]);

  for (auto& row : cfg.third) row.fill(-1);
  for (int l = 0; l < 12; ++l) {
    std::array<int, 3> on{};
    int n = 0;
    for (int p = 0; p < 9; ++p)
      if (cfg.incidence[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)]) {
        if (n == 3) throw Error("hesse config: line with more than three flexes");
        on[static_cast<std::size_t>(n++)] = p;
      }
    if (n != 3) throw Error("hesse config: line without exactly three flexes");
    for (int a = 0; a < 3; ++a)
      for (int b = 0; b < 3; ++b) {
        if (a == b) continue;
        int c = 3 - a - b;
        cfg.third[static_cast<std::size_t>(on[static_cast<std::size_t>(a)])]
                 [static_cast<std::size_t>(on[static_cast<std::size_t>(b)])] = on[static_cast<std::size_t>(c)];
      }
  }

  // every flex on exactly four lines, every flex pair on a common line
  for (int p = 0; p < 9; ++p) {
    int cnt = 0;
    for (int l = 0; l < 12; ++l)
      if (cfg.incidence[static_cast<std::size_t>(l)][static_cast<std::size_t>(p)]) ++cnt;
    if (cnt != 4) throw Error("hesse config: flex not on exactly four lines");
  }
  for (int a = 0; a < 9; ++a)
    for (int b = 0; b < 9; ++b)
      if (a != b && cfg.third[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] < 0)
        throw Error("hesse config: flex pair not covered by a line");

  // the four singular members factor exactly into their line triples
  struct Member {
    PencilParam param;
    std::array<int, 3> lines;
  };
  Eis m3(-3);
  std::array<Member, 4> members{{{PencilParam::inf(), {0, 1, 2}},
                                 {PencilParam::finite(m3), {3, 4, 5}},
                                 {PencilParam::finite(m3 * w), {6, 7, 8}},
                                 {PencilParam::finite(m3 * w2), {9, 10, 11}}}};
  for (const auto& m : members) {
    TernaryForm<Eis> prod = TernaryForm<Eis>::monomial(0, 0, 0, 0, Eis(1));
    for (int l : m.lines) {
      const auto& f = cfg.lines[static_cast<std::size_t>(l)];
      prod = prod * linear_form(f[0], f[1], f[2]);
    }
    TernaryForm<Eis> member = pencil_member(m.param);
    // equality up to the scalar fixed by line canonicalization
    Eis c;
    bool found = false;
    for (int i = 0; i < member.size() && !found; ++i)
      if (!prod[i].is_zero()) {
        c = member[i] / prod[i];
        found = true;
      }
    if (!found || !(c * prod == member))
      throw Error("hesse config: singular member does not factor into its lines");
  }
  return cfg;
}

}  // namespace detail

/// Builds (once) and verifies the configuration; throws on any internal
/// inconsistency, which would indicate a data-entry error.
inline const HesseConfig& incidence_report() {
  static const HesseConfig cfg = detail::build_hesse_config();
  return cfg;
}

/// Basis of the space of cubics vanishing on all nine flexes: the exact
/// kernel of the 9x10 evaluation matrix. The span equals the Hesse pencil.
inline std::vector<TernaryForm<Eis>> cubics_through_flexes() {
  const HesseConfig& cfg = incidence_report();
  Matrix<Eis> m(9, std::vector<Eis>(10));
  for (int p = 0; p < 9; ++p) {
    for (int col = 0; col < 10; ++col) {
      auto e = TernaryForm<Eis>::exponents(3, col);
      TernaryForm<Eis> mono = TernaryForm<Eis>::monomial(3, e[0], e[1], e[2], Eis(1));
      m[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)] =
          mono.eval(cfg.flexes[static_cast<std::size_t>(p)].c);
    }
  }
  std::vector<TernaryForm<Eis>> basis;
  for (const auto& v : kernel(std::move(m))) {
    TernaryForm<Eis> f(3);
    for (int i = 0; i < 10; ++i) f[i] = v[static_cast<std::size_t>(i)];
    basis.push_back(std::move(f));
  }
  return basis;
}

/// Rank of the flex evaluation matrix (8: the pencil is the full kernel).
inline int flex_evaluation_rank() {
  const HesseConfig& cfg = incidence_report();
  Matrix<Eis> m(9, std::vector<Eis>(10));
  for (int p = 0; p < 9; ++p)
    for (int col = 0; col < 10; ++col) {
      auto e = TernaryForm<Eis>::exponents(3, col);
      m[static_cast<std::size_t>(p)][static_cast<std::size_t>(col)] =
          TernaryForm<Eis>::monomial(3, e[0], e[1], e[2], Eis(1)).eval(cfg.flexes[static_cast<std::size_t>(p)].c);
    }
  return rank(std::move(m));
}

/// Group law on the nine flexes with unit o, using only collinearity:
/// for a != b take the third point c on their line; the sum is the third
/// point on the line through c and o (or o itself when c == o).
inline int flex_add(int a, int b, int o) {
  const HesseConfig& cfg = incidence_report();
  if (a == b) {
    if (a == o) return o;
    return cfg.third[static_cast<std::size_t>(a)][static_cast<std::size_t>(o)];
  }
  int c = cfg.third[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
  if (c == o) return o;
  return cfg.third[static_cast<std::size_t>(c)][static_cast<std::size_t>(o)];
}

}  // namespace cubics
