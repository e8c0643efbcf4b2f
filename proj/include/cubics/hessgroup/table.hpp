#pragma once

#include <map>
#include <optional>

#include "cubics/finitegeo/groups.hpp"
#include "cubics/hesse/config.hpp"
#include "cubics/projective/transform.hpp"

namespace cubics {

/// The five generators, acting on points as the second column of the
/// generator table: a coordinate 3-cycle, a swap, two diagonal twists by
/// cube roots of unity, and the symmetric "Fourier" matrix.
inline std::array<PTransform<Eis>, 5> hes_generators() {
  Eis one(1), zero(0), w = Eis::omega(), w2 = w * w;
  auto mk = [](std::array<std::array<Eis, 3>, 3> rows) {
    Mat3<Eis> m;
    m.m = rows;
    return PTransform<Eis>(m);
  };
  return {mk({{{zero, one, zero}, {zero, zero, one}, {one, zero, zero}}}),
          mk({{{one, zero, zero}, {zero, zero, one}, {zero, one, zero}}}),
          mk({{{one, zero, zero}, {zero, w, zero}, {zero, zero, w2}}}),
          mk({{{one, zero, zero}, {zero, w, zero}, {zero, zero, w}}}),
          mk({{{one, one, one}, {one, w, w2}, {one, w2, w}}})};
}

/// One element of the Hessian group: a projective transformation together
/// with its permutation of the nine flexes and its image in SAff(F3^2).
struct HesElement {
  PTransform<Eis> transform;
  std::array<int, 9> flex_perm{};  // flex index -> flex index
  AffMap3 theta;
};

/// Permutation of flex indices induced by g, or nullopt when g does not
/// preserve the flex set.
inline std::optional<std::array<int, 9>> flex_permutation(const PTransform<Eis>& g) {
  const HesseConfig& cfg = incidence_report();
  std::array<int, 9> perm{};
  std::array<bool, 9> hit{};
  for (int p = 0; p < 9; ++p) {
    PPoint<Eis> img = apply(g, cfg.flexes[static_cast<std::size_t>(p)]);
    int found = -1;
    for (int q = 0; q < 9 && found < 0; ++q)
      if (img == cfg.flexes[static_cast<std::size_t>(q)]) found = q;
    if (found < 0 || hit[static_cast<std::size_t>(found)]) return std::nullopt;
    perm[static_cast<std::size_t>(p)] = found;
    hit[static_cast<std::size_t>(found)] = true;
  }
  return perm;
}

/// Affine map of F3^2 fitted from a flex permutation and verified on all
/// nine flexes.
inline AffMap3 theta_from_perm(const std::array<int, 9>& perm) {
  auto image = [&](int i, int j) { return point_at(perm[static_cast<std::size_t>(HesseConfig::index(i, j))]); };
  AffMap3 m;
  PointF3 t = image(0, 0);
  PointF3 c0 = image(1, 0), c1 = image(0, 1);
  m.t = t;
  m.a[0][0] = c0[0] - t[0];
  m.a[1][0] = c0[1] - t[1];
  m.a[0][1] = c1[0] - t[0];
  m.a[1][1] = c1[1] - t[1];
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      PointF3 expect = image(i, j);
      if (!(m.apply(PointF3{F3(i), F3(j)}) == expect)) throw NotAffine();
    }
  return m;
}

/// The full Hessian group, enumerated as canonical projective matrices by
/// closing the generator set under composition.
class HesGroupTable {
 public:
  static const HesGroupTable& get() {
    static const HesGroupTable table;
    return table;
  }

  const std::vector<HesElement>& elements() const { return elems_; }
  int order() const { return static_cast<int>(elems_.size()); }

  std::optional<int> find(const PTransform<Eis>& g) const {
    auto it = index_.find(g);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  int compose(int i, int j) const { return cayley_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }

  const HesElement& at(int i) const { return elems_[static_cast<std::size_t>(i)]; }

  int identity_index() const { return *find(PTransform<Eis>()); }

  /// Indices of the 24 elements fixing flex (i, j).
  std::vector<int> stabilizer(int i, int j) const {
    std::vector<int> out;
    int p = HesseConfig::index(i, j);
    for (int k = 0; k < order(); ++k)
      if (elems_[static_cast<std::size_t>(k)].flex_perm[static_cast<std::size_t>(p)] == p) out.push_back(k);
    return out;
  }

 private:
  HesGroupTable() {
    auto gens = hes_generators();
    std::vector<PTransform<Eis>> queue;
    auto add = [&](const PTransform<Eis>& g) {
      if (index_.count(g)) return;
      if (index_.size() >= 500) throw ClosureOverflow();
      auto perm = flex_permutation(g);
      if (!perm) throw Error("hessian group closure left the flex configuration");
      HesElement e;
      e.transform = g;
      e.flex_perm = *perm;
      e.theta = theta_from_perm(*perm);
      if (e.theta.det() != F3(1)) throw Error("hessian group element outside SAff");
      index_.emplace(g, static_cast<int>(elems_.size()));
      elems_.push_back(std::move(e));
      queue.push_back(g);
    };
    add(PTransform<Eis>());
    for (const auto& g : gens) add(g);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      PTransform<Eis> g = queue[head];
      for (const auto& h : gens) add(g * h);
    }
    // The flex action is faithful, so the Cayley table can be composed
    // through the permutations once each product of generators has been
    // matched against its matrix.
    std::map<std::array<int, 9>, int> perm_index;
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (!perm_index.emplace(elems_[i].flex_perm, static_cast<int>(i)).second)
        throw Error("hessian group flex action is not faithful");
    }
    auto compose_perm = [](const std::array<int, 9>& a, const std::array<int, 9>& b) {
      std::array<int, 9> r{};
      for (int p = 0; p < 9; ++p)
        r[static_cast<std::size_t>(p)] = a[static_cast<std::size_t>(b[static_cast<std::size_t>(p)])];
      return r;
    };
    for (std::size_t i = 0; i < gens.size(); ++i)
      for (std::size_t j = 0; j < gens.size(); ++j) {
        int gi = *find(gens[i]), gj = *find(gens[j]);
        auto matrix_way = find(gens[i] * gens[j]);
        auto perm_way = perm_index.find(compose_perm(elems_[static_cast<std::size_t>(gi)].flex_perm,
                                                     elems_[static_cast<std::size_t>(gj)].flex_perm));
        if (!matrix_way || perm_way == perm_index.end() || *matrix_way != perm_way->second)
          throw Error("hessian group permutation composition disagrees with matrices");
      }
    cayley_.assign(elems_.size(), std::vector<int>(elems_.size(), -1));
    for (std::size_t i = 0; i < elems_.size(); ++i)
      for (std::size_t j = 0; j < elems_.size(); ++j) {
        auto k = perm_index.find(compose_perm(elems_[i].flex_perm, elems_[j].flex_perm));
        if (k == perm_index.end()) throw Error("hessian group is not closed under composition");
        cayley_[i][j] = k->second;
      }
  }

  std::vector<HesElement> elems_;
  std::map<PTransform<Eis>, int, PTransformLess> index_;
  std::vector<std::vector<int>> cayley_;
};

/// Determinant-1 representative of the projective class, when a cube root
/// of the canonical matrix determinant exists in Q(w).
inline std::optional<Mat3<Eis>> det_one_representative(const PTransform<Eis>& g) {
  Eis d = det(g.m);
  auto c = eis_cbrt(d);
  if (!c) return std::nullopt;
  Eis s = inverse(*c);
  Mat3<Eis> m = g.m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = s * m[i][j];
  return m;
}

}  // namespace cubics
