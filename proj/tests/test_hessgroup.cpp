#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <set>

#include "cubics/flexsolve/flexes.hpp"
#include "cubics/hessgroup/realize.hpp"
#include "cubics/numeric/random.hpp"

using namespace cubics;

TEST_CASE("generators act on flexes as tabulated") {
  const HesseConfig& cfg = incidence_report();
  auto gens = hes_generators();
  // g1: t_{i,j} -> t_{i+2,j}
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(apply(gens[0], cfg.flex(i, j)) == cfg.flex((i + 2) % 3, j));
  // g2: t_{i,j} -> t_{2i,2j}
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(apply(gens[1], cfg.flex(i, j)) == cfg.flex((2 * i) % 3, (2 * j) % 3));
  // g3: t_{i,j} -> t_{i,j+2}
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(apply(gens[2], cfg.flex(i, j)) == cfg.flex(i, (j + 2) % 3));
  // g4: t_{i,j} -> t_{i,i+j}
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(apply(gens[3], cfg.flex(i, j)) == cfg.flex(i, (i + j) % 3));
  // g5: t_{i,j} -> t_{j,2i}
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      CHECK(apply(gens[4], cfg.flex(i, j)) == cfg.flex(j, (2 * i) % 3));
}

TEST_CASE("group order and faithful flex action") {
  const HesGroupTable& t = HesGroupTable::get();
  CHECK(t.order() == 216);
  // only the identity fixes all nine flexes
  int fixers = 0;
  for (const auto& e : t.elements()) {
    bool all = true;
    for (int p = 0; p < 9; ++p) all = all && e.flex_perm[static_cast<std::size_t>(p)] == p;
    fixers += all;
  }
  CHECK(fixers == 1);
  // transitivity on the flexes
  std::set<int> orbit;
  for (const auto& e : t.elements()) orbit.insert(e.flex_perm[0]);
  CHECK(orbit.size() == 9);
  // every element preserves the twelve-line incidence
  const HesseConfig& cfg = incidence_report();
  for (const auto& e : t.elements())
    for (int a = 0; a < 9; ++a)
      for (int b = a + 1; b < 9; ++b) {
        int c = cfg.third[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
        int ia = e.flex_perm[static_cast<std::size_t>(a)], ib = e.flex_perm[static_cast<std::size_t>(b)],
            ic = e.flex_perm[static_cast<std::size_t>(c)];
        CHECK(cfg.third[static_cast<std::size_t>(ia)][static_cast<std::size_t>(ib)] == ic);
      }
}

TEST_CASE("theta images of the generators") {
  const HesGroupTable& t = HesGroupTable::get();
  auto gens = hes_generators();
  auto theta_of = [&](const PTransform<Eis>& g) { return t.at(*t.find(g)).theta; };
  AffMap3 th1 = theta_of(gens[0]);
  CHECK(th1.a == AffMap3::identity().a);
  CHECK(th1.t == std::array<F3, 2>{F3(2), F3(0)});
  AffMap3 th3 = theta_of(gens[2]);
  CHECK(th3.a == AffMap3::identity().a);
  CHECK(th3.t == std::array<F3, 2>{F3(0), F3(2)});
  AffMap3 th2 = theta_of(gens[1]);
  CHECK(th2.t == std::array<F3, 2>{F3(0), F3(0)});
  CHECK(th2.a == std::array<std::array<F3, 2>, 2>{{{F3(2), F3(0)}, {F3(0), F3(2)}}});
  AffMap3 th4 = theta_of(gens[3]);
  CHECK(th4.a == std::array<std::array<F3, 2>, 2>{{{F3(1), F3(0)}, {F3(1), F3(1)}}});
  AffMap3 th5 = theta_of(gens[4]);
  CHECK(th5.a == std::array<std::array<F3, 2>, 2>{{{F3(0), F3(1)}, {F3(2), F3(0)}}});
}

TEST_CASE("theta is an isomorphism onto SAff(F3^2)") {
  const HesGroupTable& t = HesGroupTable::get();
  std::set<std::string> images;
  for (const auto& e : t.elements()) {
    CHECK(e.theta.det() == F3(1));
    images.insert(to_string(e.theta));
  }
  CHECK(images.size() == 216);
  std::mt19937_64 rng(89);
  std::uniform_int_distribution<int> pick(0, t.order() - 1);
  for (int k = 0; k < 2000; ++k) {
    int i = pick(rng), j = pick(rng);
    AffMap3 lhs = t.at(t.compose(i, j)).theta;
    AffMap3 rhs = t.at(i).theta * t.at(j).theta;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("flex stabilizers are binary tetrahedral") {
  const HesGroupTable& t = HesGroupTable::get();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      auto stab = t.stabilizer(i, j);
      CHECK(stab.size() == 24);
      std::vector<AffMap3> affs;
      for (int idx : stab) affs.push_back(t.at(idx).theta);
      CHECK(sl2f3_recognize(affs));
    }
}

TEST_CASE("stabilizers are conjugate") {
  const HesGroupTable& t = HesGroupTable::get();
  auto s00 = t.stabilizer(0, 0);
  // find g with g: t00 -> t12; then g s00 g^-1 = s12
  int p00 = HesseConfig::index(0, 0), p12 = HesseConfig::index(1, 2);
  int mover = -1, mover_inv = -1;
  for (int k = 0; k < t.order(); ++k)
    if (t.at(k).flex_perm[static_cast<std::size_t>(p00)] == p12) mover = k;
  REQUIRE(mover >= 0);
  for (int k = 0; k < t.order(); ++k)
    if (t.compose(mover, k) == t.identity_index()) mover_inv = k;
  REQUIRE(mover_inv >= 0);
  auto s12 = t.stabilizer(1, 2);
  for (int s : s00) {
    int conj = t.compose(t.compose(mover, s), mover_inv);
    CHECK(std::find(s12.begin(), s12.end(), conj) != s12.end());
  }
}

TEST_CASE("realizability of collineations") {
  // identity realizes as the identity
  auto id = realize_collineation(AffMap3::identity());
  REQUIRE(id);
  CHECK(*id == PTransform<Eis>());
  // the conjugation collineation (det 2) does not realize
  CHECK(!realize_collineation(conjugation_collineation()));
  // every SAff element realizes and matches the enumerated element
  const HesGroupTable& t = HesGroupTable::get();
  for (const auto& sigma : saff_enumerate()) {
    auto g = realize_collineation(sigma);
    REQUIRE(g);
    auto idx = t.find(*g);
    REQUIRE(idx);
    CHECK(t.at(*idx).theta == sigma);
  }
  // determinant-2 collineations all fail
  int failures = 0;
  for (const auto& sigma : aff_enumerate())
    if (sigma.det() == F3(2) && !realize_collineation(sigma)) ++failures;
  CHECK(failures == 216);
}

TEST_CASE("pencil preservation matches group membership") {
  const HesGroupTable& t = HesGroupTable::get();
  PencilParam lambda = PencilParam::finite(Eis(1));
  for (int k = 0; k < t.order(); k += 5) {
    H12Check c = h12_check(t.at(k).transform, lambda);
    CHECK(c.g_in_hes);
    CHECK(c.image_in_pencil);
  }
  H12Check idc = h12_check(PTransform<Eis>(), lambda);
  CHECK((idc.g_in_hes && idc.image_in_pencil));
  std::mt19937_64 rng(97);
  int tested = 0;
  while (tested < 15) {
    PTransform<Eis> g(random_unimodular_int(rng));
    if (HesGroupTable::get().find(g)) continue;
    H12Check c = h12_check(g, lambda);
    CHECK(!c.g_in_hes);
    CHECK(!c.image_in_pencil);
    ++tested;
  }
}

TEST_CASE("numeric flexes transform along group elements") {
  const HesGroupTable& t = HesGroupTable::get();
  const HesseConfig& cfg = incidence_report();
  TernaryForm<Eis> member = pencil_member(PencilParam::finite(Eis(1)));
  std::mt19937_64 rng(211);
  std::uniform_int_distribution<int> pick(0, t.order() - 1);
  for (int k = 0; k < 10; ++k) {
    const HesElement& e = t.at(pick(rng));
    TernaryForm<CF> moved = act(embed(e.transform.m), embed(member));
    FlexResult fr = flexes_numeric(moved, 17);
    REQUIRE(fr.points.size() == 9);
    // the flex set of the moved member is the image of the configuration,
    // which is the configuration itself
    for (int p = 0; p < 9; ++p) {
      PPoint<CF> expect = embed(cfg.flexes[static_cast<std::size_t>(p)]);
      bool found = false;
      for (const auto& fp : fr.points) found = found || point_distance(fp.point, expect) < 1e-6;
      CHECK(found);
    }
  }
}

TEST_CASE("determinant-1 representatives") {
  // The canonical determinant taken modulo cubes of Q(w)* is a character of
  // the group with values {1, [w], [w^2]} (the diagonal generator with
  // determinant w^2 is not a cube), so exactly a third of the elements admit
  // a determinant-1 representative over Q(w); the rest stay projective.
  const HesGroupTable& t = HesGroupTable::get();
  int found = 0;
  for (const auto& e : t.elements()) {
    auto m = det_one_representative(e.transform);
    if (m) {
      CHECK(det(*m) == Eis(1));
      ++found;
    }
  }
  CHECK(found == t.order() / 3);
}
