#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubics/exact/algebraic.hpp"
#include "cubics/exact/binary_form.hpp"
#include "cubics/exact/linalg.hpp"
#include "cubics/projective/transform.hpp"

using namespace cubics;

namespace {

UPoly<Eis> upoly(std::initializer_list<int> coeffs) {
  std::vector<Eis> c;
  for (int x : coeffs) c.emplace_back(x);
  return UPoly<Eis>(std::move(c));
}

}  // namespace

TEST_CASE("univariate arithmetic and gcd") {
  // (t - 1)(t - 2) and (t - 1)(t + 3)
  UPoly<Eis> a = upoly({2, -3, 1});
  UPoly<Eis> b = upoly({-3, 2, 1});
  CHECK(gcd(a, b) == upoly({-1, 1}));
  auto [q, r] = divmod(a, upoly({-1, 1}));
  CHECK(r.is_zero());
  CHECK(q == upoly({-2, 1}));
  CHECK(squarefree_part(upoly({-1, 1}) * upoly({-1, 1}) * upoly({5, 1})) ==
        (upoly({-1, 1}) * upoly({5, 1})).monic());
}

TEST_CASE("quadratic roots over Q(w)") {
  // t^2 + t + 1 has roots w, w^2
  QuadRoots r = eis_roots_deg_le2(upoly({1, 1, 1}));
  REQUIRE(r.roots.size() == 2);
  CHECK(!r.irrational);
  CHECK((r.roots[0] == Eis::omega() || r.roots[1] == Eis::omega()));
  // t^2 - 2 is irrational over Q(w)
  CHECK(eis_roots_deg_le2(upoly({-2, 0, 1})).irrational);
  // t^2 + 3 = (t - (1+2w))(t + (1+2w))
  QuadRoots s = eis_roots_deg_le2(upoly({3, 0, 1}));
  CHECK(s.roots.size() == 2);
}

TEST_CASE("verified rational root extraction") {
  std::mt19937_64 rng(107);
  std::uniform_int_distribution<int> v(-6, 6);
  for (int k = 0; k < 25; ++k) {
    // product of three rational-root factors and one irrational quadratic
    Eis r1(v(rng)), r2(Rat(v(rng), 2)), r3(v(rng), 1);
    UPoly<Eis> p = UPoly<Eis>({-r1, Eis(1)}) * UPoly<Eis>({-r2, Eis(1)}) *
                   UPoly<Eis>({-r3, Eis(1)}) * upoly({-2, 0, 1});
    p = squarefree_part(p);
    RationalRootSplit split = extract_eis_roots(p);
    for (const Eis& r : split.roots) CHECK(scalar_traits<Eis>::is_zero(p.eval(r)));
    CHECK(split.remainder.degree() == 2);
    CHECK(split.irrational);
    // every planted distinct root is found
    std::vector<Eis> planted{r1, r2, r3};
    std::sort(planted.begin(), planted.end(), [](const Eis& a, const Eis& b) { return lex_less(a, b); });
    planted.erase(std::unique(planted.begin(), planted.end()), planted.end());
    CHECK(split.roots.size() == planted.size());
  }
}

TEST_CASE("binary resultants detect common zeros") {
  // q1 = x2^2 - x0 x1, q2 = x2^2 - x0^2: Res = (x0 x1 - x0^2)^2
  TernaryForm<Eis> q1(2), q2(2);
  q1.at(0, 0, 2) = Eis(1);
  q1.at(1, 1, 0) = Eis(-1);
  q2.at(0, 0, 2) = Eis(1);
  q2.at(2, 0, 0) = Eis(-1);
  BinaryForm r = resultant_x2(q1, q2);
  CHECK(!r.is_zero());
  CHECK(r.eval(Eis(1), Eis(1)).is_zero());   // common zeros over (1 : 1)
  CHECK(r.eval(Eis(0), Eis(1)).is_zero());   // and over (0 : 1)
  CHECK(!r.eval(Eis(1), Eis(2)).is_zero());
  // quadratics sharing a factor have identically zero resultant
  CHECK(resultant_x2(q1, Eis(3) * q1).is_zero());
  // both forms degenerate in x2 (common zero at (0:0:1)): formally zero too
  TernaryForm<Eis> d1(2), d2(2);
  d1.at(1, 0, 1) = Eis(1);
  d1.at(0, 2, 0) = Eis(-1);
  d2.at(0, 1, 1) = Eis(1);
  d2.at(2, 0, 0) = Eis(-1);
  CHECK(resultant_x2(d1, d2).is_zero());
}

TEST_CASE("residue-ring gcd splits and certifies spurious directions") {
  // modulus (t - 1)(t^2 - 2): z-polys share a root only over t = 1
  UPoly<Eis> m = upoly({-1, 1}) * upoly({-2, 0, 1});
  // p1 = z - t, p2 = z - 1: common root iff t = 1
  std::vector<std::vector<UPoly<Eis>>> zpolys{
      {upoly({0, -1}), upoly({1})},   // z - t
      {upoly({-1}), upoly({1})}};     // z - 1
  auto branches = etale_common_roots(zpolys, m);
  bool found_rational = false, found_spurious = false;
  for (const auto& b : branches) {
    if (b.zgcd.size() >= 2) {
      CHECK(b.modulus.degree() == 1);
      found_rational = true;
    } else {
      found_spurious = true;
    }
  }
  CHECK(found_rational);
  CHECK(found_spurious);
}

TEST_CASE("exact linear algebra") {
  Matrix<Eis> m{{Eis(1), Eis(2), Eis(3)}, {Eis(2), Eis(4), Eis(6)}, {Eis(0), Eis(1), Eis(1)}};
  CHECK(rank(m) == 2);
  auto ker = kernel(m);
  REQUIRE(ker.size() == 1);
  // verify the kernel vector
  for (const auto& row : m) {
    Eis acc(0);
    for (int j = 0; j < 3; ++j) acc = acc + row[static_cast<std::size_t>(j)] * ker[0][static_cast<std::size_t>(j)];
    CHECK(acc.is_zero());
  }
  auto sol = solve(Matrix<Eis>{{Eis(2), Eis(0)}, {Eis(0), Eis(4)}}, {Eis(6), Eis(2)});
  REQUIRE(sol);
  CHECK((*sol)[0] == Eis(3));
  CHECK((*sol)[1] == Eis(Rat(1, 2)));
  CHECK(!solve(Matrix<Eis>{{Eis(1), Eis(1)}, {Eis(2), Eis(2)}}, {Eis(0), Eis(1)}));
}
