#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubics/scalar/eisenstein.hpp"
#include "cubics/scalar/rational.hpp"

using namespace cubics;

namespace {

Eis random_eis(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-8, 8);
  std::uniform_int_distribution<int> den(1, 5);
  return Eis(Rat(num(rng), den(rng)), Rat(num(rng), den(rng)));
}

}  // namespace

TEST_CASE("eisenstein multiplication reduces by w^2 = -1 - w") {
  Eis w = Eis::omega();
  CHECK(w * w == Eis(Rat(-1), Rat(-1)));
  CHECK((Eis(1) + w) * (Eis(1) + w) == w);  // 1 + 2w + w^2 = w
  Eis x(Rat(3, 7), Rat(-2, 5));
  CHECK(Eis(1) * x == x);
}

TEST_CASE("eisenstein inverse") {
  Eis w = Eis::omega();
  CHECK(inverse(Eis(1)) == Eis(1));
  CHECK(inverse(w) == Eis(Rat(-1), Rat(-1)));         // w^-1 = w^2
  CHECK(inverse(Eis(1) + w) == -w);                   // (1+w)(-w) = 1
  CHECK_THROWS_AS(inverse(Eis(0)), DivisionByZero);
}

TEST_CASE("eisenstein conjugation") {
  Eis w = Eis::omega();
  CHECK(conj(w) == Eis(Rat(-1), Rat(-1)));
  CHECK(conj(Eis(Rat(5, 3))) == Eis(Rat(5, 3)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    Eis x = random_eis(rng), y = random_eis(rng);
    CHECK(conj(conj(x)) == x);
    CHECK(conj(x * y) == conj(x) * conj(y));
  }
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 100; ++i) {
    Eis x = random_eis(rng), y = random_eis(rng), z = random_eis(rng);
    CHECK((x * y) * z == x * (y * z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!x.is_zero()) CHECK(x * inverse(x) == Eis(1));
  }
}

TEST_CASE("embedding into C") {
  CHECK(embed(Eis(1)) == CF(1.0, 0.0));
  CF w = embed(Eis::omega());
  CHECK(w.real() == Catch::Approx(-0.5));
  CHECK(w.imag() == Catch::Approx(0.8660254037844386));
  CHECK(std::abs(w * w * w - CF(1.0, 0.0)) < 1e-15);
  std::mt19937_64 rng(13);
  for (int i = 0; i < 50; ++i) {
    Eis x = random_eis(rng);
    CHECK(std::abs(embed(conj(x)) - std::conj(embed(x))) < 1e-14);
    Eis y = random_eis(rng);
    CHECK(std::abs(embed(x * y) - embed(x) * embed(y)) < 1e-12);
  }
}

TEST_CASE("rational square and cube roots") {
  CHECK(*rat_sqrt(Rat(49, 64)) == Rat(7, 8));
  CHECK(!rat_sqrt(Rat(2)));
  CHECK(!rat_sqrt(Rat(-1)));
  CHECK(*rat_cbrt(Rat(-27, 8)) == Rat(-3, 2));
  CHECK(!rat_cbrt(Rat(4)));
}

TEST_CASE("square roots in Q(w)") {
  Eis w = Eis::omega();
  CHECK((*eis_sqrt(w * w) == w || *eis_sqrt(w * w) == -w));
  // sqrt(-3) = 1 + 2w
  Eis s = *eis_sqrt(Eis(-3));
  CHECK(s * s == Eis(-3));
  CHECK(!eis_sqrt(Eis(2)));
  std::mt19937_64 rng(17);
  for (int i = 0; i < 50; ++i) {
    Eis x = random_eis(rng);
    auto r = eis_sqrt(x * x);
    REQUIRE(r);
    CHECK(*r * *r == x * x);
  }
}

TEST_CASE("cube roots in Q(w)") {
  Eis w = Eis::omega();
  CHECK(*eis_cbrt(Eis(8)) == Eis(2));
  Eis target = Eis(1, 2) * Eis(1, 2) * Eis(1, 2);
  CHECK(target == Eis(-3, -6));
  auto r = eis_cbrt(target);
  REQUIRE(r);
  CHECK(*r * *r * *r == target);
  std::mt19937_64 rng(19);
  for (int i = 0; i < 30; ++i) {
    Eis x = random_eis(rng);
    auto c = eis_cbrt(x * x * x);
    REQUIRE(c);
    CHECK(*c * *c * *c == x * x * x);
  }
}

TEST_CASE("scalar text") {
  CHECK(to_string(Eis(Rat(2, 3), Rat(1, 2))) == "2/3 + 1/2*w");
  CHECK(to_string(Eis(0)) == "0");
  CHECK(to_string(Eis(0, -1)) == "-w");
  CHECK(to_string(Eis(Rat(1), Rat(-2))) == "1 - 2*w");
}
