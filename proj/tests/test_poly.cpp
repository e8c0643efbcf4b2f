#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "cubics/numeric/random.hpp"
#include "cubics/poly/action.hpp"
#include "cubics/poly/hessian.hpp"
#include "cubics/poly/orbit.hpp"
#include "cubics/poly/ternary_form.hpp"
#include "forms.hpp"

using namespace cubics;

TEST_CASE("hessians of the normal forms") {
  Eis mu(5);
  CHECK(hessian(forms::triangle(mu)) == forms::xyz_scaled(Eis(2) * mu * mu * mu));
  CHECK(hessian(forms::triple_line()).is_zero());
  // (x0^2 - x1 x2) x1 has hessian -8 x1^3
  TernaryForm<Eis> h7 = forms::conic_tangent();
  CHECK(hessian(h7) == TernaryForm<Eis>::monomial(3, 0, 3, 0, Eis(-8)));
  // Fermat cubic: det diag(6x0, 6x1, 6x2)
  CHECK(hessian(forms::fermat()) == forms::xyz_scaled(Eis(216)));
  CHECK(hessian(TernaryForm<Eis>(3)).is_zero());
}

TEST_CASE("action is substitution by the inverse") {
  TernaryForm<Eis> f = TernaryForm<Eis>::monomial(3, 2, 1, 0, Eis(1));  // x0^2 x1
  CHECK(act(Mat3<Eis>::identity(), f) == f);
  // swap x1 and x2
  Mat3<Eis> swap12 = Mat3<Eis>::identity();
  swap12[1][1] = Eis(0);
  swap12[2][2] = Eis(0);
  swap12[1][2] = Eis(1);
  swap12[2][1] = Eis(1);
  CHECK(act(swap12, f) == TernaryForm<Eis>::monomial(3, 2, 0, 1, Eis(1)));
}

TEST_CASE("action composition law and hessian covariance") {
  std::mt19937_64 rng(23);
  for (int i = 0; i < 25; ++i) {
    Mat3<Eis> g1 = random_unimodular_int(rng);
    Mat3<Eis> g2 = random_unimodular_int(rng);
    TernaryForm<Eis> f = random_int_cubic(rng);
    CHECK(act(g1, act(g2, f)) == act(g1 * g2, f));
    CHECK(act(g1, hessian(f)) == hessian(act(g1, f)));
  }
}

TEST_CASE("hessian covariance pointwise") {
  std::mt19937_64 rng(29);
  Mat3<Eis> g = random_unimodular_int(rng);
  TernaryForm<Eis> f = random_int_cubic(rng);
  std::array<Eis, 3> v{Eis(2), Eis(-1, 1), Eis(Rat(1, 3))};
  // H_{g.f}(g.v) = H_f(v)
  CHECK(hessian(act(g, f)).eval(g.apply(v)) == hessian(f).eval(v));
}

TEST_CASE("evaluation") {
  CHECK(forms::fermat().eval({Eis(0), Eis(-1), Eis(1)}).is_zero());
  CHECK(TernaryForm<Eis>::monomial(3, 3, 0, 0, Eis(1)).eval({Eis(1), Eis(0), Eis(0)}) == Eis(1));
  std::mt19937_64 rng(31);
  TernaryForm<Eis> f = random_int_cubic(rng);
  std::array<Eis, 3> p{Eis(3), Eis(-2), Eis(5)};
  std::array<Eis, 3> p2{Eis(6), Eis(-4), Eis(10)};
  CHECK(f.eval(p2) == Eis(8) * f.eval(p));
}

TEST_CASE("orbit dimensions of the normal forms") {
  CHECK(sl3_orbit_dim(forms::triple_line()) == 3);
  CHECK(sl3_orbit_dim(forms::double_line_plus_line()) == 5);
  CHECK(sl3_orbit_dim(forms::concurrent_lines()) == 6);
  CHECK(sl3_orbit_dim(forms::triangle(Eis(1))) == 6);
  CHECK(sl3_orbit_dim(forms::conic_tangent()) == 7);
  CHECK(sl3_orbit_dim(forms::conic_secant(Eis(1))) == 7);
  CHECK(sl3_orbit_dim(forms::cuspidal()) == 8);
  CHECK(sl3_orbit_dim(forms::nodal(Eis(1))) == 8);
  CHECK(sl3_orbit_dim(forms::hesse_member(Eis(1))) == 8);
}

TEST_CASE("orbit dimension is constant on orbits") {
  std::mt19937_64 rng(37);
  for (const auto& f : {forms::double_line_plus_line(), forms::cuspidal(), forms::triangle(Eis(2))}) {
    int d = sl3_orbit_dim(f);
    for (int i = 0; i < 5; ++i) {
      CHECK(sl3_orbit_dim(act(random_unimodular_int(rng), f)) == d);
    }
  }
}

TEST_CASE("form multiplication and substitution basics") {
  TernaryForm<Eis> l = linear_form(Eis(1), Eis(1), Eis(1));
  TernaryForm<Eis> cube = l * l * l;
  CHECK(cube.at(1, 1, 1) == Eis(6));
  CHECK(cube.at(3, 0, 0) == Eis(1));
  CHECK(cube.at(2, 1, 0) == Eis(3));
}
