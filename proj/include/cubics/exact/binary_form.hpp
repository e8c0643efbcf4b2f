#pragma once

#include <array>

#include "cubics/exact/upoly.hpp"
#include "cubics/poly/ternary_form.hpp"

namespace cubics {

/// Homogeneous binary form in (x0, x1), stored as c[k] = coefficient of
/// x0^(deg-k) x1^k. The zero form keeps its nominal degree.
struct BinaryForm {
  int deg = 0;
  std::vector<Eis> c;

  explicit BinaryForm(int degree = 0)
      : deg(degree), c(static_cast<std::size_t>(degree + 1), Eis(0)) {}
  BinaryForm(int degree, std::vector<Eis> coeffs) : deg(degree), c(std::move(coeffs)) {}

  bool is_zero() const {
    for (const auto& x : c)
      if (!x.is_zero()) return false;
    return true;
  }

  Eis eval(const Eis& x0, const Eis& x1) const {
    Eis acc(0);
    Eis p0(1);
    std::vector<Eis> pow1(c.size());
    Eis p1(1);
    for (std::size_t k = 0; k < c.size(); ++k) {
      pow1[k] = p1;
      p1 = p1 * x1;
    }
    // accumulate from highest x0 power down
    for (int k = deg; k >= 0; --k) {
      acc = acc + c[static_cast<std::size_t>(k)] * pow1[static_cast<std::size_t>(k)] * p0;
      // p0 should be x0^(deg-k); build lazily below
      if (k > 0) p0 = p0 * x0;
    }
    return acc;
  }

  /// Multiplicity of the factor x1 (vanishing order at direction (1:0)).
  int x1_multiplicity() const {
    for (std::size_t k = 0; k < c.size(); ++k)
      if (!c[k].is_zero()) return static_cast<int>(k);
    return deg + 1;  // zero form
  }
  /// Multiplicity of the factor x0 (vanishing order at direction (0:1)).
  int x0_multiplicity() const {
    for (int k = deg; k >= 0; --k)
      if (!c[static_cast<std::size_t>(k)].is_zero()) return deg - k;
    return deg + 1;  // zero form
  }

  /// The form with all x0 and x1 factors removed, as a polynomial in
  /// t = x1/x0 (nonzero constant term and nonzero leading coefficient).
  UPoly<Eis> core() const {
    int a = x1_multiplicity(), b = x0_multiplicity();
    if (a > deg) return UPoly<Eis>();  // zero form
    std::vector<Eis> r(c.begin() + a, c.end() - b);
    return UPoly<Eis>(std::move(r));
  }
};

inline BinaryForm homogenize(const UPoly<Eis>& p, int deg) {
  BinaryForm f(deg);
  for (int k = 0; k <= p.degree(); ++k) f.c[static_cast<std::size_t>(k)] = p[k];
  return f;
}

/// x1^a * x0^b * core, with core given in t = x1/x0.
inline BinaryForm binary_from_parts(const UPoly<Eis>& core, int a, int b) {
  BinaryForm h(core.degree() + a + b);
  for (int k = 0; k <= core.degree(); ++k) h.c[static_cast<std::size_t>(k + a)] = core[k];
  return h;
}

/// gcd of binary forms: common x0/x1 factors plus the gcd of the cores.
inline BinaryForm binary_gcd(const BinaryForm& f, const BinaryForm& g) {
  if (f.is_zero()) return g;
  if (g.is_zero()) return f;
  int a = std::min(f.x1_multiplicity(), g.x1_multiplicity());
  int b = std::min(f.x0_multiplicity(), g.x0_multiplicity());
  return binary_from_parts(gcd(f.core(), g.core()), a, b);
}

inline BinaryForm binary_squarefree(const BinaryForm& f) {
  if (f.is_zero()) return f;
  int a = std::min(1, f.x1_multiplicity());
  int b = std::min(1, f.x0_multiplicity());
  return binary_from_parts(squarefree_part(f.core()), a, b);
}

/// A ternary quadratic viewed as A x2^2 + B(x0,x1) x2 + C(x0,x1).
struct QuadInX2 {
  Eis a;         // x2^2 coefficient
  BinaryForm b;  // degree 1
  BinaryForm c;  // degree 2
};

inline QuadInX2 split_by_x2(const TernaryForm<Eis>& q) {
  QuadInX2 r{Eis(0), BinaryForm(1), BinaryForm(2)};
  for (int i = 0; i < q.size(); ++i) {
    auto e = TernaryForm<Eis>::exponents(q.degree(), i);
    if (e[2] == 2)
      r.a = q[i];
    else if (e[2] == 1)
      r.b.c[static_cast<std::size_t>(e[1])] = q[i];
    else
      r.c.c[static_cast<std::size_t>(e[1])] = q[i];
  }
  return r;
}

/// Resultant of two ternary quadratics with respect to x2: a binary quartic
/// in (x0, x1). Computed from the 4x4 Sylvester determinant; each term is
/// homogeneous of total degree 4, so the dehomogenized determinant in
/// t = x1/x0 homogenizes back exactly.
inline BinaryForm resultant_x2(const TernaryForm<Eis>& q1, const TernaryForm<Eis>& q2) {
  QuadInX2 p = split_by_x2(q1), q = split_by_x2(q2);
  auto up = [](const BinaryForm& f) { return UPoly<Eis>(f.c); };
  UPoly<Eis> pa = UPoly<Eis>::constant(p.a), pb = up(p.b), pc = up(p.c);
  UPoly<Eis> qa = UPoly<Eis>::constant(q.a), qb = up(q.b), qc = up(q.c);
  UPoly<Eis> z;
  std::array<std::array<UPoly<Eis>, 4>, 4> s{{{pa, pb, pc, z},
                                              {z, pa, pb, pc},
                                              {qa, qb, qc, z},
                                              {z, qa, qb, qc}}};
  // cofactor expansion along the first column
  auto det3 = [](const std::array<std::array<UPoly<Eis>, 3>, 3>& m) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  UPoly<Eis> d;
  for (int i = 0; i < 4; ++i) {
    if (s[static_cast<std::size_t>(i)][0].is_zero()) continue;
    std::array<std::array<UPoly<Eis>, 3>, 3> minor;
    int mr = 0;
    for (int r = 0; r < 4; ++r) {
      if (r == i) continue;
      for (int col = 1; col < 4; ++col)
        minor[static_cast<std::size_t>(mr)][static_cast<std::size_t>(col - 1)] =
            s[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)];
      ++mr;
    }
    UPoly<Eis> term = s[static_cast<std::size_t>(i)][0] * det3(minor);
    d = (i % 2 == 0) ? d + term : d - term;
  }
  return homogenize(d, 4);
}

}  // namespace cubics
