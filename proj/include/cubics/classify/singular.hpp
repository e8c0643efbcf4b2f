#pragma once

#include <algorithm>

#include "cubics/classify/types.hpp"
#include "cubics/exact/algebraic.hpp"
#include "cubics/exact/binary_form.hpp"
#include "cubics/poly/divide.hpp"

namespace cubics {

namespace detail {

/// Linear factorization of a ternary quadratic over Q(w).
struct QuadFactors {
  enum Kind { Irreducible, DoubleLine, SplitPair, IrrationalPair } kind = Irreducible;
  std::vector<TernaryForm<Eis>> lines;  // degree-1 forms
};

inline Mat3<Eis> symmetric_matrix(const TernaryForm<Eis>& q) {
  Mat3<Eis> m;
  Eis half(Rat(1, 2));
  m[0][0] = q.at(2, 0, 0);
  m[1][1] = q.at(0, 2, 0);
  m[2][2] = q.at(0, 0, 2);
  m[0][1] = m[1][0] = half * q.at(1, 1, 0);
  m[0][2] = m[2][0] = half * q.at(1, 0, 1);
  m[1][2] = m[2][1] = half * q.at(0, 1, 1);
  return m;
}

/// Factor a binary quadratic a x0^2 + b x0 x1 + c x1^2 into linear forms in
/// x0, x1 (returned as ternary degree-1 forms), or report an irrational pair.
inline QuadFactors factor_binary_quadratic(const Eis& a, const Eis& b, const Eis& c) {
  QuadFactors out;
  auto line = [](const Eis& u, const Eis& v) { return linear_form(u, v, Eis(0)); };
  if (a.is_zero() && c.is_zero()) {
    // b x0 x1, b != 0
    out.kind = QuadFactors::SplitPair;
    out.lines = {line(Eis(1), Eis(0)), line(Eis(0), Eis(1))};
    return out;
  }
  if (a.is_zero()) {
    // x1 (b x0 + c x1)
    out.kind = b.is_zero() ? QuadFactors::DoubleLine : QuadFactors::SplitPair;
    out.lines = {line(Eis(0), Eis(1))};
    if (!b.is_zero()) out.lines.push_back(line(b, c));
    return out;
  }
  Eis disc = b * b - Eis(4) * a * c;
  if (disc.is_zero()) {
    out.kind = QuadFactors::DoubleLine;
    out.lines = {line(Eis(2) * a, b)};
    return out;
  }
  auto s = eis_sqrt(disc);
  if (!s) {
    out.kind = QuadFactors::IrrationalPair;
    return out;
  }
  Eis twoa = Eis(2) * a;
  Eis u1 = (-b + *s) / twoa, u2 = (-b - *s) / twoa;
  out.kind = QuadFactors::SplitPair;
  out.lines = {line(Eis(1), -u1), line(Eis(1), -u2)};
  return out;
}

inline QuadFactors quad_linear_factors(const TernaryForm<Eis>& q) {
  QuadFactors out;
  Mat3<Eis> m = symmetric_matrix(q);
  if (!det(m).is_zero()) return out;  // irreducible conic
  Matrix<Eis> rows(3, std::vector<Eis>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m[i][j];
  auto ker = kernel(rows);
  if (ker.size() >= 2) {
    // rank 1: q = c * l^2, l read off any nonzero row of the matrix
    for (int i = 0; i < 3; ++i) {
      if (m[i][0].is_zero() && m[i][1].is_zero() && m[i][2].is_zero()) continue;
      out.kind = QuadFactors::DoubleLine;
      out.lines = {linear_form(m[i][0], m[i][1], m[i][2])};
      return out;
    }
    return out;  // q == 0; caller avoids
  }
  // rank 2: both lines pass through the kernel point; move it to (0:0:1)
  PPoint<Eis> k(std::array<Eis, 3>{ker[0][0], ker[0][1], ker[0][2]});
  int pos = 0;
  while (k[pos].is_zero()) ++pos;
  Mat3<Eis> t;
  for (auto& row : t.m) row.fill(Eis(0));
  int col = 0;
  for (int i = 0; i < 3; ++i) {
    if (i == pos) continue;
    t[i][col++] = Eis(1);
  }
  for (int i = 0; i < 3; ++i) t[i][2] = k[i];
  TernaryForm<Eis> qt = q.substitute(t);
  QuadFactors bin = factor_binary_quadratic(qt.at(2, 0, 0), qt.at(1, 1, 0), qt.at(0, 2, 0));
  if (bin.kind == QuadFactors::IrrationalPair) return bin;
  Mat3<Eis> tadj = adjugate(t);
  out.kind = QuadFactors::SplitPair;
  for (auto& l : bin.lines) out.lines.push_back(l.substitute(tadj));
  if (out.lines.size() == 1) out.kind = QuadFactors::DoubleLine;  // cannot happen for rank 2
  return out;
}

/// Deterministic exact coordinate changes tried until the elimination is
/// nondegenerate. Permutations first, then shears that mix all variables.
inline std::vector<Mat3<Eis>> elimination_attempts() {
  auto from_rows = [](std::array<std::array<int, 3>, 3> rows) {
    Mat3<Eis> m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = Eis(rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
    return m;
  };
  return {
      from_rows({{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}}),
      from_rows({{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}}}),
      from_rows({{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}}}),
      from_rows({{{1, 0, 1}, {0, 1, 0}, {1, 1, 2}}}),
      from_rows({{{1, 1, 0}, {0, 1, 1}, {1, 0, 1}}}),  // det 2; only invertibility matters
      from_rows({{{1, 2, 1}, {1, 1, 2}, {2, 1, 1}}}),
      from_rows({{{1, 3, 2}, {2, 1, 3}, {1, 1, 1}}}),
      from_rows({{{5, 2, 3}, {1, 4, 2}, {3, 1, 7}}}),
  };
}

struct DirectionWork {
  std::vector<std::array<Eis, 2>> rational;  // exact directions (x0, x1)
  UPoly<Eis> leftover;                       // squarefree, no rational roots found
};

}  // namespace detail

/// Common projective zeros of the three partial derivatives of a nonzero
/// cubic. The locus is either finite (at most three points) or contains a
/// whole line; in the latter case only the witness line is reported.
///
/// Finite loci are found by eliminating x2: candidate (x0:x1) directions are
/// the common roots of pairwise resultants of the partials, then exact gcds
/// of the restricted partials lift each direction to actual points. Exact
/// coordinate changes keep the elimination nondegenerate. Directions or
/// points outside Q(w) raise UnsupportedExtension.
inline SingularLocus singular_points(const TernaryForm<Eis>& f) {
  if (f.is_zero()) throw Error("singular_points: zero form");
  std::array<TernaryForm<Eis>, 3> partials{f.derivative(0), f.derivative(1), f.derivative(2)};

  // Infinite locus <=> the partials share a linear factor (then f has a
  // repeated linear factor and the whole line is singular).
  const TernaryForm<Eis>* first_nz = nullptr;
  for (const auto& p : partials)
    if (!p.is_zero()) {
      first_nz = &p;
      break;
    }
  if (!first_nz) throw Error("singular_points: all partials vanish");
  detail::QuadFactors fac = detail::quad_linear_factors(*first_nz);
  for (const auto& l : fac.lines) {
    bool common = true;
    for (const auto& p : partials)
      if (!p.is_zero() && !try_divide(p, l)) {
        common = false;
        break;
      }
    if (common) {
      SingularLocus loc;
      loc.infinite = true;
      loc.witness_line = PLine<Eis>(l[0], l[1], l[2]);
      return loc;
    }
  }

  for (const Mat3<Eis>& u : detail::elimination_attempts()) {
    TernaryForm<Eis> g = f.substitute(u);  // g(x) = f(Ux); points map back by U
    std::array<TernaryForm<Eis>, 3> q{g.derivative(0), g.derivative(1), g.derivative(2)};
    std::vector<const TernaryForm<Eis>*> nz;
    for (const auto& p : q)
      if (!p.is_zero()) nz.push_back(&p);
    if (nz.size() < 2) continue;  // cannot happen for finite loci; be safe

    bool good = true;
    for (const auto* p : nz)
      if (p->at(0, 0, 2).is_zero()) good = false;
    if (!good) continue;

    // Pairwise resultants, plus two generic combinations when all three
    // partials are nonzero (they kill directions where only a pair meets).
    std::vector<TernaryForm<Eis>> members;
    for (const auto* p : nz) members.push_back(*p);
    if (nz.size() == 3) {
      TernaryForm<Eis> c1 = members[1] + Eis(2) * members[2];
      TernaryForm<Eis> c2 = members[0] + Eis(3) * members[2];
      if (!c1.at(0, 0, 2).is_zero()) members.push_back(c1);
      if (!c2.at(0, 0, 2).is_zero()) members.push_back(c2);
    }
    BinaryForm dir(0);
    dir.c[0] = Eis(0);  // zero form; gcd identity
    bool any = false;
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        BinaryForm r = resultant_x2(members[i], members[j]);
        if (r.is_zero()) continue;
        dir = any ? binary_gcd(dir, r) : r;
        any = true;
      }
    if (!any) continue;

    BinaryForm reduced = binary_squarefree(dir);

    detail::DirectionWork work;
    if (reduced.x0_multiplicity() > 0) work.rational.push_back({Eis(0), Eis(1)});
    if (reduced.x1_multiplicity() > 0) work.rational.push_back({Eis(1), Eis(0)});
    RationalRootSplit split = extract_eis_roots(reduced.core());
    for (const Eis& t : split.roots) work.rational.push_back({Eis(1), t});
    work.leftover = split.remainder;

    // Restriction of a partial to the pencil over a fixed direction.
    auto restrict_at = [](const TernaryForm<Eis>& p, const Eis& a, const Eis& b) {
      QuadInX2 s = split_by_x2(p);
      return UPoly<Eis>({s.c.eval(a, b), s.b.eval(a, b), s.a});
    };

    std::vector<PPoint<Eis>> pts;
    auto lift_direction = [&](const Eis& a, const Eis& b) {
      UPoly<Eis> gz;
      bool first = true;
      for (const auto* p : nz) {
        UPoly<Eis> r = restrict_at(*p, a, b);
        gz = first ? r : gcd(gz, r);
        first = false;
      }
      if (gz.degree() <= 0) return;  // no common zero over this direction
      QuadRoots roots = eis_roots_deg_le2(gz);
      if (roots.irrational)
        throw UnsupportedExtension("singular points over direction lie in a quadratic extension of Q(w)");
      for (const Eis& z : roots.roots) pts.emplace_back(std::array<Eis, 3>{a, b, z});
    };

    for (const auto& d : work.rational) lift_direction(d[0], d[1]);

    if (work.leftover.degree() >= 1) {
      // Exact spuriousness test over the residue ring at the leftover
      // directions; splits may still surface rational directions.
      std::vector<std::vector<UPoly<Eis>>> zpolys;
      for (const auto* p : nz) {
        QuadInX2 s = split_by_x2(*p);
        zpolys.push_back({UPoly<Eis>(s.c.c), UPoly<Eis>(s.b.c), UPoly<Eis>::constant(s.a)});
      }
      for (const auto& branch : etale_common_roots(zpolys, work.leftover)) {
        if (branch.zgcd.size() <= 1) continue;  // coprime: spurious directions
        if (branch.modulus.degree() == 1) {
          Eis t = -branch.modulus[0] / branch.modulus[1];
          lift_direction(Eis(1), t);
        } else {
          throw UnsupportedExtension(
              "singular points lie over directions of degree " +
              std::to_string(branch.modulus.degree()) + " over Q(w)");
        }
      }
    }

    SingularLocus loc;
    for (const auto& x : pts) {
      PPoint<Eis> p(u.apply(x.c));
      bool ok = true;
      for (const auto& pd : partials) ok = ok && pd.eval(p.c).is_zero();
      if (!ok) throw Error("singular_points: internal verification failed");
      if (std::find(loc.points.begin(), loc.points.end(), p) == loc.points.end())
        loc.points.push_back(p);
    }
    return loc;
  }
  throw Error("singular_points: all coordinate changes degenerate");
}

}  // namespace cubics
