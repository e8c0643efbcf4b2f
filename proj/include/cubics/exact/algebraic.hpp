#pragma once

#include <optional>
#include <vector>

#include "cubics/exact/upoly.hpp"
#include "cubics/numeric/polyroots.hpp"

namespace cubics {

/// Roots in Q(w) of a polynomial of degree <= 2 (complete decision).
struct QuadRoots {
  std::vector<Eis> roots;
  bool irrational = false;  // nonempty complement lives in a quadratic extension
};

inline QuadRoots eis_roots_deg_le2(const UPoly<Eis>& p) {
  QuadRoots out;
  if (p.degree() <= 0) return out;
  if (p.degree() == 1) {
    out.roots.push_back(-p[0] / p[1]);
    return out;
  }
  Eis a = p[2], b = p[1], c = p[0];
  Eis disc = b * b - Eis(4) * a * c;
  auto s = eis_sqrt(disc);
  if (!s) {
    out.irrational = true;
    return out;
  }
  Eis twoa = Eis(2) * a;
  out.roots.push_back((-b + *s) / twoa);
  if (!s->is_zero()) out.roots.push_back((-b - *s) / twoa);
  return out;
}

inline std::vector<std::complex<double>> embed_coeffs(const UPoly<Eis>& p) {
  std::vector<std::complex<double>> c;
  c.reserve(static_cast<std::size_t>(p.degree() + 1));
  for (int i = 0; i <= p.degree(); ++i) c.push_back(embed(p[i]));
  return c;
}

/// All roots of p that lie in Q(w), together with the exact cofactor left
/// after dividing them out. Degrees <= 2 are decided in closed form; higher
/// degrees recognize candidates from floating-point roots and verify each by
/// exact substitution, so reported roots are always genuine. A rational root
/// whose numerator/denominator exceed the reconstruction bounds would stay in
/// the remainder; callers treat the remainder conservatively.
struct RationalRootSplit {
  std::vector<Eis> roots;
  UPoly<Eis> remainder;   // no roots found in Q(w) by the above procedure
  bool irrational = false;  // remainder is certainly without Q(w) roots (deg <= 2 case)
};

inline RationalRootSplit extract_eis_roots(UPoly<Eis> p) {
  RationalRootSplit out;
  bool progress = true;
  while (progress && p.degree() >= 1) {
    progress = false;
    if (p.degree() <= 2) {
      QuadRoots q = eis_roots_deg_le2(p);
      for (const Eis& r : q.roots) {
        out.roots.push_back(r);
        p = p / UPoly<Eis>({-r, Eis(1)});
      }
      if (!q.roots.empty()) progress = true;
      if (q.irrational || p.degree() <= 0) {
        out.remainder = p;
        out.irrational = q.irrational || p.degree() <= 0;
        if (p.degree() <= 0) out.irrational = true;
        return out;
      }
      continue;
    }
    for (const auto& z : poly_roots(embed_coeffs(p))) {
      if (auto cand = eis_reconstruct(z, Int(100000000), 1e-5)) {
        if (scalar_traits<Eis>::is_zero(p.eval(*cand))) {
          out.roots.push_back(*cand);
          p = p / UPoly<Eis>({-*cand, Eis(1)});
          progress = true;
          break;
        }
      }
    }
  }
  out.remainder = p;
  out.irrational = p.degree() <= 0;
  return out;
}

/// Common-root analysis of polynomials in z whose coefficients live in the
/// quotient ring Q(w)[t]/(M), M squarefree. The ring is a product of fields;
/// Euclid runs uniformly until a leading coefficient fails to be a unit, in
/// which case its gcd with M splits the modulus and both branches are redone.
struct EtaleBranch {
  UPoly<Eis> modulus;             // monic factor of M
  std::vector<UPoly<Eis>> zgcd;   // gcd in z over this branch (coefficients reduced)
};

namespace detail {

using ZPoly = std::vector<UPoly<Eis>>;  // ascending powers of z

struct SplitRequest {
  UPoly<Eis> factor;
};

inline ZPoly reduce_zpoly(ZPoly p, const UPoly<Eis>& m) {
  for (auto& c : p) c = c % m;
  while (!p.empty() && p.back().is_zero()) p.pop_back();
  return p;
}

/// Leading coefficient with unit check; drops zero-divisor-free top terms.
/// Throws SplitRequest when the modulus must be split.
inline ZPoly normalize_zpoly(ZPoly p, const UPoly<Eis>& m) {
  p = reduce_zpoly(std::move(p), m);
  while (!p.empty()) {
    UPoly<Eis> g = gcd(p.back(), m);
    if (g.degree() == 0) return p;                       // unit leading coeff
    if (g.degree() == m.degree()) { p.pop_back(); continue; }  // zero in the whole ring
    throw SplitRequest{g};
  }
  return p;
}

inline UPoly<Eis> inv_mod(const UPoly<Eis>& x, const UPoly<Eis>& m) {
  auto [g, s] = ext_gcd_mod(x, m);
  if (g.degree() != 0) throw SplitRequest{g};
  return s % m;
}

inline ZPoly zmod(ZPoly a, ZPoly b, const UPoly<Eis>& m) {
  UPoly<Eis> binv = inv_mod(b.back(), m);
  while (a.size() >= b.size() && !a.empty()) {
    UPoly<Eis> f = (a.back() * binv) % m;
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i)
      a[i + shift] = (a[i + shift] - f * b[i]) % m;
    a = normalize_zpoly(std::move(a), m);
    if (a.size() < b.size()) break;
  }
  return a;
}

inline void etale_worker(const UPoly<Eis>& m, const std::vector<ZPoly>& polys,
                         std::vector<EtaleBranch>& out) {
  try {
    ZPoly g;
    for (const ZPoly& p : polys) {
      ZPoly q = normalize_zpoly(p, m);
      if (q.empty()) continue;
      if (g.empty()) {
        g = std::move(q);
        continue;
      }
      // Euclid in z
      ZPoly a = g, b = q;
      while (!b.empty()) {
        ZPoly r = zmod(a, b, m);
        a = std::move(b);
        b = std::move(r);
      }
      g = std::move(a);
      if (g.size() == 1) break;  // unit: nothing can shrink further
    }
    out.push_back(EtaleBranch{m.monic(), std::move(g)});
  } catch (const SplitRequest& sr) {
    UPoly<Eis> f1 = sr.factor.monic();
    UPoly<Eis> f2 = (m / f1).monic();
    etale_worker(f1, polys, out);
    etale_worker(f2, polys, out);
  }
}

}  // namespace detail

/// For each branch (factor of M), the monic gcd-in-z of the given z-polys.
/// zgcd.size() == 1 means coprime on that branch (no common root);
/// zgcd.size() == k+1 means a degree-k common factor in z.
inline std::vector<EtaleBranch> etale_common_roots(
    const std::vector<std::vector<UPoly<Eis>>>& zpolys, const UPoly<Eis>& m) {
  std::vector<EtaleBranch> out;
  detail::etale_worker(m.monic(), zpolys, out);
  return out;
}

}  // namespace cubics
