#pragma once

#include <algorithm>
#include <random>

#include "cubics/numeric/polyroots.hpp"
#include "cubics/numeric/random.hpp"
#include "cubics/poly/hessian.hpp"
#include "cubics/projective/point.hpp"

namespace cubics {

/// A cubic together with one point of its flex locus.
struct FlexPair {
  TernaryForm<CF> cubic;
  PPoint<CF> point;
};

struct FlexPoint {
  PPoint<CF> point;
  double residual_f = 0.0;
  double residual_h = 0.0;
  bool singular = false;   // gradient of f vanishes there (within tolerance)
  bool converged = true;   // Newton refinement reached its step tolerance
};

struct FlexResult {
  std::vector<FlexPoint> points;
  // two distinct returned points closer than 1e-3: near-degenerate input
  bool multiplicity_warning = false;
  int dim = 0;  // 1 when the resultant vanishes identically (reducible cubic)
};

namespace detail {

/// Coefficients of f as a polynomial in x2: result[k][j] is the coefficient
/// of x2^k x0^(d-k-j) x1^j.
inline std::vector<std::vector<CF>> coeffs_by_x2(const TernaryForm<CF>& f) {
  int d = f.degree();
  std::vector<std::vector<CF>> out(static_cast<std::size_t>(d + 1));
  for (int k = 0; k <= d; ++k)
    out[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(d - k + 1), CF(0.0));
  for (int i = 0; i < f.size(); ++i) {
    auto e = TernaryForm<CF>::exponents(d, i);
    out[static_cast<std::size_t>(e[2])][static_cast<std::size_t>(e[1])] = f[i];
  }
  return out;
}

inline CF eval_binary(const std::vector<CF>& c, CF t) {
  CF acc(0.0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * t + *it;
  return acc;
}

inline CF det6(std::array<std::array<CF, 6>, 6> m) {
  CF d(1.0);
  for (int col = 0; col < 6; ++col) {
    int piv = col;
    for (int r = col + 1; r < 6; ++r)
      if (std::abs(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)]) >
          std::abs(m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]))
        piv = r;
    if (std::abs(m[static_cast<std::size_t>(piv)][static_cast<std::size_t>(col)]) == 0.0) return CF(0.0);
    if (piv != col) {
      std::swap(m[static_cast<std::size_t>(piv)], m[static_cast<std::size_t>(col)]);
      d = -d;
    }
    d *= m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
    for (int r = col + 1; r < 6; ++r) {
      CF fac = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(col)] /
               m[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
      for (int cc = col; cc < 6; ++cc)
        m[static_cast<std::size_t>(r)][static_cast<std::size_t>(cc)] -=
            fac * m[static_cast<std::size_t>(col)][static_cast<std::size_t>(cc)];
    }
  }
  return d;
}

/// Res_{x2}(f, h) for two cubics, sampled at t and assembled by Sylvester.
inline CF resultant_sample(const std::vector<std::vector<CF>>& fc,
                           const std::vector<std::vector<CF>>& hc, CF t) {
  std::array<CF, 4> a, b;
  for (int k = 0; k <= 3; ++k) {
    a[static_cast<std::size_t>(k)] = eval_binary(fc[static_cast<std::size_t>(k)], t);
    b[static_cast<std::size_t>(k)] = eval_binary(hc[static_cast<std::size_t>(k)], t);
  }
  std::array<std::array<CF, 6>, 6> s{};
  for (int r = 0; r < 3; ++r)
    for (int k = 0; k <= 3; ++k) {
      s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = a[static_cast<std::size_t>(3 - k)];
      s[static_cast<std::size_t>(r + 3)][static_cast<std::size_t>(r + k)] = b[static_cast<std::size_t>(3 - k)];
    }
  return det6(s);
}

inline double max_abs_coeff(const TernaryForm<CF>& f) {
  double m = 0.0;
  for (int i = 0; i < f.size(); ++i) m = std::max(m, std::abs(f[i]));
  return m;
}

inline std::array<CF, 3> gradient_at(const std::array<TernaryForm<CF>, 3>& grad,
                                     const std::array<CF, 3>& p) {
  return {grad[0].eval(p), grad[1].eval(p), grad[2].eval(p)};
}

/// Newton iteration for the gradient system {df/dxi = 0}: localizes a
/// singular point of f from a nearby guess. At a node this converges
/// quadratically; at worse singularities the Jacobian degenerates and the
/// call reports failure.
inline bool newton_gradient(const std::array<TernaryForm<CF>, 3>& fgrad,
                            std::array<CF, 3>& p) {
  std::array<std::array<TernaryForm<CF>, 3>, 3> sec;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      sec[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          fgrad[static_cast<std::size_t>(i)].derivative(j);
  int pin = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(p[static_cast<std::size_t>(i)]) > std::abs(p[static_cast<std::size_t>(pin)])) pin = i;
  CF scale = p[static_cast<std::size_t>(pin)];
  for (auto& c : p) c /= scale;
  int u = (pin + 1) % 3, v = (pin + 2) % 3;
  for (int it = 0; it < 15; ++it) {
    // pick the two partials with the best-conditioned 2x2 Jacobian
    int r0 = -1, r1 = -1;
    double best = 0.0;
    std::array<std::array<CF, 3>, 3> jac;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            sec[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)].eval(p);
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        CF d = jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(u)] *
                   jac[static_cast<std::size_t>(j)][static_cast<std::size_t>(v)] -
               jac[static_cast<std::size_t>(i)][static_cast<std::size_t>(v)] *
                   jac[static_cast<std::size_t>(j)][static_cast<std::size_t>(u)];
        if (std::abs(d) > best) {
          best = std::abs(d);
          r0 = i;
          r1 = j;
        }
      }
    if (best < 1e-8) return false;
    CF f0 = fgrad[static_cast<std::size_t>(r0)].eval(p), f1 = fgrad[static_cast<std::size_t>(r1)].eval(p);
    CF j00 = jac[static_cast<std::size_t>(r0)][static_cast<std::size_t>(u)];
    CF j01 = jac[static_cast<std::size_t>(r0)][static_cast<std::size_t>(v)];
    CF j10 = jac[static_cast<std::size_t>(r1)][static_cast<std::size_t>(u)];
    CF j11 = jac[static_cast<std::size_t>(r1)][static_cast<std::size_t>(v)];
    CF det = j00 * j11 - j01 * j10;
    CF du = (f0 * j11 - f1 * j01) / det;
    CF dv = (f1 * j00 - f0 * j10) / det;
    p[static_cast<std::size_t>(u)] -= du;
    p[static_cast<std::size_t>(v)] -= dv;
    if (std::abs(du) + std::abs(dv) < 1e-14) return true;
  }
  return false;
}

/// Newton iteration for {f = 0, h = 0} in the affine chart that pins the
/// largest coordinate to 1. Returns false when the Jacobian is too singular
/// to iterate (the point is kept as-is).
inline bool newton_refine(const TernaryForm<CF>& f, const TernaryForm<CF>& h,
                          const std::array<TernaryForm<CF>, 3>& fgrad,
                          const std::array<TernaryForm<CF>, 3>& hgrad,
                          std::array<CF, 3>& p) {
  int pin = 0;
  for (int i = 1; i < 3; ++i)
    if (std::abs(p[static_cast<std::size_t>(i)]) > std::abs(p[static_cast<std::size_t>(pin)])) pin = i;
  CF scale = p[static_cast<std::size_t>(pin)];
  for (auto& c : p) c /= scale;
  int u = (pin + 1) % 3, v = (pin + 2) % 3;
  for (int it = 0; it < 40; ++it) {
    CF fv = f.eval(p), hv = h.eval(p);
    auto fg = gradient_at(fgrad, p);
    auto hg = gradient_at(hgrad, p);
    CF j00 = fg[static_cast<std::size_t>(u)], j01 = fg[static_cast<std::size_t>(v)];
    CF j10 = hg[static_cast<std::size_t>(u)], j11 = hg[static_cast<std::size_t>(v)];
    CF det = j00 * j11 - j01 * j10;
    if (std::abs(det) < 1e-14) return it > 0;
    CF du = (fv * j11 - hv * j01) / det;
    CF dv = (hv * j00 - fv * j10) / det;
    p[static_cast<std::size_t>(u)] -= du;
    p[static_cast<std::size_t>(v)] -= dv;
    if (std::abs(du) + std::abs(dv) < 1e-14) return true;
  }
  return false;
}

}  // namespace detail

/// All intersection points of C(f) with its Hessian curve, numerically.
/// For an elliptic cubic these are the nine flexes; for singular irreducible
/// cubics the singular points are included and flagged. Reducible cubics are
/// reported with dim = 1 and no point list.
///
/// The elimination works in seeded random unimodular coordinates, finds the
/// degree-9 resultant by sampling Sylvester determinants at roots of unity,
/// solves for its roots, lifts each root direction through the restricted
/// cubic, and Newton-refines every candidate on the square system.
inline FlexResult flexes_numeric(const TernaryForm<CF>& f, std::uint64_t seed = 0,
                                 double tol = 1e-6) {
  if (f.degree() != 3) throw NumericFailure("flexes_numeric: expected a cubic");
  double fscale = detail::max_abs_coeff(f);
  if (fscale == 0.0) throw NumericFailure("flexes_numeric: zero cubic");
  TernaryForm<CF> fn = CF(1.0 / fscale, 0.0) * f;

  std::mt19937_64 rng(seed);
  FlexResult result;

  TernaryForm<CF> horig = hessian(fn);
  double horig_scale = detail::max_abs_coeff(horig);
  if (horig_scale == 0.0) {
    result.dim = 1;  // hessian identically zero: cone over a reducible cubic
    return result;
  }
  TernaryForm<CF> hn = CF(1.0 / horig_scale, 0.0) * horig;
  std::array<TernaryForm<CF>, 3> fgrad{fn.derivative(0), fn.derivative(1), fn.derivative(2)};

  std::vector<FlexPoint> found;
  int good_passes = 0;
  int zero_votes = 0;

  // Directions can be badly conditioned for an unlucky coordinate change, so
  // results from two independent passes are merged.
  for (int attempt = 0; attempt < 12 && good_passes < 2; ++attempt) {
    Mat3<Eis> u_exact = random_unimodular_int(rng);
    Mat3<CF> u = embed(u_exact);
    TernaryForm<CF> g = fn.substitute(u);
    TernaryForm<CF> h = hessian(g);
    double hscale = detail::max_abs_coeff(h);
    if (hscale == 0.0) {
      result.dim = 1;
      return result;
    }
    h = CF(1.0 / hscale, 0.0) * h;

    auto fc = detail::coeffs_by_x2(g);
    auto hc = detail::coeffs_by_x2(h);

    // degree-9 resultant via inverse DFT over 10th roots of unity
    const int n = 10;
    std::vector<CF> values(n);
    double vmax = 0.0;
    for (int k = 0; k < n; ++k) {
      CF t = std::polar(1.0, 2.0 * M_PI * k / n);
      values[static_cast<std::size_t>(k)] = detail::resultant_sample(fc, hc, t);
      vmax = std::max(vmax, std::abs(values[static_cast<std::size_t>(k)]));
    }
    if (vmax < 1e-12) {
      // the resultant looks identically zero (f and H_f share a component);
      // confirmed after agreeing votes from independent coordinate changes
      if (++zero_votes >= 3 && good_passes == 0) {
        result.dim = 1;
        return result;
      }
      continue;
    }
    std::vector<CF> res(n);
    for (int j = 0; j < n; ++j) {
      CF acc(0.0);
      for (int k = 0; k < n; ++k)
        acc += values[static_cast<std::size_t>(k)] * std::polar(1.0, -2.0 * M_PI * j * k / n);
      res[static_cast<std::size_t>(j)] = acc / static_cast<double>(n);
    }
    // well-conditioned coordinates give a resultant of honest degree 9 with
    // roots of moderate size; retry otherwise
    if (std::abs(res[9]) < 1e-6 * vmax) continue;
    if (std::abs(g.at(0, 0, 3)) < 1e-10 || std::abs(h.at(0, 0, 3)) < 1e-10) continue;

    std::vector<CF> directions = poly_roots(res);

    // raw candidates: for each direction, the x2-roots of g near the
    // Hessian curve
    std::vector<std::array<CF, 3>> raw;
    for (CF t : directions) {
      std::vector<CF> zc;
      for (int k = 0; k <= 3; ++k)
        zc.push_back(detail::eval_binary(fc[static_cast<std::size_t>(k)], t));
      for (CF z : poly_roots(zc)) {
        std::array<CF, 3> p{CF(1.0), t, z};
        double nrm = std::sqrt(std::norm(p[0]) + std::norm(p[1]) + std::norm(p[2]));
        if (std::abs(h.eval(p)) / (nrm * nrm * nrm) < 1e-2) raw.push_back(p);
      }
    }
    std::array<TernaryForm<CF>, 3> ggrad{g.derivative(0), g.derivative(1), g.derivative(2)};
    std::array<TernaryForm<CF>, 3> hgrad{h.derivative(0), h.derivative(1), h.derivative(2)};

    for (auto& cand : raw) {
      bool converged = detail::newton_refine(g, h, ggrad, hgrad, cand);
      PPoint<CF> p(u.apply(cand));  // back to the original coordinates
      FlexPoint fp;
      fp.point = p;
      fp.converged = converged;
      double gnorm = 0.0;
      for (const auto& d : fgrad) gnorm += std::norm(d.eval(p.c));
      // Candidates with a near-vanishing gradient sit on a singular point of
      // the curve, where f and its Hessian curve osculate and the square
      // system cannot localize. Sharpen on the gradient system instead.
      if (std::sqrt(gnorm) < 1e-3) {
        std::array<CF, 3> q = p.c;
        if (detail::newton_gradient(fgrad, q)) {
          PPoint<CF> snapped(q);
          double g2 = 0.0;
          for (const auto& d : fgrad) g2 += std::norm(d.eval(snapped.c));
          if (std::sqrt(g2) < 1e-9 && std::abs(fn.eval(snapped.c)) < 1e-9 &&
              point_distance(p, snapped) < 1e-2) {
            fp.point = snapped;
            fp.converged = true;
          }
        }
        fp.singular = true;
      }
      fp.residual_f = std::abs(fn.eval(fp.point.c));
      fp.residual_h = std::abs(hn.eval(fp.point.c));
      if (fp.residual_f > 1e-7 || fp.residual_h > 1e-7) continue;  // spurious candidate
      found.push_back(std::move(fp));
    }
    ++good_passes;
  }
  if (good_passes == 0) {
    if (zero_votes > 0) {
      result.dim = 1;
      return result;
    }
    throw NumericFailure("flexes_numeric: no usable coordinate change found");
  }

  // Deduplicate at distance tol; clusters around a singular point that
  // could not be sharpened (e.g. cusps) merge at a coarser radius set by
  // the attainable accuracy there.
  std::vector<FlexPoint> dedup;
  for (auto& fp : found) {
    bool merged = false;
    for (auto& kept : dedup) {
      double radius = (fp.singular && kept.singular) ? std::max(tol, 3e-2) : tol;
      if (point_distance(fp.point, kept.point) <= radius) {
        if (fp.residual_f + fp.residual_h < kept.residual_f + kept.residual_h) kept = fp;
        merged = true;
        break;
      }
    }
    if (!merged) dedup.push_back(fp);
  }
  // near-degenerate input: two genuinely distinct points almost coincide
  for (std::size_t i = 0; i < dedup.size(); ++i)
    for (std::size_t j = i + 1; j < dedup.size(); ++j)
      if (point_distance(dedup[i].point, dedup[j].point) < 1e-3) result.multiplicity_warning = true;
  std::sort(dedup.begin(), dedup.end(), [](const FlexPoint& a, const FlexPoint& b) {
    for (int i = 0; i < 3; ++i) {
      if (a.point[i].real() != b.point[i].real()) return a.point[i].real() < b.point[i].real();
      if (a.point[i].imag() != b.point[i].imag()) return a.point[i].imag() < b.point[i].imag();
    }
    return false;
  });
  result.points = std::move(dedup);
  result.dim = 0;
  return result;
}

}  // namespace cubics
