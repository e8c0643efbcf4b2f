#pragma once

#include <cmath>
#include <complex>
#include <vector>

#include "cubics/errors.hpp"

namespace cubics {

/// One root of a complex polynomial (coefficients ascending) by Laguerre's
/// method, starting from x. Converges from almost any starting point; cycles
/// are broken by fractional steps.
inline std::complex<double> laguerre_root(const std::vector<std::complex<double>>& a,
                                          std::complex<double> x) {
  using C = std::complex<double>;
  static const double frac[9] = {0.0, 0.5, 0.25, 0.75, 0.13, 0.38, 0.62, 0.88, 1.0};
  const int m = static_cast<int>(a.size()) - 1;
  const double eps = 1e-15;
  for (int iter = 1; iter <= 80; ++iter) {
    C b = a[static_cast<std::size_t>(m)];
    C d(0.0), f(0.0);
    double err = std::abs(b);
    double abx = std::abs(x);
    for (int j = m - 1; j >= 0; --j) {
      f = x * f + d;
      d = x * d + b;
      b = x * b + a[static_cast<std::size_t>(j)];
      err = std::abs(b) + abx * err;
    }
    err *= eps;
    if (std::abs(b) <= err) return x;
    C g = d / b;
    C g2 = g * g;
    C h = g2 - 2.0 * (f / b);
    C sq = std::sqrt(static_cast<double>(m - 1) * (static_cast<double>(m) * h - g2));
    C gp = g + sq, gm = g - sq;
    double abp = std::abs(gp), abm = std::abs(gm);
    if (abp < abm) gp = gm;
    C dx = std::max(abp, abm) > 0.0
               ? static_cast<double>(m) / gp
               : std::polar(1.0 + abx, static_cast<double>(iter));
    C x1 = x - dx;
    if (x == x1) return x;
    if (iter % 10 != 0)
      x = x1;
    else
      x = x - frac[iter / 10] * dx;
  }
  // Very rare: return the current estimate; callers refine and check residuals.
  return x;
}

/// All complex roots of a polynomial with complex coefficients (ascending).
/// Roots are found on successively deflated polynomials and then polished
/// against the original.
inline std::vector<std::complex<double>> poly_roots(std::vector<std::complex<double>> a) {
  using C = std::complex<double>;
  while (!a.empty() && std::abs(a.back()) == 0.0) a.pop_back();
  if (a.size() <= 1) return {};
  const std::vector<C> original = a;
  std::vector<C> roots;
  while (a.size() > 2) {
    C x = laguerre_root(a, C(0.0, 0.0));
    roots.push_back(x);
    // synthetic division by (t - x)
    std::vector<C> b(a.size() - 1);
    C rem = a.back();
    for (int j = static_cast<int>(a.size()) - 2; j >= 0; --j) {
      b[static_cast<std::size_t>(j)] = rem;
      rem = a[static_cast<std::size_t>(j)] + rem * x;
    }
    a = std::move(b);
  }
  if (a.size() == 2) roots.push_back(-a[0] / a[1]);
  for (auto& r : roots) r = laguerre_root(original, r);
  return roots;
}

}  // namespace cubics
