#pragma once

#include <optional>

#include "cubics/exact/linalg.hpp"
#include "cubics/poly/ternary_form.hpp"

namespace cubics {

/// Exact quotient f / p when p divides f, nullopt otherwise. The quotient's
/// coefficients solve a linear system (multiplication by p is linear), so no
/// factorization is needed.
inline std::optional<TernaryForm<Eis>> try_divide(const TernaryForm<Eis>& f,
                                                  const TernaryForm<Eis>& p) {
  if (p.is_zero()) return std::nullopt;
  int dq = f.degree() - p.degree();
  if (dq < 0) return std::nullopt;
  int nq = TernaryForm<Eis>::coeff_count(dq);
  Matrix<Eis> m(static_cast<std::size_t>(f.size()),
                std::vector<Eis>(static_cast<std::size_t>(nq), Eis(0)));
  for (int j = 0; j < nq; ++j) {
    auto e = TernaryForm<Eis>::exponents(dq, j);
    TernaryForm<Eis> col = p * TernaryForm<Eis>::monomial(dq, e[0], e[1], e[2], Eis(1));
    for (int i = 0; i < col.size(); ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = col[i];
  }
  std::vector<Eis> rhs;
  for (int i = 0; i < f.size(); ++i) rhs.push_back(f[i]);
  auto sol = solve(std::move(m), std::move(rhs));
  if (!sol) return std::nullopt;
  TernaryForm<Eis> q(dq);
  for (int j = 0; j < nq; ++j) q[j] = (*sol)[static_cast<std::size_t>(j)];
  return q;
}

/// True when f == c*g for some nonzero scalar c (f, g nonzero).
inline bool proportional(const TernaryForm<Eis>& f, const TernaryForm<Eis>& g) {
  if (f.degree() != g.degree() || f.is_zero() || g.is_zero()) return false;
  int i = 0;
  while (g[i].is_zero()) {
    if (!f[i].is_zero()) return false;
    ++i;
  }
  Eis c = f[i] / g[i];
  if (c.is_zero()) return false;
  for (int k = 0; k < f.size(); ++k)
    if (f[k] != c * g[k]) return false;
  return true;
}

}  // namespace cubics
