#pragma once

#include <optional>

#include "cubics/poly/ternary_form.hpp"

namespace cubics {

/// Parameter of a Hesse pencil member x0^3+x1^3+x2^3 + lambda*x0*x1*x2,
/// with lambda = infinity standing for x0*x1*x2 itself.
struct PencilParam {
  bool infinity = false;
  Eis lambda{0};

  static PencilParam inf() { return PencilParam{true, Eis(0)}; }
  static PencilParam finite(Eis l) { return PencilParam{false, std::move(l)}; }

  friend bool operator==(const PencilParam& a, const PencilParam& b) {
    return a.infinity == b.infinity && (a.infinity || a.lambda == b.lambda);
  }
};

inline std::string to_string(const PencilParam& p) {
  return p.infinity ? "lambda = inf" : "lambda = " + to_string(p.lambda);
}

inline TernaryForm<Eis> pencil_member(const PencilParam& p) {
  TernaryForm<Eis> f(3);
  if (p.infinity) {
    f.at(1, 1, 1) = Eis(1);
    return f;
  }
  f.at(3, 0, 0) = Eis(1);
  f.at(0, 3, 0) = Eis(1);
  f.at(0, 0, 3) = Eis(1);
  f.at(1, 1, 1) = p.lambda;
  return f;
}

/// Exact pencil membership: all coefficients outside the cube and x0x1x2
/// slots vanish and the three cube coefficients agree.
inline std::optional<PencilParam> in_pencil(const TernaryForm<Eis>& f) {
  if (f.degree() != 3 || f.is_zero()) return std::nullopt;
  Eis a = f.at(3, 0, 0);
  Eis b = f.at(1, 1, 1);
  for (int i = 0; i < f.size(); ++i) {
    auto e = TernaryForm<Eis>::exponents(3, i);
    bool cube = e[0] == 3 || e[1] == 3 || e[2] == 3;
    bool xyz = e[0] == 1 && e[1] == 1 && e[2] == 1;
    if (cube) {
      if (f[i] != a) return std::nullopt;
    } else if (!xyz && !f[i].is_zero()) {
      return std::nullopt;
    }
  }
  if (a.is_zero()) return b.is_zero() ? std::nullopt : std::optional(PencilParam::inf());
  return PencilParam::finite(b / a);
}

/// Numeric pencil fit: the projection onto the pencil's coefficient span,
/// with the largest leftover coefficient (relative to the largest input
/// coefficient) as residual.
struct PencilFit {
  bool infinity = false;
  CF lambda{0.0};
  double residual = 0.0;
};

inline std::optional<PencilFit> in_pencil(const TernaryForm<CF>& f, double tol = 1e-6) {
  if (f.degree() != 3) return std::nullopt;
  double scale = 0.0;
  for (int i = 0; i < f.size(); ++i) scale = std::max(scale, std::abs(f[i]));
  if (scale == 0.0) return std::nullopt;
  CF a = (f.at(3, 0, 0) + f.at(0, 3, 0) + f.at(0, 0, 3)) / 3.0;
  CF b = f.at(1, 1, 1);
  double res = 0.0;
  for (int i = 0; i < f.size(); ++i) {
    auto e = TernaryForm<CF>::exponents(3, i);
    bool cube = e[0] == 3 || e[1] == 3 || e[2] == 3;
    bool xyz = e[0] == 1 && e[1] == 1 && e[2] == 1;
    if (cube)
      res = std::max(res, std::abs(f[i] - a));
    else if (!xyz)
      res = std::max(res, std::abs(f[i]));
  }
  PencilFit fit;
  fit.residual = res / scale;
  if (fit.residual > tol) return std::nullopt;
  if (std::abs(a) <= tol * scale) {
    fit.infinity = true;
  } else {
    fit.lambda = b / a;
  }
  return fit;
}

}  // namespace cubics
