#pragma once

#include <random>

#include "cubics/poly/ternary_form.hpp"

namespace cubics {

/// Random element of SL3(Z) as a product of elementary shears; entries stay
/// small for the default number of steps.
inline Mat3<Eis> random_unimodular_int(std::mt19937_64& rng, int steps = 6, int bound = 2) {
  std::uniform_int_distribution<int> pick(0, 2);
  std::uniform_int_distribution<int> amount(-bound, bound);
  Mat3<Eis> m = Mat3<Eis>::identity();
  for (int s = 0; s < steps; ++s) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    int k = amount(rng);
    Mat3<Eis> e = Mat3<Eis>::identity();
    e[i][j] = Eis(k);
    m = m * e;
  }
  return m;
}

inline TernaryForm<Eis> random_int_cubic(std::mt19937_64& rng, int bound = 4) {
  std::uniform_int_distribution<int> coeff(-bound, bound);
  TernaryForm<Eis> f(3);
  bool nonzero = false;
  while (!nonzero) {
    for (int i = 0; i < f.size(); ++i) {
      int c = coeff(rng);
      f[i] = Eis(c);
      nonzero = nonzero || c != 0;
    }
  }
  return f;
}

/// Random complex 3x3 matrix rescaled to determinant 1, with a bounded
/// condition number so that double-precision flex computations on the
/// transformed cubic stay meaningful.
inline Mat3<CF> random_complex_unimodular(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  auto frob = [](const Mat3<CF>& m) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) s += std::norm(m[i][j]);
    return std::sqrt(s);
  };
  while (true) {
    Mat3<CF> m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = CF(u(rng), u(rng));
    CF d = det(m);
    if (std::abs(d) < 0.2) continue;
    CF scale = std::pow(d, -1.0 / 3.0);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m[i][j] = scale * m[i][j];
    if (frob(m) * frob(inverse(m)) > 15.0) continue;
    return m;
  }
}

}  // namespace cubics
