#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <optional>
#include <sstream>
#include <string>

#include "cubics/errors.hpp"

namespace cubics {

using Int = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational, always reduced, denominator > 0.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& r) { return numerator(r); }
inline Int den(const Rat& r) { return denominator(r); }

inline bool is_integer(const Rat& r) { return den(r) == 1; }

inline std::string to_string(const Rat& r) {
  std::ostringstream os;
  os << r;
  return os.str();
}

/// Exact integer square root, or nullopt when n is not a perfect square.
inline std::optional<Int> int_sqrt(const Int& n) {
  if (n < 0) return std::nullopt;
  Int s = boost::multiprecision::sqrt(n);
  if (s * s != n) return std::nullopt;
  return s;
}

/// Exact nonnegative square root in Q, or nullopt.
inline std::optional<Rat> rat_sqrt(const Rat& r) {
  if (r < 0) return std::nullopt;
  auto n = int_sqrt(num(r));
  if (!n) return std::nullopt;
  auto d = int_sqrt(den(r));
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

/// Best rational approximation of x with denominator <= den_cap, via
/// continued fractions. Returns nullopt for values that are not close to
/// any such rational (within tol) or are non-finite.
inline std::optional<Rat> rat_reconstruct(double x, const Int& den_cap = Int(1000000000),
                                          double tol = 1e-9) {
  if (!std::isfinite(x)) return std::nullopt;
  Rat best;
  double rem = x;
  Int h0 = 0, h1 = 1, k0 = 1, k1 = 0;  // convergents
  for (int it = 0; it < 64; ++it) {
    if (!std::isfinite(rem) || std::abs(rem) > 1e18) break;
    double fl = std::floor(rem);
    Int ai(static_cast<long long>(fl));
    Int h2 = ai * h1 + h0, k2 = ai * k1 + k0;
    if (k2 > den_cap) break;
    h0 = h1; h1 = h2; k0 = k1; k1 = k2;
    best = Rat(h1, k1);
    double err = std::abs(static_cast<double>(best) - x);
    if (err <= tol * std::max(1.0, std::abs(x))) return best;
    double frac = rem - fl;
    if (frac < 1e-15) break;
    rem = 1.0 / frac;
  }
  return std::nullopt;
}

/// Exact cube root in Q, or nullopt.
inline std::optional<Rat> rat_cbrt(const Rat& r) {
  auto icbrt = [](const Int& n) -> std::optional<Int> {
    if (n == 0) return Int(0);
    Int a = abs(n);
    // Newton iteration on integers, then exact check.
    Int x = Int(1) << (static_cast<unsigned>(msb(a)) / 3 + 1);
    while (true) {
      Int nx = (2 * x + a / (x * x)) / 3;
      if (nx >= x) break;
      x = nx;
    }
    while (x * x * x > a) --x;
    if (x * x * x != a) return std::nullopt;
    return n < 0 ? -x : x;
  };
  auto n = icbrt(num(r));
  if (!n) return std::nullopt;
  auto d = icbrt(den(r));
  if (!d) return std::nullopt;
  return Rat(*n, *d);
}

}  // namespace cubics
