#pragma once

#include <cmath>
#include <complex>

#include "cubics/scalar/eisenstein.hpp"

namespace cubics {

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Eis> {
  static constexpr bool exact = true;
  static Eis zero() { return Eis(0); }
  static Eis one() { return Eis(1); }
  static bool is_zero(const Eis& x) { return x.is_zero(); }
  /// Used for zero tests that must be tolerant for floating scalars;
  /// for exact scalars the scale is ignored.
  static bool negligible(const Eis& x, double /*scale*/) { return x.is_zero(); }
  /// Magnitude used only to pick pivots.
  static double magnitude(const Eis& x) { return std::abs(embed(x)); }
  static Eis inverse(const Eis& x) { return cubics::inverse(x); }
};

template <>
struct scalar_traits<CF> {
  static constexpr bool exact = false;
  static CF zero() { return CF(0.0, 0.0); }
  static CF one() { return CF(1.0, 0.0); }
  static bool is_zero(const CF& x) { return x == CF(0.0, 0.0); }
  static bool negligible(const CF& x, double scale) {
    return std::abs(x) <= 1e-12 * (scale > 0 ? scale : 1.0);
  }
  static double magnitude(const CF& x) { return std::abs(x); }
  static CF inverse(const CF& x) {
    if (x == CF(0.0, 0.0)) throw DivisionByZero();
    return CF(1.0, 0.0) / x;
  }
};

template <>
struct scalar_traits<Rat> {
  static constexpr bool exact = true;
  static Rat zero() { return Rat(0); }
  static Rat one() { return Rat(1); }
  static bool is_zero(const Rat& x) { return x == 0; }
  static bool negligible(const Rat& x, double) { return x == 0; }
  static double magnitude(const Rat& x) { return std::abs(static_cast<double>(x)); }
  static Rat inverse(const Rat& x) {
    if (x == 0) throw DivisionByZero();
    return 1 / x;
  }
};

}  // namespace cubics
