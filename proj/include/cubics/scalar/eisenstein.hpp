#pragma once

#include <complex>
#include <optional>
#include <string>

#include "cubics/scalar/rational.hpp"

namespace cubics {

/// Complex floating-point scalar.
using CF = std::complex<double>;

/// Element a + b*w of Q(w), where w is a primitive cube root of unity,
/// so w^2 = -1 - w. Components are canonical rationals; equality is
/// componentwise and exact.
struct Eis {
  Rat a{0};
  Rat b{0};

  Eis() = default;
  Eis(Rat ra) : a(std::move(ra)) {}
  Eis(Rat ra, Rat rb) : a(std::move(ra)), b(std::move(rb)) {}
  Eis(int n) : a(n) {}

  static Eis omega() { return Eis(Rat(0), Rat(1)); }

  bool is_zero() const { return a == 0 && b == 0; }
  bool is_rational() const { return b == 0; }

  friend bool operator==(const Eis& x, const Eis& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Eis& x, const Eis& y) { return !(x == y); }

  friend Eis operator+(const Eis& x, const Eis& y) { return Eis(x.a + y.a, x.b + y.b); }
  friend Eis operator-(const Eis& x, const Eis& y) { return Eis(x.a - y.a, x.b - y.b); }
  friend Eis operator-(const Eis& x) { return Eis(-x.a, -x.b); }

  // (a+bw)(c+dw) = ac + (ad+bc)w + bd w^2,  w^2 = -1-w.
  friend Eis operator*(const Eis& x, const Eis& y) {
    Rat bd = x.b * y.b;
    return Eis(x.a * y.a - bd, x.a * y.b + x.b * y.a - bd);
  }

  Eis& operator+=(const Eis& y) { return *this = *this + y; }
  Eis& operator-=(const Eis& y) { return *this = *this - y; }
  Eis& operator*=(const Eis& y) { return *this = *this * y; }
};

/// Galois conjugate: w -> w^2, i.e. a + bw -> (a-b) - bw.
inline Eis conj(const Eis& x) { return Eis(x.a - x.b, -x.b); }

/// Field norm x * conj(x) = a^2 - ab + b^2 (nonnegative, 0 iff x = 0).
inline Rat norm(const Eis& x) { return x.a * x.a - x.a * x.b + x.b * x.b; }

inline Eis inverse(const Eis& x) {
  if (x.is_zero()) throw DivisionByZero();
  Rat n = norm(x);
  Eis c = conj(x);
  return Eis(c.a / n, c.b / n);
}

inline Eis operator/(const Eis& x, const Eis& y) { return x * inverse(y); }

/// Embedding into C with w -> (-1 + i*sqrt(3))/2.
inline CF embed(const Eis& x) {
  static const double half_sqrt3 = 0.8660254037844386467637231707529362;
  double bd = static_cast<double>(x.b);
  return CF(static_cast<double>(x.a) - 0.5 * bd, half_sqrt3 * bd);
}

inline CF embed(const Rat& x) { return CF(static_cast<double>(x), 0.0); }

/// Square root in Q(w), or nullopt when none exists in the field.
/// Solves (u + vw)^2 = a + bw, i.e. u^2 - v^2 = a and v(2u - v) = b.
inline std::optional<Eis> eis_sqrt(const Eis& x) {
  if (x.is_zero()) return Eis(0);
  if (x.b == 0) {
    if (auto u = rat_sqrt(x.a)) return Eis(*u);
    // v = 2u branch: -3u^2 = a.
    if (auto u = rat_sqrt(-x.a / 3)) return Eis(*u, 2 * *u);
    return std::nullopt;
  }
  // v != 0, u = (b + v^2) / (2v); substituting gives 3t^2 + (4a-2b)t - b^2 = 0
  // for t = v^2.
  Rat A = 3, B = 4 * x.a - 2 * x.b, C = -x.b * x.b;
  auto disc = rat_sqrt(B * B - 4 * A * C);
  if (!disc) return std::nullopt;
  for (int sign : {+1, -1}) {
    Rat t = (-B + sign * *disc) / (2 * A);
    if (t < 0) continue;
    auto v = rat_sqrt(t);
    if (!v || *v == 0) continue;
    Rat u = (x.b + t) / (2 * *v);
    Eis r(u, *v);
    if (r * r == x) return r;
  }
  return std::nullopt;
}

/// Recognize a complex double as an element of Q(w) with small denominators;
/// the caller must verify the result exactly.
inline std::optional<Eis> eis_reconstruct(CF z, const Int& den_cap = Int(1000000),
                                          double tol = 1e-7) {
  static const double inv_half_sqrt3 = 1.1547005383792515290182975610039149;
  double vb = z.imag() * inv_half_sqrt3;
  double ua = z.real() + 0.5 * vb;
  auto a = rat_reconstruct(ua, den_cap, tol);
  auto b = rat_reconstruct(vb, den_cap, tol);
  if (!a || !b) return std::nullopt;
  return Eis(*a, *b);
}

/// Cube root in Q(w), or nullopt. Candidates are recognized from the three
/// floating-point cube roots and verified exactly.
inline std::optional<Eis> eis_cbrt(const Eis& x) {
  if (x.is_zero()) return Eis(0);
  if (x.b == 0) {
    if (auto r = rat_cbrt(x.a)) return Eis(*r);
  }
  CF z = embed(x);
  double r = std::cbrt(std::abs(z));
  double phi = std::arg(z) / 3.0;
  for (int k = 0; k < 3; ++k) {
    CF root = std::polar(r, phi + k * 2.0943951023931954923084289221863353);
    if (auto c = eis_reconstruct(root)) {
      if (*c * *c * *c == x) return *c;
    }
  }
  return std::nullopt;
}

inline std::string to_string(const Eis& x) {
  if (x.b == 0) return to_string(x.a);
  std::string wpart = (abs(x.b) == 1) ? "w" : to_string(Rat(abs(x.b))) + "*w";
  if (x.a == 0) return (x.b < 0 ? "-" : "") + wpart;
  return to_string(x.a) + (x.b < 0 ? " - " : " + ") + wpart;
}

}  // namespace cubics
