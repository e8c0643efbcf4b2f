#pragma once

#include <utility>
#include <vector>

#include "cubics/scalar/traits.hpp"

namespace cubics {

/// Dense univariate polynomial over an exact field, coefficients ascending.
/// The zero polynomial has an empty coefficient vector and degree -1.
template <class K>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }
  static UPoly constant(const K& k) { return UPoly(std::vector<K>{k}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<K>& coeffs() const { return c_; }
  const K& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  K coeff(int i) const {
    return (i >= 0 && i <= degree()) ? c_[static_cast<std::size_t>(i)] : scalar_traits<K>::zero();
  }
  const K& lc() const { return c_.back(); }

  friend bool operator==(const UPoly& f, const UPoly& g) { return f.c_ == g.c_; }
  friend bool operator!=(const UPoly& f, const UPoly& g) { return !(f == g); }

  friend UPoly operator+(const UPoly& f, const UPoly& g) {
    std::vector<K> r(std::max(f.c_.size(), g.c_.size()), scalar_traits<K>::zero());
    for (std::size_t i = 0; i < f.c_.size(); ++i) r[i] = r[i] + f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r[i] = r[i] + g.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& f, const UPoly& g) {
    std::vector<K> r(std::max(f.c_.size(), g.c_.size()), scalar_traits<K>::zero());
    for (std::size_t i = 0; i < f.c_.size(); ++i) r[i] = r[i] + f.c_[i];
    for (std::size_t i = 0; i < g.c_.size(); ++i) r[i] = r[i] - g.c_[i];
    return UPoly(std::move(r));
  }
  friend UPoly operator-(const UPoly& f) {
    std::vector<K> r = f.c_;
    for (auto& x : r) x = -x;
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) return UPoly();
    std::vector<K> r(f.c_.size() + g.c_.size() - 1, scalar_traits<K>::zero());
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
      if (scalar_traits<K>::is_zero(f.c_[i])) continue;
      for (std::size_t j = 0; j < g.c_.size(); ++j) r[i + j] = r[i + j] + f.c_[i] * g.c_[j];
    }
    return UPoly(std::move(r));
  }
  friend UPoly operator*(const K& k, const UPoly& f) {
    std::vector<K> r = f.c_;
    for (auto& x : r) x = k * x;
    return UPoly(std::move(r));
  }

  K eval(const K& x) const {
    K acc = scalar_traits<K>::zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  UPoly derivative() const {
    if (degree() < 1) return UPoly();
    std::vector<K> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = K(static_cast<int>(i)) * c_[i];
    return UPoly(std::move(r));
  }

  UPoly monic() const {
    if (is_zero()) return *this;
    return scalar_traits<K>::inverse(lc()) * *this;
  }

  /// Quotient and remainder; the divisor must be nonzero.
  friend std::pair<UPoly, UPoly> divmod(const UPoly& f, const UPoly& g) {
    UPoly q, r = f;
    K glc_inv = scalar_traits<K>::inverse(g.lc());
    std::vector<K> qc(f.degree() >= g.degree() ? static_cast<std::size_t>(f.degree() - g.degree() + 1) : 0,
                      scalar_traits<K>::zero());
    while (!r.is_zero() && r.degree() >= g.degree()) {
      int shift = r.degree() - g.degree();
      K factor = r.lc() * glc_inv;
      qc[static_cast<std::size_t>(shift)] = factor;
      std::vector<K> sub(static_cast<std::size_t>(r.degree() + 1), scalar_traits<K>::zero());
      for (int i = 0; i <= g.degree(); ++i) sub[static_cast<std::size_t>(i + shift)] = factor * g[i];
      r = r - UPoly(std::move(sub));
    }
    return {UPoly(std::move(qc)), r};
  }

  friend UPoly operator%(const UPoly& f, const UPoly& g) { return divmod(f, g).second; }
  friend UPoly operator/(const UPoly& f, const UPoly& g) { return divmod(f, g).first; }

 private:
  void trim() {
    while (!c_.empty() && scalar_traits<K>::is_zero(c_.back())) c_.pop_back();
  }
  std::vector<K> c_;
};

/// Monic gcd via the Euclidean algorithm.
template <class K>
UPoly<K> gcd(UPoly<K> a, UPoly<K> b) {
  while (!b.is_zero()) {
    UPoly<K> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

/// Extended gcd: returns (g, s) with s*a = g (mod m), g monic.
template <class K>
std::pair<UPoly<K>, UPoly<K>> ext_gcd_mod(const UPoly<K>& a, const UPoly<K>& m) {
  UPoly<K> r0 = m, r1 = a % m;
  UPoly<K> s0, s1 = UPoly<K>::constant(scalar_traits<K>::one());
  while (!r1.is_zero()) {
    auto [q, r2] = divmod(r0, r1);
    UPoly<K> s2 = s0 - q * s1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.is_zero()) return {r0, s0};
  K inv = scalar_traits<K>::inverse(r0.lc());
  return {inv * r0, (inv * s0) % m};
}

template <class K>
UPoly<K> squarefree_part(const UPoly<K>& f) {
  if (f.degree() < 1) return f.monic();
  UPoly<K> g = gcd(f, f.derivative());
  return (f / g).monic();
}

}  // namespace cubics
