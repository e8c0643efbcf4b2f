#pragma once

#include <array>
#include <cassert>
#include <vector>

#include "cubics/poly/mat3.hpp"

namespace cubics {

/// Homogeneous form in x0, x1, x2 of a fixed (runtime) degree, stored densely
/// with monomials in descending lexicographic exponent order, e.g. for
/// degree 3: (3,0,0), (2,1,0), (2,0,1), (1,2,0), (1,1,1), (1,0,2), (0,3,0),
/// (0,2,1), (0,1,2), (0,0,3).
template <class S>
class TernaryForm {
 public:
  explicit TernaryForm(int degree = 0)
      : deg_(degree), c_(static_cast<std::size_t>(coeff_count(degree)), scalar_traits<S>::zero()) {
    assert(degree >= 0);
  }

  static int coeff_count(int degree) { return (degree + 1) * (degree + 2) / 2; }

  static int index_of(int degree, int i0, int i1) {
    int k = degree - i0;
    return k * (k + 1) / 2 + (k - i1);
  }

  /// Exponents of the monomial at a given index.
  static std::array<int, 3> exponents(int degree, int index) {
    int k = 0;
    while ((k + 1) * (k + 2) / 2 <= index) ++k;
    int i1 = k - (index - k * (k + 1) / 2);
    return {degree - k, i1, degree - (degree - k) - i1};
  }

  static TernaryForm monomial(int degree, int i0, int i1, int i2, const S& coeff) {
    assert(i0 + i1 + i2 == degree);
    TernaryForm f(degree);
    f.at(i0, i1, i2) = coeff;
    return f;
  }

  int degree() const { return deg_; }
  int size() const { return static_cast<int>(c_.size()); }

  const S& operator[](int i) const { return c_[static_cast<std::size_t>(i)]; }
  S& operator[](int i) { return c_[static_cast<std::size_t>(i)]; }

  S& at(int i0, int i1, int i2) {
    assert(i0 >= 0 && i1 >= 0 && i2 >= 0 && i0 + i1 + i2 == deg_);
    (void)i2;
    return c_[static_cast<std::size_t>(index_of(deg_, i0, i1))];
  }
  const S& at(int i0, int i1, int i2) const {
    assert(i0 >= 0 && i1 >= 0 && i2 >= 0 && i0 + i1 + i2 == deg_);
    (void)i2;
    return c_[static_cast<std::size_t>(index_of(deg_, i0, i1))];
  }

  bool is_zero() const {
    for (const S& x : c_)
      if (!scalar_traits<S>::is_zero(x)) return false;
    return true;
  }

  friend bool operator==(const TernaryForm& f, const TernaryForm& g) {
    return f.deg_ == g.deg_ && f.c_ == g.c_;
  }
  friend bool operator!=(const TernaryForm& f, const TernaryForm& g) { return !(f == g); }

  friend TernaryForm operator+(const TernaryForm& f, const TernaryForm& g) {
    assert(f.deg_ == g.deg_);
    TernaryForm r(f.deg_);
    for (int i = 0; i < r.size(); ++i) r[i] = f[i] + g[i];
    return r;
  }
  friend TernaryForm operator-(const TernaryForm& f, const TernaryForm& g) {
    assert(f.deg_ == g.deg_);
    TernaryForm r(f.deg_);
    for (int i = 0; i < r.size(); ++i) r[i] = f[i] - g[i];
    return r;
  }
  friend TernaryForm operator-(const TernaryForm& f) {
    TernaryForm r(f.deg_);
    for (int i = 0; i < r.size(); ++i) r[i] = -f[i];
    return r;
  }
  friend TernaryForm operator*(const S& c, const TernaryForm& f) {
    TernaryForm r(f.deg_);
    for (int i = 0; i < r.size(); ++i) r[i] = c * f[i];
    return r;
  }

  friend TernaryForm operator*(const TernaryForm& f, const TernaryForm& g) {
    TernaryForm r(f.deg_ + g.deg_);
    for (int i = 0; i < f.size(); ++i) {
      if (scalar_traits<S>::is_zero(f[i])) continue;
      auto ei = exponents(f.deg_, i);
      for (int j = 0; j < g.size(); ++j) {
        if (scalar_traits<S>::is_zero(g[j])) continue;
        auto ej = exponents(g.deg_, j);
        int idx = index_of(r.deg_, ei[0] + ej[0], ei[1] + ej[1]);
        r[idx] = r[idx] + f[i] * g[j];
      }
    }
    return r;
  }

  S eval(const std::array<S, 3>& p) const {
    S acc = scalar_traits<S>::zero();
    for (int i = 0; i < size(); ++i) {
      if (scalar_traits<S>::is_zero(c_[static_cast<std::size_t>(i)])) continue;
      auto e = exponents(deg_, i);
      S term = c_[static_cast<std::size_t>(i)];
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) term = term * p[static_cast<std::size_t>(v)];
      acc = acc + term;
    }
    return acc;
  }

  TernaryForm derivative(int var) const {
    assert(deg_ >= 1 && var >= 0 && var < 3);
    TernaryForm r(deg_ - 1);
    for (int i = 0; i < size(); ++i) {
      auto e = exponents(deg_, i);
      int ev = e[static_cast<std::size_t>(var)];
      if (ev == 0 || scalar_traits<S>::is_zero(c_[static_cast<std::size_t>(i)])) continue;
      e[static_cast<std::size_t>(var)] -= 1;
      int idx = index_of(r.deg_, e[0], e[1]);
      r[idx] = r[idx] + S(ev) * c_[static_cast<std::size_t>(i)];
    }
    return r;
  }

  /// Composition with a linear change of variables: returns f(A x).
  TernaryForm substitute(const Mat3<S>& a) const {
    std::array<TernaryForm, 3> lin;
    for (int i = 0; i < 3; ++i) {
      TernaryForm l(1);
      for (int j = 0; j < 3; ++j) l[j] = a[i][j];
      lin[static_cast<std::size_t>(i)] = l;
    }
    TernaryForm r(deg_);
    for (int i = 0; i < size(); ++i) {
      if (scalar_traits<S>::is_zero(c_[static_cast<std::size_t>(i)])) continue;
      auto e = exponents(deg_, i);
      TernaryForm term(0);
      term[0] = c_[static_cast<std::size_t>(i)];
      for (int v = 0; v < 3; ++v)
        for (int k = 0; k < e[static_cast<std::size_t>(v)]; ++k) term = term * lin[static_cast<std::size_t>(v)];
      r = r + term;
    }
    return r;
  }

 private:
  int deg_;
  std::vector<S> c_;
};

template <class S>
using TernaryCubic = TernaryForm<S>;

inline TernaryForm<CF> embed(const TernaryForm<Eis>& f) {
  TernaryForm<CF> r(f.degree());
  for (int i = 0; i < f.size(); ++i) r[i] = embed(f[i]);
  return r;
}

/// f evaluated at c*p equals c^deg * f(p); fixing proportional scaling is the
/// caller's business. Convenience for degree-1 forms as lines etc.
template <class S>
TernaryForm<S> linear_form(const S& c0, const S& c1, const S& c2) {
  TernaryForm<S> l(1);
  l[0] = c0;
  l[1] = c1;
  l[2] = c2;
  return l;
}

}  // namespace cubics
