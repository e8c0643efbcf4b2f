#pragma once

#include <array>
#include <cctype>
#include <string>
#include <vector>

#include "cubics/errors.hpp"

namespace cubics {

/// Element of the field with three elements.
struct F3 {
  int r = 0;  // 0, 1 or 2

  F3() = default;
  F3(int v) : r(((v % 3) + 3) % 3) {}

  friend F3 operator+(F3 a, F3 b) { return F3(a.r + b.r); }
  friend F3 operator-(F3 a, F3 b) { return F3(a.r - b.r); }
  friend F3 operator*(F3 a, F3 b) { return F3(a.r * b.r); }
  friend F3 operator-(F3 a) { return F3(-a.r); }
  friend bool operator==(F3 a, F3 b) { return a.r == b.r; }
  friend bool operator!=(F3 a, F3 b) { return a.r != b.r; }
};

using PointF3 = std::array<F3, 2>;

inline int point_index(PointF3 p) { return 3 * p[0].r + p[1].r; }
inline PointF3 point_at(int idx) { return {F3(idx / 3), F3(idx % 3)}; }

/// Three pairwise distinct points are collinear iff their differences are
/// linearly dependent over F3.
inline bool collinear_f3(PointF3 a, PointF3 b, PointF3 c) {
  F3 d = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return d == F3(0);
}

/// The twelve affine lines of AG(2,3), each as a sorted triple of point
/// indices.
inline std::vector<std::array<int, 3>> ag23_lines() {
  std::vector<std::array<int, 3>> lines;
  for (int a = 0; a < 9; ++a)
    for (int b = a + 1; b < 9; ++b) {
      PointF3 u = point_at(a), v = point_at(b);
      // third point: u + 2(v - u) = 2(u + v)
      PointF3 w{F3(2) * (u[0] + v[0]), F3(2) * (u[1] + v[1])};
      int c = point_index(w);
      if (c > b) lines.push_back({a, b, c});
    }
  return lines;
}

/// Affine map x -> A x + t of F3^2.
struct AffMap3 {
  std::array<std::array<F3, 2>, 2> a{};
  std::array<F3, 2> t{};

  static AffMap3 identity() {
    AffMap3 m;
    m.a[0][0] = m.a[1][1] = F3(1);
    return m;
  }

  F3 det() const { return a[0][0] * a[1][1] - a[0][1] * a[1][0]; }

  PointF3 apply(PointF3 p) const {
    return {a[0][0] * p[0] + a[0][1] * p[1] + t[0], a[1][0] * p[0] + a[1][1] * p[1] + t[1]};
  }

  friend AffMap3 operator*(const AffMap3& f, const AffMap3& g) {
    AffMap3 r;
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        r.a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
            f.a[static_cast<std::size_t>(i)][0] * g.a[0][static_cast<std::size_t>(j)] +
            f.a[static_cast<std::size_t>(i)][1] * g.a[1][static_cast<std::size_t>(j)];
    PointF3 ts = f.apply(g.t);
    r.t = ts;
    return r;
  }

  friend bool operator==(const AffMap3& f, const AffMap3& g) { return f.a == g.a && f.t == g.t; }
  friend bool operator!=(const AffMap3& f, const AffMap3& g) { return !(f == g); }
};

inline std::string to_string(const AffMap3& m) {
  auto d = [](F3 x) { return std::to_string(x.r); };
  return "[[" + d(m.a[0][0]) + "," + d(m.a[0][1]) + "],[" + d(m.a[1][0]) + "," + d(m.a[1][1]) +
         "]] + (" + d(m.t[0]) + "," + d(m.t[1]) + ")";
}

/// Parses the affine-map syntax produced by to_string:
/// [[a,b],[c,d]] + (t1,t2), with digits taken mod 3.
inline AffMap3 parse_affmap(const std::string& text) {
  std::string s;
  for (char c : text)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  std::vector<F3> vals;
  std::string shape;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (std::isdigit(static_cast<unsigned char>(s[i]))) {
      vals.push_back(F3(s[i] - '0'));
      shape += '#';
    } else {
      shape += s[i];
    }
  }
  if (shape != "[[#,#],[#,#]]+(#,#)" || vals.size() != 6)
    throw ParseError("expected an affine map like [[1,0],[0,1]] + (2,1)", 0);
  AffMap3 m;
  m.a = {{{vals[0], vals[1]}, {vals[2], vals[3]}}};
  m.t = {vals[4], vals[5]};
  return m;
}

}  // namespace cubics
