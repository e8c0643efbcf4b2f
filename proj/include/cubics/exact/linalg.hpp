#pragma once

#include <optional>
#include <vector>

#include "cubics/scalar/traits.hpp"

namespace cubics {

template <class S>
using Matrix = std::vector<std::vector<S>>;

/// Reduced row echelon form in place; returns pivot column per pivot row.
template <class S>
std::vector<int> rref(Matrix<S>& a) {
  using T = scalar_traits<S>;
  std::vector<int> pivots;
  if (a.empty()) return pivots;
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int best = -1;
    double best_mag = 0.0;
    for (int i = r; i < rows; ++i) {
      if (!T::is_zero(a[i][c])) {
        double mag = T::magnitude(a[i][c]);
        if (best < 0 || mag > best_mag) {
          best = i;
          best_mag = mag;
        }
      }
    }
    if (best < 0) continue;
    std::swap(a[r], a[best]);
    S inv = T::inverse(a[r][c]);
    for (int j = c; j < cols; ++j) a[r][j] = inv * a[r][j];
    for (int i = 0; i < rows; ++i) {
      if (i == r || T::is_zero(a[i][c])) continue;
      S f = a[i][c];
      for (int j = c; j < cols; ++j) a[i][j] = a[i][j] - f * a[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class S>
int rank(Matrix<S> a) {
  return static_cast<int>(rref(a).size());
}

/// Basis of the right kernel of a (each vector has a.cols entries).
template <class S>
std::vector<std::vector<S>> kernel(Matrix<S> a) {
  using T = scalar_traits<S>;
  if (a.empty()) return {};
  int cols = static_cast<int>(a[0].size());
  std::vector<int> pivots = rref(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<S>> basis;
  for (int free = 0; free < cols; ++free) {
    if (is_pivot[static_cast<std::size_t>(free)]) continue;
    std::vector<S> v(static_cast<std::size_t>(cols), T::zero());
    v[static_cast<std::size_t>(free)] = T::one();
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = -a[r][static_cast<std::size_t>(free)];
    basis.push_back(std::move(v));
  }
  return basis;
}

/// One solution of A x = b, or nullopt when inconsistent.
template <class S>
std::optional<std::vector<S>> solve(Matrix<S> a, std::vector<S> b) {
  using T = scalar_traits<S>;
  int rows = static_cast<int>(a.size());
  if (rows == 0) return std::vector<S>{};
  int cols = static_cast<int>(a[0].size());
  for (int i = 0; i < rows; ++i) a[static_cast<std::size_t>(i)].push_back(b[static_cast<std::size_t>(i)]);
  std::vector<int> pivots = rref(a);
  // Inconsistent iff a pivot lands in the appended column.
  if (!pivots.empty() && pivots.back() == cols) return std::nullopt;
  std::vector<S> x(static_cast<std::size_t>(cols), T::zero());
  for (std::size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<std::size_t>(pivots[r])] = a[r][static_cast<std::size_t>(cols)];
  return x;
}

}  // namespace cubics
