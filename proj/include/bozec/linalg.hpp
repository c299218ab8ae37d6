#pragma once

// Dense Gaussian elimination over an exact field (Rational or RatFunc).

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace bozec {

template <class F>
using Matrix = std::vector<std::vector<F>>;

namespace detail {
template <class F>
bool is_zero(const F& x) {
  return x == F(0);
}
}  // namespace detail

/// Row-reduces m in place; returns the pivot columns.
template <class F>
std::vector<std::size_t> row_reduce(Matrix<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && detail::is_zero(m[p][c])) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    const F inv = F(1) / m[r][c];
    for (std::size_t k = c; k < cols; ++k) m[r][k] = m[r][k] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || detail::is_zero(m[i][c])) continue;
      const F f = m[i][c];
      for (std::size_t k = c; k < cols; ++k)
        if (!detail::is_zero(m[r][k])) m[i][k] = m[i][k] - f * m[r][k];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class F>
std::size_t rank(Matrix<F> m) {
  return row_reduce(m).size();
}

template <class F>
F determinant(Matrix<F> m) {
  const std::size_t n = m.size();
  F det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && detail::is_zero(m[p][c])) ++p;
    if (p == n) return F(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = F(0) - det;
    }
    det = det * m[c][c];
    const F inv = F(1) / m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (detail::is_zero(m[i][c])) continue;
      const F f = m[i][c] * inv;
      for (std::size_t k = c; k < n; ++k) m[i][k] = m[i][k] - f * m[c][k];
    }
  }
  return det;
}

/// Solves a x = b; nullopt if inconsistent.  Free variables are set to zero.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows ? a[0].size() : 0;
  Matrix<F> m(rows);
  for (std::size_t i = 0; i < rows; ++i) {
    m[i] = a[i];
    m[i].push_back(b[i]);
  }
  auto pivots = row_reduce(m);
  std::vector<F> x(cols, F(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;
    x[pivots[i]] = m[i][cols];
  }
  return x;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  const std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix<F> r(n, std::vector<F>(m, F(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      if (detail::is_zero(a[i][j])) continue;
      for (std::size_t l = 0; l < m; ++l) r[i][l] = r[i][l] + a[i][j] * b[j][l];
    }
  return r;
}

/// Inverse of a square matrix; nullopt if singular.
template <class F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  const std::size_t n = a.size();
  Matrix<F> m(n);
  for (std::size_t i = 0; i < n; ++i) {
    m[i] = a[i];
    for (std::size_t j = 0; j < n; ++j) m[i].push_back(F(i == j ? 1 : 0));
  }
  auto pivots = row_reduce(m);
  if (pivots.size() < n || (n && pivots[n - 1] >= n)) return std::nullopt;
  Matrix<F> r(n);
  for (std::size_t i = 0; i < n; ++i) r[i].assign(m[i].begin() + n, m[i].end());
  return r;
}

}  // namespace bozec
