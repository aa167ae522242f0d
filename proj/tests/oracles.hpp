#pragma once

// Slow, independent reference computations for the test suites. Nothing here
// calls into the library's elimination or Smith form code.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include <gmpxx.h>

#include "chipfire/combinations.hpp"
#include "chipfire/matrix.hpp"

namespace oracle {

using chipfire::GaussInt;
using chipfire::GaussMatrix;
using chipfire::GaussVec;
using chipfire::Int;
using chipfire::IntMatrix;
using chipfire::IntVector;

/// Cofactor expansion along the first row.
inline Int laplace_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t j = 0, jj = 0; j < n; ++j)
        if (j != c) minor(i - 1, jj++) = m(i, j);
    Int term = m(0, c) * laplace_det(minor);
    if (c % 2) total -= term;
    else total += term;
  }
  return total;
}

/// Invariant factors via determinantal divisors: d_k = Δ_k / Δ_{k−1}, where Δ_k
/// is the gcd of all k×k minors. Returns min(rows, cols) entries (0 past the rank).
inline IntVector determinantal_snf(const IntMatrix& m) {
  const std::size_t kmax = std::min(m.rows(), m.cols());
  IntVector out;
  Int prev = 1;
  for (std::size_t k = 1; k <= kmax; ++k) {
    Int g = 0;
    chipfire::detail::for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
      chipfire::detail::for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
        g = gcd(g, laplace_det(m.submatrix(rows, cols)));
        return true;
      });
      return true;
    });
    if (g == 0) {
      out.resize(kmax, 0);
      return out;
    }
    out.push_back(Int(g / prev));
    prev = g;
  }
  return out;
}

/// Complex rational a + b·i.
struct QI {
  mpq_class re;
  mpq_class im;
};

inline QI mul(const QI& x, const QI& y) {
  return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
}
inline QI sub(const QI& x, const QI& y) { return {x.re - y.re, x.im - y.im}; }
inline QI div(const QI& x, const QI& y) {
  const mpq_class n = y.re * y.re + y.im * y.im;
  return {(x.re * y.re + x.im * y.im) / n, (x.im * y.re - x.re * y.im) / n};
}
inline bool is_zero(const QI& x) { return x.re == 0 && x.im == 0; }

/// Gauss–Jordan over ℚ(i), then an integrality check. nullopt if singular or
/// the unique solution is not in ℤ[i]ⁿ. `singular` reports which case occurred.
inline std::optional<GaussVec> rational_gauss_solve(const GaussMatrix& m, const GaussVec& b,
                                                    bool* singular = nullptr) {
  const std::size_t n = m.rows();
  std::vector<std::vector<QI>> a(n, std::vector<QI>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) a[i][j] = {mpq_class(m(i, j).re), mpq_class(m(i, j).im)};
    a[i][n] = {mpq_class(b[i].re), mpq_class(b[i].im)};
  }
  if (singular) *singular = false;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t p = col;
    while (p < n && is_zero(a[p][col])) ++p;
    if (p == n) {
      if (singular) *singular = true;
      return std::nullopt;
    }
    std::swap(a[p], a[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || is_zero(a[i][col])) continue;
      const QI f = div(a[i][col], a[col][col]);
      for (std::size_t j = col; j <= n; ++j) a[i][j] = sub(a[i][j], mul(f, a[col][j]));
    }
  }
  GaussVec x(n);
  for (std::size_t i = 0; i < n; ++i) {
    const QI v = div(a[i][n], a[i][i]);
    if (v.re.get_den() != 1 || v.im.get_den() != 1) return std::nullopt;
    x[i] = GaussInt(Int(v.re.get_num()), Int(v.im.get_num()));
  }
  return x;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, long lo,
                               long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline IntVector random_vector(std::mt19937_64& rng, std::size_t n, long lo, long hi) {
  std::uniform_int_distribution<long> dist(lo, hi);
  IntVector v(n);
  for (auto& x : v) x = dist(rng);
  return v;
}

}  // namespace oracle
