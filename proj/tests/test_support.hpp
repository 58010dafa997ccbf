#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "zsum/rational.hpp"

// Small helpers shared by the brute-force oracles in the test suite.
namespace test_support {

// Gaussian elimination over rationals; nullopt when the system is singular.
inline std::optional<std::vector<zsum::Rational>> solve_square(
    std::vector<std::vector<zsum::Rational>> a, std::vector<zsum::Rational> b) {
  using zsum::Rational;
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(a[piv], a[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col].is_zero()) continue;
      Rational f = a[i][col] / a[col][col];
      for (std::size_t j = col; j < n; ++j) a[i][j] -= f * a[col][j];
      b[i] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
  return x;
}

// Invokes fn(indices) for every ascending k-subset of {0, ..., m-1}.
template <typename Fn>
void for_each_combination(std::size_t m, std::size_t k, Fn&& fn) {
  if (k > m) return;
  std::vector<std::size_t> pick(k);
  for (std::size_t j = 0; j < k; ++j) pick[j] = j;
  for (;;) {
    fn(static_cast<const std::vector<std::size_t>&>(pick));
    std::size_t j = k;
    while (j > 0 && pick[j - 1] == m - k + (j - 1)) --j;
    if (j == 0) break;
    ++pick[j - 1];
    for (std::size_t t = j; t < k; ++t) pick[t] = pick[t - 1] + 1;
  }
}

}  // namespace test_support
