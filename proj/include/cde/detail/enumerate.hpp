#pragma once

#include <cstddef>
#include <numeric>
#include <span>
#include <vector>

#include "cde/field.hpp"
#include "cde/kernels.hpp"

namespace cde::detail {

/// Calls fn(indices) for every r-subset of {0..n-1} in lexicographic order
/// until fn returns false.  Returns false iff stopped early.
template <typename Fn>
bool for_each_combination(std::size_t n, std::size_t r, Fn&& fn) {
  if (r > n) return true;
  std::vector<std::size_t> pick(r);
  std::iota(pick.begin(), pick.end(), std::size_t{0});
  while (true) {
    if (!fn(std::span<const std::size_t>(pick))) return false;
    std::size_t t = r;
    while (t > 0 && pick[t - 1] == n - r + t - 1) --t;
    if (t == 0) return true;
    ++pick[t - 1];
    for (std::size_t u = t; u < r; ++u) pick[u] = pick[u - 1] + 1;
  }
}

/// Visits every message m in GF(q)^rows (zero first, then odometer order with
/// digit 0 fastest) together with its codeword m * generator, until fn
/// returns false.  Each odometer step adds one generator row: a digit moving
/// v -> v+1 adds that row once, and a wrap q-1 -> 0 is also one addition
/// since q copies of a row sum to zero.
template <typename Fn>
bool for_each_codeword(const Matrix& generator, Fn&& fn) {
  const Symbol q = generator.field().modulus();
  const std::size_t rows = generator.rows();
  std::vector<Symbol> message(rows, 0);
  std::vector<Symbol> codeword(generator.cols(), 0);
  while (true) {
    if (!fn(std::span<const Symbol>(message), std::span<const Symbol>(codeword))) return false;
    std::size_t t = 0;
    for (; t < rows; ++t) {
      kernels::add_mod(codeword, generator.row(t), q);
      if (++message[t] < q) break;
      message[t] = 0;
    }
    if (t == rows) return true;
  }
}

}  // namespace cde::detail
