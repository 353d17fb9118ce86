#include <cassert>

#include "cde/kernels.hpp"

namespace cde::kernels::scalar {

void add_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol q) {
  assert(acc.size() == row.size());
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const Symbol s = acc[i] + row[i];  // < 2^32 since both < 2^31
    acc[i] = s >= q ? s - q : s;
  }
}

void axpy_mod(std::span<Symbol> acc, std::span<const Symbol> row, Symbol coeff, Symbol q) {
  assert(acc.size() == row.size());
  if (coeff == 0) return;
  for (std::size_t i = 0; i < acc.size(); ++i) {
    const std::uint64_t t = static_cast<std::uint64_t>(coeff) * row[i] + acc[i];
    acc[i] = static_cast<Symbol>(t % q);
  }
}

std::size_t count_nonzero(std::span<const Symbol> v) {
  std::size_t n = 0;
  for (Symbol x : v) n += x != 0;
  return n;
}

std::size_t count_mismatch(std::span<const Symbol> a, std::span<const Symbol> b) {
  assert(a.size() == b.size());
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) n += a[i] != b[i];
  return n;
}

}  // namespace cde::kernels::scalar
