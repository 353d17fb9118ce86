#pragma once

#include <cstdint>
#include <limits>

namespace cde {

/// Default cap on brute-force evaluations (messages, subsets, plans).
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

inline constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

/// base^exp, saturating at kSaturated.
constexpr std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) noexcept {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > kSaturated / base) return kSaturated;
    result *= base;
  }
  return result;
}

/// C(n, k), saturating at kSaturated.
constexpr std::uint64_t saturating_binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t result = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // result * (n - k + i) / i stays integral at every step
    const std::uint64_t factor = n - k + i;
    if (result > kSaturated / factor) return kSaturated;
    result = result * factor / i;
  }
  return result;
}

constexpr std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) noexcept {
  return a > kSaturated - b ? kSaturated : a + b;
}

constexpr std::uint64_t saturating_mul(std::uint64_t a, std::uint64_t b) noexcept {
  return (a != 0 && b > kSaturated / a) ? kSaturated : a * b;
}

}  // namespace cde
