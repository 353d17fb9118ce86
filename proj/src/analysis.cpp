#include "cde/analysis.hpp"

#include <algorithm>
#include <functional>
#include <limits>

#include "cde/detail/enumerate.hpp"
#include "cde/error.hpp"

namespace cde {
namespace {

// Kuhn's augmenting paths.  Graphs here are at most a few dozen vertices per
// side, so the O(VE) bound is irrelevant.
class RowMatcher {
 public:
  RowMatcher(const LocalSupport& support, std::span<const std::size_t> columns)
      : support_(support), columns_(columns), owner_(columns.size(), kFree) {}

  std::size_t run() {
    std::size_t matched = 0;
    for (std::size_t r = 0; r < support_.rows.size(); ++r) {
      seen_.assign(columns_.size(), false);
      if (augment(r)) ++matched;
    }
    return matched;
  }

 private:
  static constexpr std::size_t kFree = static_cast<std::size_t>(-1);

  bool augment(std::size_t r) {
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      if (seen_[c] || !support_.at(r, columns_[c])) continue;
      seen_[c] = true;
      if (owner_[c] == kFree || augment(owner_[c])) {
        owner_[c] = r;
        return true;
      }
    }
    return false;
  }

  const LocalSupport& support_;
  std::span<const std::size_t> columns_;
  std::vector<std::size_t> owner_;
  std::vector<bool> seen_;
};

using Bits = std::vector<std::uint64_t>;

std::size_t popcount(const Bits& bits) {
  std::size_t n = 0;
  for (std::uint64_t w : bits) n += static_cast<std::size_t>(__builtin_popcountll(w));
  return n;
}

}  // namespace

std::size_t generic_rank(const LocalSupport& support, std::span<const std::size_t> columns) {
  for (std::size_t c : columns) {
    if (c >= support.cols) throw IndexOutOfRange("column index out of range");
  }
  if (support.rows.empty() || columns.empty()) return 0;
  return RowMatcher(support, columns).run();
}

std::optional<std::size_t> local_diameter(const LocalSupport& support, std::size_t n, std::uint64_t budget) {
  const std::size_t r = support.rows.size();
  if (r == 0) return 0;
  if (n != support.cols) throw InvalidArgument("column count does not match the local support");
  const std::uint64_t subsets = saturating_pow(2, r);
  if (subsets > budget) throw BudgetExceeded(subsets, budget);

  const std::size_t words = (n + 63) / 64;
  std::vector<Bits> neighbours(r, Bits(words, 0));
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (support.at(i, j)) neighbours[i][j / 64] |= std::uint64_t{1} << (j % 64);
    }
  }

  // Hall deficiency: min over nonempty row sets T of |N(T)| - |T|.
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  std::function<void(std::size_t, const Bits&, std::size_t)> walk = [&](std::size_t next, const Bits& cover,
                                                                        std::size_t chosen) {
    if (next == r) {
      if (chosen > 0) {
        best = std::min(best, static_cast<std::int64_t>(popcount(cover)) - static_cast<std::int64_t>(chosen));
      }
      return;
    }
    walk(next + 1, cover, chosen);
    Bits with = cover;
    for (std::size_t w = 0; w < words; ++w) with[w] |= neighbours[next][w];
    walk(next + 1, with, chosen + 1);
  };
  walk(0, Bits(words, 0), 0);

  if (best < 0) return std::nullopt;
  return n - static_cast<std::size_t>(best);
}

CapabilityReport diameter(const CdeProblem& problem, std::uint64_t budget) {
  CapabilityReport report;
  const std::size_t n = problem.clients();
  for (std::size_t j = 0; j < n; ++j) {
    const auto rho_j = local_diameter(local_support(problem, j), n, budget);
    if (!rho_j) throw Infeasible(j);
    if (problem.missing(j).empty()) report.vacuous_clients.push_back(j);
    report.rho_per_client.push_back(*rho_j);
  }
  report.rho = *std::max_element(report.rho_per_client.begin(), report.rho_per_client.end());
  return report;
}

std::size_t capability(std::size_t n, std::size_t rho) noexcept { return rho >= n ? 0 : (n - rho) / 2; }

CapabilityReport capability(const CdeProblem& problem, std::uint64_t budget) {
  CapabilityReport report = diameter(problem, budget);
  report.delta = capability(problem.clients(), report.rho);
  return report;
}

std::uint64_t char_poly_degree_bound(const CdeProblem& problem, std::uint64_t budget) {
  const std::size_t n = problem.clients();
  std::uint64_t required = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const std::size_t r = problem.missing(j).size();
    if (r > 0) required = saturating_add(required, saturating_binomial(n - 1, r));
  }
  if (required > budget) throw BudgetExceeded(required, budget);

  std::uint64_t degree = 0;
  std::vector<std::size_t> subset;
  for (std::size_t j = 0; j < n; ++j) {
    const LocalSupport support = local_support(problem, j);
    const std::size_t r = support.rows.size();
    if (r == 0 || r > n - 1) continue;
    // Column j is structurally zero, so only subsets of the other n-1 columns
    // can carry a perfect matching.
    subset.resize(r);
    std::vector<std::size_t> others;
    for (std::size_t c = 0; c < n; ++c) {
      if (c != j) others.push_back(c);
    }
    std::uint64_t nonsingular = 0;
    detail::for_each_combination(others.size(), r, [&](std::span<const std::size_t> pick) {
      for (std::size_t t = 0; t < r; ++t) subset[t] = others[pick[t]];
      if (generic_rank(support, subset) == r) ++nonsingular;
      return true;
    });
    degree += nonsingular * r;
  }
  return degree;
}

CapabilityReport analyze(const CdeProblem& problem, std::uint64_t budget) {
  CapabilityReport report = capability(problem, budget);
  report.degree_bound = char_poly_degree_bound(problem, budget);
  return report;
}

}  // namespace cde
