#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cde/budget.hpp"
#include "cde/model.hpp"

namespace cde {

/// Structural capability of an exchange instance.
struct CapabilityReport {
  std::vector<std::size_t> rho_per_client;
  std::size_t rho = 0;
  /// Largest number of compromised clients any fair-and-once scheme tolerates.
  std::size_t delta = 0;
  /// Upper bound on the degree of the product of all generically nonsingular
  /// maximal minors; absent until computed.
  std::optional<std::uint64_t> degree_bound;
  /// Clients with nothing to recover; their diameter is reported as 0.
  std::vector<std::size_t> vacuous_clients;
};

/// Maximum rank of the support restricted to `columns` over all assignments of
/// the free coefficients, i.e. the size of a maximum row/column matching.
std::size_t generic_rank(const LocalSupport& support, std::span<const std::size_t> columns);

/// Smallest s such that every s columns of the local support carry a full
/// row matching.  Empty when even all n columns fall short (infeasible).
/// Enumerates the 2^|rows| row subsets; throws BudgetExceeded beyond `budget`.
std::optional<std::size_t> local_diameter(const LocalSupport& support, std::size_t n,
                                          std::uint64_t budget = kDefaultBudget);

/// Per-client diameters and their maximum.  Throws Infeasible naming the first
/// stuck client.
CapabilityReport diameter(const CdeProblem& problem, std::uint64_t budget = kDefaultBudget);

/// floor((n - rho) / 2), or 0 when rho >= n.
std::size_t capability(std::size_t n, std::size_t rho) noexcept;

/// diameter() plus delta.
CapabilityReport capability(const CdeProblem& problem, std::uint64_t budget = kDefaultBudget);

/// Sum over clients of (#column subsets of size |missing| with a perfect
/// matching) * |missing|.  Throws BudgetExceeded when the subsets to test
/// exceed `budget`.
std::uint64_t char_poly_degree_bound(const CdeProblem& problem, std::uint64_t budget = kDefaultBudget);

/// capability() plus the degree bound.
CapabilityReport analyze(const CdeProblem& problem, std::uint64_t budget = kDefaultBudget);

}  // namespace cde
