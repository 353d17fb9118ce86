#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "cde/budget.hpp"
#include "cde/codec.hpp"
#include "cde/decoder.hpp"

namespace cde {

/// Compromised clients and the value each broadcasts instead of its honest
/// combination.  Any field value is allowed, including the honest one.
struct AdversaryPlan {
  std::map<std::size_t, FieldElement> substitutions;

  std::vector<std::size_t> compromised() const;
  bool is_compromised(std::size_t client) const { return substitutions.contains(client); }
};

enum class Verdict { kAllRecovered, kViolations };

struct ExchangeTrace {
  std::shared_ptr<const EncodingMatrix> encoding;
  PacketVector truth;
  BroadcastVector honest;
  BroadcastVector received;
  AdversaryPlan plan;
  /// One entry per honest client, ascending.
  std::vector<DecodeResult> results;
  Verdict verdict = Verdict::kAllRecovered;
  /// Honest clients that did not decode X uniquely and correctly.
  std::vector<std::size_t> violations;
};

/// Broadcasts X under E, applies the plan, and decodes at every honest
/// client.  Compromised clients are not required to decode.
ExchangeTrace run_exchange(const EncodingMatrix& encoding, const PacketVector& packets, const AdversaryPlan& plan,
                           std::uint64_t budget = kDefaultBudget);

struct AdversaryCheck {
  bool passed = true;
  std::uint64_t plans_checked = 0;
  /// First violating trace, or the passing trace with the largest decoding
  /// distance when every plan passes.
  std::optional<ExchangeTrace> witness;
};

/// Runs every plan with at most `delta` compromised clients and every
/// combination of substituted values.  Throws BudgetExceeded when the plan
/// count exceeds `budget`.
AdversaryCheck exhaustive_adversary_check(const EncodingMatrix& encoding, std::size_t delta,
                                          const PacketVector& packets, std::uint64_t budget = kDefaultBudget);

struct MonteCarloStats {
  std::uint64_t trials = 0;
  std::uint64_t passes = 0;
  double pass_fraction = 0.0;
  /// Two-sided 99% Wilson interval for the pass probability.
  double ci_low = 0.0;
  double ci_high = 0.0;
  /// One-sided 99% Wilson upper bound.
  double upper_bound = 0.0;
  std::uint64_t degree_bound = 0;
  /// max(0, 1 - degree_bound / q)
  double theoretical_floor = 0.0;
  /// False only when the data reject "pass rate >= floor" at 99%.
  bool consistent_with_floor = true;
};

/// Seed for trial `index` of a campaign seeded with `seed`.
std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept;

/// Draws `trials` random encodings (trial t uses trial_seed(seed, t)) and
/// verifies each against `delta`.  Throws InvalidArgument when trials == 0.
MonteCarloStats monte_carlo_success_rate(const CdeProblem& problem, const PrimeField& field, std::size_t delta,
                                         std::uint64_t trials, std::uint64_t seed,
                                         std::uint64_t budget = kDefaultBudget);

}  // namespace cde
