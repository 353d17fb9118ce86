#include "cde/sim.hpp"

#include <algorithm>
#include <cmath>

#include "cde/analysis.hpp"
#include "cde/detail/enumerate.hpp"
#include "cde/error.hpp"

namespace cde {
namespace {

constexpr double kZTwoSided99 = 2.5758293035489004;
constexpr double kZOneSided99 = 2.3263478740408408;

struct Wilson {
  double low;
  double high;
};

Wilson wilson(std::uint64_t successes, std::uint64_t trials, double z) {
  const double n = static_cast<double>(trials);
  const double p = static_cast<double>(successes) / n;
  const double z2 = z * z;
  const double centre = (p + z2 / (2 * n)) / (1 + z2 / n);
  const double half = z * std::sqrt(p * (1 - p) / n + z2 / (4 * n * n)) / (1 + z2 / n);
  return {std::max(0.0, centre - half), std::min(1.0, centre + half)};
}

std::size_t max_distance(const ExchangeTrace& trace) {
  std::size_t d = 0;
  for (const auto& r : trace.results) d = std::max(d, r.distance);
  return d;
}

}  // namespace

std::vector<std::size_t> AdversaryPlan::compromised() const {
  std::vector<std::size_t> out;
  for (const auto& [j, v] : substitutions) out.push_back(j);
  return out;
}

ExchangeTrace run_exchange(const EncodingMatrix& encoding, const PacketVector& packets, const AdversaryPlan& plan,
                           std::uint64_t budget) {
  const CdeProblem& problem = encoding.problem();
  const std::size_t n = problem.clients();
  BroadcastVector honest = encode_all(encoding, packets);
  BroadcastVector received = honest;
  for (const auto& [j, value] : plan.substitutions) {
    if (j >= n) throw IndexOutOfRange("compromised client index out of range");
    received.set(j, value);
  }

  ExchangeTrace trace{std::make_shared<const EncodingMatrix>(encoding), packets, honest, received, plan, {},
                      Verdict::kAllRecovered, {}};
  for (std::size_t j = 0; j < n; ++j) {
    if (plan.is_compromised(j)) continue;
    DecodeResult result;
    try {
      result = decode_all(encoding, j, received, held_packets(problem, j, packets), budget);
    } catch (const BudgetExceeded&) {
      result.client = j;
      result.status = DecodeStatus::kFailed;
    }
    if (result.status != DecodeStatus::kUnique || result.estimate != packets) trace.violations.push_back(j);
    trace.results.push_back(std::move(result));
  }
  if (!trace.violations.empty()) trace.verdict = Verdict::kViolations;
  return trace;
}

AdversaryCheck exhaustive_adversary_check(const EncodingMatrix& encoding, std::size_t delta,
                                          const PacketVector& packets, std::uint64_t budget) {
  const std::size_t n = encoding.problem().clients();
  const Symbol q = encoding.field().modulus();
  const std::size_t max_size = std::min(delta, n);
  std::uint64_t plans = 0;
  for (std::size_t s = 0; s <= max_size; ++s) {
    plans = saturating_add(plans, saturating_mul(saturating_binomial(n, s), saturating_pow(q, s)));
  }
  if (plans > budget) throw BudgetExceeded(plans, budget);

  AdversaryCheck check;
  std::size_t worst = 0;
  for (std::size_t s = 0; s <= max_size && check.passed; ++s) {
    detail::for_each_combination(n, s, [&](std::span<const std::size_t> clients) {
      std::vector<Symbol> values(s, 0);
      while (true) {
        AdversaryPlan plan;
        for (std::size_t t = 0; t < s; ++t) plan.substitutions.emplace(clients[t], FieldElement(values[t], encoding.field()));
        ExchangeTrace trace = run_exchange(encoding, packets, plan, budget);
        ++check.plans_checked;
        if (trace.verdict == Verdict::kViolations) {
          check.passed = false;
          check.witness = std::move(trace);
          return false;
        }
        const std::size_t d = max_distance(trace);
        if (!check.witness || d > worst) {
          worst = d;
          check.witness = std::move(trace);
        }
        std::size_t t = 0;
        for (; t < s; ++t) {
          if (++values[t] < q) break;
          values[t] = 0;
        }
        if (t == s) return true;
      }
    });
  }
  return check;
}

std::uint64_t trial_seed(std::uint64_t seed, std::uint64_t index) noexcept {
  // splitmix64 finalizer over a Weyl sequence
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

MonteCarloStats monte_carlo_success_rate(const CdeProblem& problem, const PrimeField& field, std::size_t delta,
                                         std::uint64_t trials, std::uint64_t seed, std::uint64_t budget) {
  if (trials == 0) throw InvalidArgument("trials must be at least 1");
  MonteCarloStats stats;
  stats.trials = trials;
  stats.degree_bound = char_poly_degree_bound(problem, budget);
  stats.theoretical_floor =
      std::max(0.0, 1.0 - static_cast<double>(stats.degree_bound) / static_cast<double>(field.modulus()));

  for (std::uint64_t t = 0; t < trials; ++t) {
    const EncodingMatrix candidate = random_encoding(problem, field, trial_seed(seed, t));
    if (verify_error_correction(candidate, delta, budget).passed) ++stats.passes;
  }

  stats.pass_fraction = static_cast<double>(stats.passes) / static_cast<double>(trials);
  const Wilson two_sided = wilson(stats.passes, trials, kZTwoSided99);
  stats.ci_low = two_sided.low;
  stats.ci_high = two_sided.high;
  stats.upper_bound = wilson(stats.passes, trials, kZOneSided99).high;
  stats.consistent_with_floor = stats.upper_bound >= stats.theoretical_floor;
  return stats;
}

}  // namespace cde
