#include "cde/codec.hpp"

#include <algorithm>
#include <random>
#include <utility>

#include "cde/analysis.hpp"
#include "cde/detail/enumerate.hpp"
#include "cde/error.hpp"

namespace cde {
namespace {

Symbol uniform_symbol(std::mt19937_64& rng, Symbol q) {
  // rejection sampling keeps the draw exactly uniform and portable
  const std::uint64_t limit = std::mt19937_64::max() - (std::mt19937_64::max() % q + 1) % q;
  std::uint64_t x = rng();
  while (x > limit) x = rng();
  return static_cast<Symbol>(x % q);
}

std::uint64_t enumeration_cost(const LocalCode& code) {
  return saturating_pow(code.generator.field().modulus(), code.rows.size()) - 1;
}

std::uint64_t rank_path_cost(const LocalCode& code) {
  const std::size_t n = code.generator.cols();
  std::uint64_t cost = 0;
  for (std::size_t s = code.rows.size(); s <= n; ++s) cost = saturating_add(cost, saturating_binomial(n, s));
  return cost;
}

// Minimum weight, stopping as soon as it drops below `floor` (returns the
// weight found so far in that case).
std::size_t enumerate_min_weight(const Matrix& generator, std::size_t floor) {
  std::size_t best = generator.cols() + 1;
  bool first = true;
  detail::for_each_codeword(generator, [&](std::span<const Symbol>, std::span<const Symbol> codeword) {
    if (first) {
      first = false;  // zero message
      return true;
    }
    best = std::min(best, kernels::count_nonzero(codeword));
    return best >= floor && best > 0;
  });
  return best;
}

std::size_t min_distance_impl(const LocalCode& code, std::size_t floor, std::uint64_t budget) {
  if (code.rows.empty()) throw InvalidArgument("minimum distance of an empty local code is undefined");
  if (code.cached_distance) return *code.cached_distance;
  const std::uint64_t enumerate = enumeration_cost(code);
  const std::uint64_t by_rank = rank_path_cost(code);
  if (enumerate <= budget && enumerate <= by_rank) return enumerate_min_weight(code.generator, floor);
  if (by_rank > budget) throw BudgetExceeded(std::min(enumerate, by_rank), budget);

  const std::size_t n = code.generator.cols();
  const std::size_t r = code.rows.size();
  if (rank(code.generator) < r) return 0;
  for (std::size_t d = 2; d <= n - r + 1; ++d) {
    if (!rank_distance_check(code, d)) return d - 1;
  }
  return n - r + 1;
}

bool passes(const EncodingMatrix& encoding, std::size_t required, std::uint64_t budget) {
  for (std::size_t j = 0; j < encoding.problem().clients(); ++j) {
    if (encoding.problem().missing(j).empty()) continue;
    if (min_distance_impl(local_receiving_matrix(encoding, j), required, budget) < required) return false;
  }
  return true;
}

// Depth-first search over encoding columns.  Scaling a column by a nonzero
// constant leaves every codeword's support unchanged, so each column is
// enumerated only up to scaling (first nonzero entry fixed to 1).
class Backtracker {
 public:
  Backtracker(const CdeProblem& problem, const PrimeField& field, std::size_t required, std::uint64_t budget)
      : problem_(problem), field_(field), required_(required), budget_(budget),
        coefficients_(field, problem.packets(), problem.clients()) {
    const std::size_t n = problem.clients();
    const Symbol q = field.modulus();
    for (std::size_t j = 0; j < n; ++j) {
      const std::size_t r = problem.missing(j).size();
      messages_.push_back(r == 0 ? 0 : static_cast<std::size_t>(saturating_pow(q, r)));
      weights_.emplace_back(messages_.back(), 0);
    }
  }

  std::optional<Matrix> run() {
    if (descend(0)) return coefficients_;
    return std::nullopt;
  }

  std::uint64_t nodes() const noexcept { return nodes_; }

 private:
  bool descend(std::size_t column) {
    const std::size_t n = problem_.clients();
    if (column == n) return true;
    const auto& held = problem_.holding(column);
    const Symbol q = field_.modulus();
    std::vector<Symbol> values(held.size(), 0);
    while (true) {
      if (++nodes_ > budget_) throw BudgetExceeded(nodes_, budget_);
      if (canonical(values)) {
        for (std::size_t t = 0; t < held.size(); ++t) coefficients_.set(held[t], column, values[t]);
        const auto saved = weights_;
        if (extend(column) && descend(column + 1)) return true;
        weights_ = saved;
      }
      std::size_t t = 0;
      for (; t < values.size(); ++t) {
        if (++values[t] < q) break;
        values[t] = 0;
      }
      if (t == values.size()) break;
    }
    for (std::size_t i : held) coefficients_.set(i, column, Symbol{0});
    return false;
  }

  // zero, or first nonzero entry equal to 1
  static bool canonical(const std::vector<Symbol>& values) {
    for (Symbol v : values) {
      if (v != 0) return v == 1;
    }
    return true;
  }

  // Adds column `column` to every client's partial codeword weights and
  // checks that each nonzero message can still reach the required weight.
  bool extend(std::size_t column) {
    const std::size_t n = problem_.clients();
    const Symbol q = field_.modulus();
    for (std::size_t j = 0; j < n; ++j) {
      const auto& miss = problem_.missing(j);
      if (miss.empty()) continue;
      std::size_t remaining = 0;
      for (std::size_t c = column + 1; c < n; ++c) remaining += c != j;
      std::vector<Symbol> entry(miss.size());
      for (std::size_t t = 0; t < miss.size(); ++t) entry[t] = coefficients_.symbol(miss[t], column);
      std::vector<Symbol> message(miss.size(), 0);
      auto& weight = weights_[j];
      for (std::size_t idx = 0; idx < messages_[j]; ++idx) {
        if (idx > 0) {
          Symbol dot = 0;
          for (std::size_t t = 0; t < miss.size(); ++t) dot = field_.add(dot, field_.mul(message[t], entry[t]));
          weight[idx] += dot != 0;
          if (weight[idx] + remaining < required_) return false;
        }
        for (std::size_t t = 0; t < message.size(); ++t) {
          if (++message[t] < q) break;
          message[t] = 0;
        }
      }
    }
    return true;
  }

  const CdeProblem& problem_;
  PrimeField field_;
  std::size_t required_;
  std::uint64_t budget_;
  Matrix coefficients_;
  std::vector<std::size_t> messages_;
  std::vector<std::vector<std::size_t>> weights_;
  std::uint64_t nodes_ = 0;
};

}  // namespace

EncodingMatrix::EncodingMatrix(CdeProblem problem, Matrix coefficients)
    : problem_(std::move(problem)), coefficients_(std::move(coefficients)) {
  if (coefficients_.rows() != problem_.packets() || coefficients_.cols() != problem_.clients()) {
    throw InvalidArgument("encoding matrix must be " + std::to_string(problem_.packets()) + " x " +
                          std::to_string(problem_.clients()));
  }
  for (std::size_t i = 0; i < coefficients_.rows(); ++i) {
    for (std::size_t j = 0; j < coefficients_.cols(); ++j) {
      if (coefficients_.symbol(i, j) != 0 && !problem_.holds(j, i)) throw SupportViolation(i, j);
    }
  }
}

LocalCode local_receiving_matrix(const EncodingMatrix& encoding, std::size_t client) {
  if (client >= encoding.problem().clients()) throw IndexOutOfRange("client index out of range");
  const auto& rows = encoding.problem().missing(client);
  return LocalCode{client, rows, encoding.coefficients().select_rows(rows), std::nullopt};
}

std::size_t min_distance(const LocalCode& code, std::uint64_t budget) { return min_distance_impl(code, 0, budget); }

bool rank_distance_check(const LocalCode& code, std::size_t d) {
  const std::size_t n = code.generator.cols();
  const std::size_t r = code.rows.size();
  if (d < 1 || d > n + 1 || n - d + 1 < r) {
    throw InvalidArgument("rank check needs 1 <= d and n - d + 1 >= " + std::to_string(r));
  }
  return detail::for_each_combination(n, n - d + 1, [&](std::span<const std::size_t> columns) {
    return rank(code.generator.select_columns(columns)) == r;
  });
}

VerificationReport verify_error_correction(const EncodingMatrix& encoding, std::size_t delta,
                                           std::uint64_t budget) {
  VerificationReport report;
  report.delta = delta;
  report.required_distance = 2 * delta + 1;
  const CdeProblem& problem = encoding.problem();
  for (std::size_t j = 0; j < problem.clients(); ++j) {
    if (problem.missing(j).empty()) {
      report.distances.emplace_back();
      continue;
    }
    const std::size_t d = min_distance(local_receiving_matrix(encoding, j), budget);
    report.distances.emplace_back(d);
    if (!report.binding_client || d < *report.distances[*report.binding_client]) report.binding_client = j;
    if (d < report.required_distance) {
      report.passed = false;
      report.failing_clients.push_back(j);
    }
  }
  return report;
}

EncodingMatrix random_encoding(const CdeProblem& problem, const PrimeField& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Matrix coefficients(field, problem.packets(), problem.clients());
  for (std::size_t i = 0; i < problem.packets(); ++i) {
    for (std::size_t j = 0; j < problem.clients(); ++j) {
      if (problem.holds(j, i)) coefficients.set(i, j, uniform_symbol(rng, field.modulus()));
    }
  }
  return EncodingMatrix(problem, std::move(coefficients));
}

Construction deterministic_encoding(const CdeProblem& problem, const PrimeField& field,
                                    const ConstructOptions& options) {
  const std::size_t delta = options.delta.value_or(capability(problem, options.budget).delta);
  const std::size_t required = 2 * delta + 1;

  if (options.strategy == SearchStrategy::kExhaustive) {
    const std::size_t entries = support_pattern(problem).count();
    if (entries > options.exhaustive_max_entries || field.modulus() > options.exhaustive_max_field) {
      throw InvalidArgument("exhaustive search is limited to " + std::to_string(options.exhaustive_max_entries) +
                            " coefficients and q <= " + std::to_string(options.exhaustive_max_field));
    }
    Backtracker search(problem, field, required, options.budget);
    auto found = search.run();
    if (!found) throw SearchExhausted(search.nodes());
    EncodingMatrix encoding(problem, std::move(*found));
    auto report = verify_error_correction(encoding, delta, options.budget);
    return Construction{std::move(encoding), std::move(report), options.strategy, search.nodes()};
  }

  for (std::uint64_t seed = 0; seed < options.max_attempts; ++seed) {
    EncodingMatrix candidate = random_encoding(problem, field, seed);
    if (!passes(candidate, required, options.budget)) continue;
    auto report = verify_error_correction(candidate, delta, options.budget);
    return Construction{std::move(candidate), std::move(report), options.strategy, seed + 1};
  }
  throw SearchExhausted(options.max_attempts);
}

}  // namespace cde
