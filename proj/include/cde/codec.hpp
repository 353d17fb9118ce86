#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "cde/budget.hpp"
#include "cde/field.hpp"
#include "cde/model.hpp"

namespace cde {

/// A k x n coefficient matrix over GF(q) whose column j is the combination
/// client j broadcasts.  Coefficients outside the support are zero.
class EncodingMatrix {
 public:
  /// Throws InvalidArgument on a shape mismatch, SupportViolation on a nonzero
  /// coefficient for a packet the client does not hold.
  EncodingMatrix(CdeProblem problem, Matrix coefficients);

  const CdeProblem& problem() const noexcept { return problem_; }
  const Matrix& coefficients() const noexcept { return coefficients_; }
  const PrimeField& field() const noexcept { return coefficients_.field(); }

  friend bool operator==(const EncodingMatrix&, const EncodingMatrix&) = default;

 private:
  CdeProblem problem_;
  Matrix coefficients_;
};

/// The code a client decodes against: the rows of E for its missing packets.
struct LocalCode {
  std::size_t client = 0;
  std::vector<std::size_t> rows;  // missing packets, ascending
  Matrix generator;               // rows.size() x n
  std::optional<std::size_t> cached_distance;
};

LocalCode local_receiving_matrix(const EncodingMatrix& encoding, std::size_t client);

/// Exact minimum Hamming weight over nonzero messages (0 when the generator
/// is rank deficient).  Enumerates q^rows messages, or tests column subsets
/// by rank when that is cheaper; throws BudgetExceeded if both exceed the
/// budget.  Requires at least one row.
std::size_t min_distance(const LocalCode& code, std::uint64_t budget = kDefaultBudget);

/// True iff every (n - d + 1)-column submatrix has full row rank.
/// Requires 1 <= d and n - d + 1 >= rows.
bool rank_distance_check(const LocalCode& code, std::size_t d);

struct VerificationReport {
  std::size_t delta = 0;
  std::size_t required_distance = 1;  // 2 * delta + 1
  /// Per client; empty for clients with nothing to recover.
  std::vector<std::optional<std::size_t>> distances;
  bool passed = true;
  /// Client with the smallest local distance, if any client has one.
  std::optional<std::size_t> binding_client;
  std::vector<std::size_t> failing_clients;
};

/// Passes iff every local code has minimum distance >= 2 * delta + 1.
VerificationReport verify_error_correction(const EncodingMatrix& encoding, std::size_t delta,
                                           std::uint64_t budget = kDefaultBudget);

/// Every supported coefficient drawn independently and uniformly from all q
/// values (zero included) using mt19937_64 seeded with `seed`.
EncodingMatrix random_encoding(const CdeProblem& problem, const PrimeField& field, std::uint64_t seed);

enum class SearchStrategy {
  kSeedSweep,   // random_encoding with seed 0, 1, 2, ... until one verifies
  kExhaustive,  // backtracking over all assignments, tiny instances only
};

struct ConstructOptions {
  SearchStrategy strategy = SearchStrategy::kSeedSweep;
  /// Target capability; defaults to the structural capability of the problem.
  std::optional<std::size_t> delta;
  std::uint64_t max_attempts = 10'000;
  /// Per-candidate enumeration budget, and node budget for the backtracker.
  std::uint64_t budget = kDefaultBudget;
  /// Exhaustive search is refused above these limits.
  std::size_t exhaustive_max_entries = 24;
  std::uint32_t exhaustive_max_field = 5;
};

struct Construction {
  EncodingMatrix encoding;
  VerificationReport report;
  SearchStrategy strategy;
  /// Seeds tried (sweep) or search nodes visited (exhaustive).
  std::uint64_t attempts = 0;
};

/// A verified encoding achieving the requested capability.  Throws Infeasible
/// for unsolvable problems and SearchExhausted when no candidate verifies.
Construction deterministic_encoding(const CdeProblem& problem, const PrimeField& field,
                                    const ConstructOptions& options = {});

}  // namespace cde
