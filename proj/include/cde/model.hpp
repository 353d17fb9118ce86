#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace cde {

/// A problem as written in an interchange file: 1-based packet indices, not
/// yet validated.
struct ProblemSpec {
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::optional<std::uint64_t> q;
  std::vector<std::vector<std::int64_t>> holdings;
};

/// A validated exchange instance: k packets, n clients, and the packets each
/// client holds.  Indices are 0-based; holdings are sorted and deduplicated.
class CdeProblem {
 public:
  std::size_t packets() const noexcept { return k_; }
  std::size_t clients() const noexcept { return holdings_.size(); }

  const std::vector<std::size_t>& holding(std::size_t client) const { return holdings_.at(client); }
  /// Packets the client lacks, ascending.
  const std::vector<std::size_t>& missing(std::size_t client) const { return missing_.at(client); }
  bool holds(std::size_t client, std::size_t packet) const;

  /// The 1-based interchange form of this problem.
  ProblemSpec to_spec(std::optional<std::uint64_t> q = std::nullopt) const;

  friend bool operator==(const CdeProblem&, const CdeProblem&) = default;

 private:
  friend CdeProblem validate_problem(const ProblemSpec&, std::vector<std::string>*);
  CdeProblem(std::size_t k, std::vector<std::vector<std::size_t>> holdings);

  std::size_t k_;
  std::vector<std::vector<std::size_t>> holdings_;
  std::vector<std::vector<std::size_t>> missing_;
};

/// Checks index ranges and that every packet is held somewhere.  Duplicate
/// indices are dropped and reported through `warnings` when given.
/// Throws InvalidArgument, IndexOutOfRange or UncoveredPacket.
CdeProblem validate_problem(const ProblemSpec& spec, std::vector<std::string>* warnings = nullptr);

/// Which coefficients of an encoding matrix may be nonzero: entry (i, j) is
/// set iff client j holds packet i.
class SupportPattern {
 public:
  SupportPattern(std::size_t k, std::size_t n) : k_(k), n_(n), cells_(k * n, 0) {}

  std::size_t rows() const noexcept { return k_; }
  std::size_t cols() const noexcept { return n_; }
  bool at(std::size_t packet, std::size_t client) const { return cells_.at(packet * n_ + client) != 0; }
  void set(std::size_t packet, std::size_t client, bool value) { cells_.at(packet * n_ + client) = value; }
  std::size_t count() const noexcept;

  friend bool operator==(const SupportPattern&, const SupportPattern&) = default;

 private:
  std::size_t k_;
  std::size_t n_;
  std::vector<std::uint8_t> cells_;
};

SupportPattern support_pattern(const CdeProblem& problem);

/// The support restricted to the packets one client is missing.
struct LocalSupport {
  std::size_t client = 0;
  std::vector<std::size_t> rows;  // missing packets, ascending
  std::size_t cols = 0;
  std::vector<std::uint8_t> cells;  // rows.size() x cols

  bool at(std::size_t local_row, std::size_t col) const { return cells.at(local_row * cols + col) != 0; }
};

LocalSupport local_support(const CdeProblem& problem, std::size_t client);

}  // namespace cde
