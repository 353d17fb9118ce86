#include "cde/model.hpp"

#include <algorithm>
#include <utility>

#include "cde/error.hpp"

namespace cde {

UncoveredPacket::UncoveredPacket(std::vector<std::size_t> packets)
    : Error([&] {
        std::string msg = "no client holds packet(s)";
        for (std::size_t p : packets) msg += " " + std::to_string(p);
        return msg;
      }()),
      packets_(std::move(packets)) {}

CdeProblem::CdeProblem(std::size_t k, std::vector<std::vector<std::size_t>> holdings)
    : k_(k), holdings_(std::move(holdings)) {
  missing_.reserve(holdings_.size());
  for (const auto& held : holdings_) {
    std::vector<std::size_t> miss;
    std::size_t h = 0;
    for (std::size_t i = 0; i < k_; ++i) {
      if (h < held.size() && held[h] == i) {
        ++h;
      } else {
        miss.push_back(i);
      }
    }
    missing_.push_back(std::move(miss));
  }
}

bool CdeProblem::holds(std::size_t client, std::size_t packet) const {
  const auto& held = holdings_.at(client);
  return std::binary_search(held.begin(), held.end(), packet);
}

ProblemSpec CdeProblem::to_spec(std::optional<std::uint64_t> q) const {
  ProblemSpec spec;
  spec.k = static_cast<std::int64_t>(k_);
  spec.n = static_cast<std::int64_t>(holdings_.size());
  spec.q = q;
  for (const auto& held : holdings_) {
    auto& out = spec.holdings.emplace_back();
    for (std::size_t i : held) out.push_back(static_cast<std::int64_t>(i) + 1);
  }
  return spec;
}

CdeProblem validate_problem(const ProblemSpec& spec, std::vector<std::string>* warnings) {
  if (spec.k < 1) throw InvalidArgument("k must be at least 1");
  if (spec.n < 1) throw InvalidArgument("n must be at least 1");
  if (spec.holdings.size() != static_cast<std::size_t>(spec.n)) {
    throw InvalidArgument("expected " + std::to_string(spec.n) + " holding sets, got " +
                          std::to_string(spec.holdings.size()));
  }
  const auto k = static_cast<std::size_t>(spec.k);
  std::vector<std::vector<std::size_t>> holdings;
  std::vector<bool> covered(k, false);
  for (std::size_t j = 0; j < spec.holdings.size(); ++j) {
    std::vector<std::size_t> held;
    for (std::int64_t i : spec.holdings[j]) {
      if (i < 1 || i > spec.k) {
        throw IndexOutOfRange("client " + std::to_string(j + 1) + " lists packet " + std::to_string(i) +
                              " outside [1, " + std::to_string(spec.k) + "]");
      }
      held.push_back(static_cast<std::size_t>(i - 1));
    }
    std::sort(held.begin(), held.end());
    const auto dup = std::unique(held.begin(), held.end());
    if (dup != held.end()) {
      if (warnings != nullptr) {
        warnings->push_back("client " + std::to_string(j + 1) + " lists duplicate packet indices; deduplicated");
      }
      held.erase(dup, held.end());
    }
    for (std::size_t i : held) covered[i] = true;
    holdings.push_back(std::move(held));
  }
  std::vector<std::size_t> uncovered;
  for (std::size_t i = 0; i < k; ++i) {
    if (!covered[i]) uncovered.push_back(i + 1);
  }
  if (!uncovered.empty()) throw UncoveredPacket(std::move(uncovered));
  return CdeProblem(k, std::move(holdings));
}

std::size_t SupportPattern::count() const noexcept {
  return static_cast<std::size_t>(std::count(cells_.begin(), cells_.end(), std::uint8_t{1}));
}

SupportPattern support_pattern(const CdeProblem& problem) {
  SupportPattern pattern(problem.packets(), problem.clients());
  for (std::size_t j = 0; j < problem.clients(); ++j) {
    for (std::size_t i : problem.holding(j)) pattern.set(i, j, true);
  }
  return pattern;
}

LocalSupport local_support(const CdeProblem& problem, std::size_t client) {
  if (client >= problem.clients()) throw IndexOutOfRange("client index out of range");
  LocalSupport local;
  local.client = client;
  local.rows = problem.missing(client);
  local.cols = problem.clients();
  local.cells.assign(local.rows.size() * local.cols, 0);
  for (std::size_t r = 0; r < local.rows.size(); ++r) {
    for (std::size_t j = 0; j < local.cols; ++j) {
      local.cells[r * local.cols + j] = problem.holds(j, local.rows[r]) ? 1 : 0;
    }
  }
  return local;
}

}  // namespace cde
