// Acceptance suite: one PASS/FAIL line per criterion.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "cde/analysis.hpp"
#include "cde/codec.hpp"
#include "cde/decoder.hpp"
#include "cde/io.hpp"
#include "cde/sim.hpp"
#include "oracles/oracles.hpp"

using namespace cde;

namespace {

const std::filesystem::path kFixtures = CDE_FIXTURE_DIR;

// Pinned limits.
constexpr double kFixtureSeconds = 1.0;
constexpr double kSweepSeconds = 5.0;
constexpr double kOracleSeconds = 60.0;
constexpr double kStatisticalSeconds = 120.0;
constexpr std::size_t kDiameterProblems = 200;
constexpr std::size_t kDistancePairs = 100;
constexpr std::size_t kMaxClients = 8;
constexpr std::size_t kMaxPackets = 8;
constexpr std::size_t kMaxMissing = 3;
constexpr std::uint64_t kFloorField = 1009;
constexpr std::uint64_t kFloorTrials = 500;
constexpr std::uint64_t kFloorSeed = 1;
constexpr std::uint64_t kRandomSeed = 20240601;

struct Outcome {
  bool passed = false;
  std::string detail;
};

struct Context {
  CdeProblem example1 = validate_problem(io::load_problem(kFixtures / "example1_problem.json"));
  EncodingMatrix example2 =
      io::to_encoding(example1, io::load_matrix(kFixtures / "example2_matrix.json"));
  // Encodings produced by the oracle criteria, reused for the converse bound
  // and the correction-radius sweep.
  std::vector<EncodingMatrix> generated;
};

int failures = 0;

void report(const char* id, const char* name, double limit, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (limit > 0 && secs >= limit) {
    o.passed = false;
    o.detail += "; over time limit";
  }
  if (!o.passed) ++failures;
  std::printf("%s %s  %s  (%.3f s)  %s\n", id, o.passed ? "PASS" : "FAIL", name, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s;
  for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
  return "[" + s + "]";
}

Outcome fixture_capability(const Context& ctx) {
  const auto r = capability(ctx.example1);
  const bool ok = r.rho_per_client == std::vector<std::size_t>(6, 4) && r.rho == 4 && r.delta == 1;
  return {ok, "rho_j=" + join(r.rho_per_client) + " rho=" + std::to_string(r.rho) + " delta=" + std::to_string(r.delta)};
}

Outcome fixture_verification(const Context& ctx) {
  std::vector<std::size_t> d;
  for (std::size_t j = 0; j < 6; ++j) d.push_back(min_distance(local_receiving_matrix(ctx.example2, j)));
  const bool one = verify_error_correction(ctx.example2, 1).passed;
  const bool two = verify_error_correction(ctx.example2, 2).passed;
  const bool ok = d == std::vector<std::size_t>(6, 3) && one && !two;
  return {ok, "distances=" + join(d) + " expected all 3; verify(1)=" + (one ? "pass" : "fail") +
                  " verify(2)=" + (two ? "pass" : "fail")};
}

Outcome single_adversary_sweep(const Context& ctx) {
  const PrimeField& f = ctx.example2.field();
  const auto x = PacketVector::from_ints(f, {1, 2, 0, 1, 2, 1});
  std::size_t recovered = 0;
  std::vector<std::string> bad;
  for (std::size_t j = 0; j < 6; ++j) {
    for (std::int64_t v = 0; v < 3; ++v) {
      AdversaryPlan plan;
      plan.substitutions.emplace(j, f.element(v));
      if (run_exchange(ctx.example2, x, plan).verdict == Verdict::kAllRecovered) {
        ++recovered;
      } else {
        bad.push_back("(" + std::to_string(j + 1) + "," + std::to_string(v) + ")");
      }
    }
  }
  bool pair_violation = false;
  oracle::subsets_of_size(6, 2, [&](const std::vector<std::size_t>& who) {
    for (std::int64_t a = 0; a < 3 && !pair_violation; ++a) {
      for (std::int64_t b = 0; b < 3 && !pair_violation; ++b) {
        AdversaryPlan plan;
        plan.substitutions.emplace(who[0], f.element(a));
        plan.substitutions.emplace(who[1], f.element(b));
        pair_violation = run_exchange(ctx.example2, x, plan).verdict == Verdict::kViolations;
      }
    }
  });
  std::string failing;
  for (const auto& s : bad) failing += s;
  return {recovered == 18 && pair_violation,
          std::to_string(recovered) + "/18 single plans recovered" + (bad.empty() ? "" : "; failing " + failing) +
              "; 2-client violation " + (pair_violation ? "found" : "not found")};
}

Outcome diameter_oracle(Context& ctx) {
  std::mt19937_64 rng(kRandomSeed);
  std::size_t problems = 0, clients = 0, mismatches = 0;
  while (problems < kDiameterProblems) {
    const auto p = validate_problem(oracle::random_problem(rng, kMaxPackets, kMaxClients, 0.5));
    ++problems;
    bool feasible = true;
    for (std::size_t j = 0; j < p.clients(); ++j) {
      const auto got = local_diameter(local_support(p, j), p.clients());
      mismatches += got != oracle::brute_diameter(p, j);
      feasible = feasible && got.has_value();
      ++clients;
    }
    if (feasible) ctx.generated.push_back(random_encoding(p, PrimeField(problems % 2 ? 3 : 5), rng()));
  }
  return {mismatches == 0, std::to_string(problems) + " problems, " + std::to_string(clients) + " clients, " +
                               std::to_string(mismatches) + " mismatches"};
}

std::size_t largest_accepted(const LocalCode& code) {
  const std::size_t n = code.generator.cols(), r = code.rows.size();
  if (r > n || !rank_distance_check(code, 1)) return 0;
  std::size_t best = 1;
  for (std::size_t d = 2; d + r <= n + 1; ++d) {
    if (rank_distance_check(code, d)) best = d;
  }
  return best;
}

Outcome distance_oracle(Context& ctx) {
  std::mt19937_64 rng(kRandomSeed + 1);
  std::size_t pairs = 0, codes = 0, mismatches = 0;
  while (pairs < kDistancePairs) {
    const auto p = validate_problem(oracle::random_problem(rng, kMaxPackets, kMaxClients, 0.6));
    bool any_missing = false, all_small = true;
    for (std::size_t j = 0; j < p.clients(); ++j) {
      any_missing = any_missing || !p.missing(j).empty();
      all_small = all_small && p.missing(j).size() <= kMaxMissing;
    }
    if (!any_missing || !all_small) continue;
    const PrimeField f(pairs % 2 ? 5 : 3);
    const auto e = random_encoding(p, f, rng());
    for (std::size_t j = 0; j < p.clients(); ++j) {
      if (p.missing(j).empty()) continue;
      const auto code = local_receiving_matrix(e, j);
      const std::size_t brute = oracle::brute_min_distance(code.generator);
      mismatches += brute != largest_accepted(code);
      mismatches += brute != min_distance(code);
      ++codes;
    }
    ctx.generated.push_back(e);
    ++pairs;
  }
  return {mismatches == 0, std::to_string(pairs) + " pairs, " + std::to_string(codes) + " local codes, " +
                               std::to_string(mismatches) + " mismatches"};
}

Outcome converse_bound(const Context& ctx) {
  std::size_t checked = 0, violations = 0, skipped = 0;
  for (const auto& e : ctx.generated) {
    const CdeProblem& p = e.problem();
    for (std::size_t j = 0; j < p.clients(); ++j) {
      if (p.missing(j).empty()) continue;
      const auto rho = local_diameter(local_support(p, j), p.clients());
      if (!rho) {
        ++skipped;
        continue;
      }
      violations += min_distance(local_receiving_matrix(e, j)) > p.clients() - *rho + 1;
      ++checked;
    }
  }
  return {violations == 0 && checked > 0, std::to_string(ctx.generated.size()) + " encodings, " +
                                               std::to_string(checked) + " local codes, " +
                                               std::to_string(violations) + " violations, " +
                                               std::to_string(skipped) + " infeasible clients skipped"};
}

Outcome success_floor(const Context& ctx) {
  const auto s = monte_carlo_success_rate(ctx.example1, PrimeField(kFloorField), 1, kFloorTrials, kFloorSeed);
  char buf[256];
  std::snprintf(buf, sizeof buf, "%llu/%llu passed, upper99=%.4f, floor=1-%llu/%llu=%.4f",
                static_cast<unsigned long long>(s.passes), static_cast<unsigned long long>(s.trials), s.upper_bound,
                static_cast<unsigned long long>(s.degree_bound), static_cast<unsigned long long>(kFloorField),
                s.theoretical_floor);
  return {s.consistent_with_floor, buf};
}

// All error vectors of weight <= delta with zero at position `skip`.
template <typename Fn>
void for_each_error(std::size_t n, std::size_t skip, std::size_t delta, Symbol q, Fn&& fn) {
  std::vector<std::size_t> positions;
  for (std::size_t i = 0; i < n; ++i) {
    if (i != skip) positions.push_back(i);
  }
  for (std::size_t w = 0; w <= delta && w <= positions.size(); ++w) {
    oracle::subsets_of_size(positions.size(), w, [&](const std::vector<std::size_t>& pick) {
      std::vector<Symbol> values(w, 1);
      while (true) {
        std::vector<Symbol> err(n, 0);
        for (std::size_t t = 0; t < w; ++t) err[positions[pick[t]]] = values[t];
        fn(err);
        std::size_t t = 0;
        for (; t < w; ++t) {
          if (++values[t] < q) break;
          values[t] = 1;
        }
        if (t == w) break;
      }
    });
  }
}

Outcome correction_radius(const Context& ctx) {
  // Verified GF(3) encodings in the suite, each at the largest delta it
  // verifies for.
  std::vector<std::pair<const EncodingMatrix*, std::size_t>> verified;
  auto consider = [&](const EncodingMatrix& e) {
    if (e.field().modulus() != 3) return;
    std::size_t delta = 0;
    while (verify_error_correction(e, delta + 1).passed && 2 * (delta + 1) + 1 <= e.problem().clients() + 1) ++delta;
    if (!verify_error_correction(e, delta).passed) return;
    verified.emplace_back(&e, delta);
  };
  consider(ctx.example2);
  for (const auto& e : ctx.generated) consider(e);

  std::mt19937_64 rng(kRandomSeed + 2);
  std::size_t patterns = 0, violations = 0, positive = 0;
  for (const auto& [e, delta] : verified) {
    const CdeProblem& p = e->problem();
    const PrimeField& f = e->field();
    positive += delta > 0;
    std::vector<std::int64_t> xs(p.packets());
    for (auto& v : xs) v = static_cast<std::int64_t>(rng() % 3);
    const auto x = PacketVector::from_ints(f, xs);
    const auto honest = encode_all(*e, x);
    for (std::size_t j = 0; j < p.clients(); ++j) {
      if (p.missing(j).empty()) continue;
      const auto held = held_packets(p, j, x);
      for_each_error(p.clients(), j, delta, 3, [&](const std::vector<Symbol>& err) {
        std::vector<Symbol> y(honest.symbols().begin(), honest.symbols().end());
        for (std::size_t i = 0; i < y.size(); ++i) y[i] = f.add(y[i], err[i]);
        const auto result = decode_all(*e, j, BroadcastVector(f, y), held);
        violations += result.status != DecodeStatus::kUnique || result.estimate != x;
        ++patterns;
      });
    }
  }
  return {violations == 0 && positive > 0, std::to_string(verified.size()) + " verified encodings (" +
                                               std::to_string(positive) + " with delta>=1), " +
                                               std::to_string(patterns) + " patterns, " +
                                               std::to_string(violations) + " violations"};
}

}  // namespace

int main() {
  Context ctx;
  report("AC1", "fixture diameter and capability", kFixtureSeconds, [&] { return fixture_capability(ctx); });
  report("AC2", "fixture code verification", kFixtureSeconds, [&] { return fixture_verification(ctx); });
  report("AC3", "exhaustive single-adversary sweep", kSweepSeconds, [&] { return single_adversary_sweep(ctx); });
  report("AC4", "diameter oracle equivalence", kOracleSeconds, [&] { return diameter_oracle(ctx); });
  report("AC5", "rank-check oracle equivalence", kOracleSeconds, [&] { return distance_oracle(ctx); });
  report("AC6", "converse distance bound", 0, [&] { return converse_bound(ctx); });
  report("AC7", "random-encoding success floor", kStatisticalSeconds, [&] { return success_floor(ctx); });
  report("AC8", "correction radius", kStatisticalSeconds, [&] { return correction_radius(ctx); });
  std::printf("%d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
