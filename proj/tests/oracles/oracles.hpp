#pragma once

// Test-only reference computations.  Each one takes a different route from
// the library code it cross-checks: permutation search instead of augmenting
// paths, column-subset enumeration instead of the Hall formula, and plain
// matrix-vector products instead of incremental kernel updates.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "cde/field.hpp"
#include "cde/model.hpp"

namespace cde::oracle {

using Holdings = std::vector<std::vector<std::int64_t>>;  // 1-based

inline bool held(const CdeProblem& p, std::size_t client, std::size_t packet) {
  const auto& h = p.holding(client);
  return std::find(h.begin(), h.end(), packet) != h.end();
}

/// True iff rows can be matched one-to-one onto cols (|rows| == |cols|) along
/// support edges, by trying every permutation.
inline bool perfect_matching(const CdeProblem& p, const std::vector<std::size_t>& rows,
                             std::vector<std::size_t> cols) {
  if (rows.size() != cols.size()) return false;
  std::sort(cols.begin(), cols.end());
  do {
    bool ok = true;
    for (std::size_t t = 0; t < rows.size() && ok; ++t) ok = held(p, cols[t], rows[t]);
    if (ok) return true;
  } while (std::next_permutation(cols.begin(), cols.end()));
  return false;
}

template <typename Fn>
void subsets_of_size(std::size_t n, std::size_t r, Fn&& fn) {
  std::vector<bool> mask(n, false);
  std::fill(mask.begin(), mask.begin() + static_cast<std::ptrdiff_t>(r), true);
  do {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask[i]) s.push_back(i);
    }
    fn(s);
  } while (std::prev_permutation(mask.begin(), mask.end()));
}

/// Some |missing|-subset of `cols` admits a perfect matching.
inline bool generically_full(const CdeProblem& p, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
  if (cols.size() < rows.size()) return false;
  bool found = false;
  subsets_of_size(cols.size(), rows.size(), [&](const std::vector<std::size_t>& pick) {
    if (found) return;
    std::vector<std::size_t> chosen;
    for (std::size_t i : pick) chosen.push_back(cols[i]);
    found = perfect_matching(p, rows, chosen);
  });
  return found;
}

/// Diameter by definition: smallest s such that every s columns are
/// generically full rank.  Empty when no s <= n works.
inline std::optional<std::size_t> brute_diameter(const CdeProblem& p, std::size_t client) {
  const auto& rows = p.missing(client);
  if (rows.empty()) return 0;
  const std::size_t n = p.clients();
  for (std::size_t s = rows.size(); s <= n; ++s) {
    bool all = true;
    subsets_of_size(n, s, [&](const std::vector<std::size_t>& cols) {
      if (all) all = generically_full(p, rows, cols);
    });
    if (all) return s;
  }
  return std::nullopt;
}

/// Codeword m * G computed directly.
inline std::vector<std::uint64_t> encode(const Matrix& g, const std::vector<std::uint64_t>& m) {
  const std::uint64_t q = g.field().modulus();
  std::vector<std::uint64_t> c(g.cols(), 0);
  for (std::size_t r = 0; r < g.rows(); ++r) {
    for (std::size_t col = 0; col < g.cols(); ++col) c[col] = (c[col] + m[r] * g.symbol(r, col)) % q;
  }
  return c;
}

/// Minimum weight over nonzero messages by direct multiplication.
inline std::size_t brute_min_distance(const Matrix& g) {
  const std::uint64_t q = g.field().modulus();
  std::vector<std::uint64_t> m(g.rows(), 0);
  std::size_t best = g.cols() + 1;
  while (true) {
    std::size_t t = 0;
    while (t < m.size() && ++m[t] == q) m[t++] = 0;
    if (t == m.size()) break;
    const auto c = encode(g, m);
    best = std::min<std::size_t>(best, static_cast<std::size_t>(std::count_if(c.begin(), c.end(),
                                                                               [](auto v) { return v != 0; })));
  }
  return best;
}

/// Random problem with full coverage: each (client, packet) held with
/// probability `density`, then every uncovered packet given to a random client.
inline ProblemSpec random_problem(std::mt19937_64& rng, std::size_t max_k, std::size_t max_n, double density) {
  std::uniform_int_distribution<std::size_t> kd(1, max_k), nd(1, max_n);
  std::bernoulli_distribution coin(density);
  ProblemSpec spec;
  spec.k = static_cast<std::int64_t>(kd(rng));
  spec.n = static_cast<std::int64_t>(nd(rng));
  spec.holdings.assign(static_cast<std::size_t>(spec.n), {});
  std::vector<bool> covered(static_cast<std::size_t>(spec.k), false);
  for (auto& h : spec.holdings) {
    for (std::int64_t i = 1; i <= spec.k; ++i) {
      if (coin(rng)) {
        h.push_back(i);
        covered[static_cast<std::size_t>(i - 1)] = true;
      }
    }
  }
  std::uniform_int_distribution<std::size_t> who(0, static_cast<std::size_t>(spec.n) - 1);
  for (std::size_t i = 0; i < covered.size(); ++i) {
    if (!covered[i]) spec.holdings[who(rng)].push_back(static_cast<std::int64_t>(i + 1));
  }
  return spec;
}

/// The running example fixture (1-based holdings).
inline ProblemSpec example1() {
  return ProblemSpec{6, 6, 3, {{1, 3, 6}, {2, 3, 4}, {1, 2, 5}, {3, 4, 5}, {2, 4, 6}, {1, 5, 6}}};
}

inline std::vector<std::vector<std::int64_t>> example2_entries() {
  return {{1, 0, 1, 0, 0, 1}, {0, 1, 1, 0, 1, 0}, {1, 1, 0, 1, 0, 0},
          {0, 1, 0, 2, 2, 0}, {0, 0, 1, 1, 0, 2}, {1, 0, 0, 0, 1, 2}};
}

}  // namespace cde::oracle
