#include "cde/decoder.hpp"

#include <limits>

#include "cde/detail/enumerate.hpp"
#include "cde/error.hpp"

namespace cde {
namespace {

void require_field(const PrimeField& expected, const PrimeField& actual) {
  if (expected != actual) throw FieldMismatch(expected.modulus(), actual.modulus());
}

}  // namespace

FieldElement encode_broadcast(const EncodingMatrix& encoding, const PacketVector& packets, std::size_t client) {
  const CdeProblem& problem = encoding.problem();
  if (client >= problem.clients()) throw IndexOutOfRange("client index out of range");
  if (packets.size() != problem.packets()) throw InvalidArgument("packet vector must have length k");
  require_field(encoding.field(), packets.field());
  const PrimeField& f = encoding.field();
  Symbol y = 0;
  for (std::size_t i : problem.holding(client)) {
    y = f.add(y, f.mul(encoding.coefficients().symbol(i, client), packets.symbols()[i]));
  }
  return FieldElement(y, f);
}

BroadcastVector encode_all(const EncodingMatrix& encoding, const PacketVector& packets) {
  std::vector<Symbol> y;
  for (std::size_t j = 0; j < encoding.problem().clients(); ++j) {
    y.push_back(encode_broadcast(encoding, packets, j).value());
  }
  return BroadcastVector(encoding.field(), std::move(y));
}

HeldPackets held_packets(const CdeProblem& problem, std::size_t client, const PacketVector& packets) {
  if (packets.size() != problem.packets()) throw InvalidArgument("packet vector must have length k");
  HeldPackets held;
  for (std::size_t i : problem.holding(client)) held.emplace(i, packets.at(i));
  return held;
}

ReducedVector reduce_received(const EncodingMatrix& encoding, std::size_t client, const BroadcastVector& received,
                              const HeldPackets& held) {
  const CdeProblem& problem = encoding.problem();
  if (client >= problem.clients()) throw IndexOutOfRange("client index out of range");
  if (received.size() != problem.clients()) throw InvalidArgument("broadcast vector must have length n");
  require_field(encoding.field(), received.field());
  const auto& holding = problem.holding(client);
  if (held.size() != holding.size()) throw InvalidArgument("held packets must cover exactly the holding set");
  for (std::size_t i : holding) {
    const auto it = held.find(i);
    if (it == held.end()) {
      throw InvalidArgument("missing value for held packet " + std::to_string(i + 1));
    }
    if (it->second.modulus() != encoding.field().modulus()) {
      throw FieldMismatch(encoding.field().modulus(), it->second.modulus());
    }
  }

  const PrimeField& f = encoding.field();
  const Matrix& a = encoding.coefficients();
  std::vector<Symbol> z(problem.clients(), 0);
  for (std::size_t j = 0; j < problem.clients(); ++j) {
    if (j == client) continue;
    Symbol known = 0;
    for (const auto& [i, x] : held) known = f.add(known, f.mul(a.symbol(i, j), x.value()));
    z[j] = f.sub(received.symbols()[j], known);
  }
  return ReducedVector(f, std::move(z));
}

DecodeResult min_distance_decode(const LocalCode& code, const ReducedVector& reduced, std::uint64_t budget) {
  const Matrix& g = code.generator;
  if (reduced.size() != g.cols()) throw InvalidArgument("reduced vector must have length n");
  require_field(g.field(), reduced.field());
  const std::uint64_t candidates = saturating_pow(g.field().modulus(), g.rows());
  if (candidates > budget) throw BudgetExceeded(candidates, budget);

  DecodeResult result;
  result.client = code.client;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<Symbol> argmin(g.rows(), 0);
  std::uint64_t ties = 0;
  const auto z = reduced.symbols();
  detail::for_each_codeword(g, [&](std::span<const Symbol> message, std::span<const Symbol> codeword) {
    const std::size_t d = kernels::count_mismatch(codeword, z);
    if (d < best) {
      best = d;
      ties = 1;
      std::copy(message.begin(), message.end(), argmin.begin());
    } else if (d == best) {
      ++ties;
    }
    return true;
  });

  result.distance = best;
  result.minimizers = ties;
  result.status = ties == 1 ? DecodeStatus::kUnique : DecodeStatus::kAmbiguous;
  for (std::size_t t = 0; t < code.rows.size(); ++t) {
    result.recovered.emplace(code.rows[t], FieldElement(argmin[t], g.field()));
  }
  return result;
}

DecodeResult decode_all(const EncodingMatrix& encoding, std::size_t client, const BroadcastVector& received,
                        const HeldPackets& held, std::uint64_t budget) {
  const ReducedVector z = reduce_received(encoding, client, received, held);
  DecodeResult result = min_distance_decode(local_receiving_matrix(encoding, client), z, budget);
  std::vector<Symbol> estimate(encoding.problem().packets(), 0);
  for (const auto& [i, x] : held) estimate[i] = x.value();
  for (const auto& [i, x] : result.recovered) estimate[i] = x.value();
  result.estimate = PacketVector(encoding.field(), std::move(estimate));
  return result;
}

}  // namespace cde
