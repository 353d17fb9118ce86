#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cde/budget.hpp"
#include "cde/codec.hpp"
#include "cde/error.hpp"
#include "cde/field.hpp"

namespace cde {

/// A length-checked vector of field symbols; the tag keeps packet, broadcast
/// and reduced vectors from being mixed up.
template <typename Tag>
class SymbolVector {
 public:
  SymbolVector(PrimeField field, std::vector<Symbol> values) : field_(field), values_(std::move(values)) {
    for (Symbol v : values_) {
      if (v >= field_.modulus()) throw InvalidArgument("vector entry is not a field residue");
    }
  }
  static SymbolVector from_ints(PrimeField field, std::span<const std::int64_t> values) {
    std::vector<Symbol> out;
    out.reserve(values.size());
    for (std::int64_t v : values) out.push_back(field.reduce(v));
    return SymbolVector(field, std::move(out));
  }
  static SymbolVector from_ints(PrimeField field, std::initializer_list<std::int64_t> values) {
    return from_ints(field, std::span<const std::int64_t>(values.begin(), values.size()));
  }

  const PrimeField& field() const noexcept { return field_; }
  std::size_t size() const noexcept { return values_.size(); }
  FieldElement at(std::size_t i) const { return FieldElement(values_.at(i), field_); }
  void set(std::size_t i, const FieldElement& v) {
    if (v.modulus() != field_.modulus()) throw FieldMismatch(field_.modulus(), v.modulus());
    values_.at(i) = v.value();
  }
  std::span<const Symbol> symbols() const noexcept { return values_; }

  friend bool operator==(const SymbolVector&, const SymbolVector&) = default;

 private:
  PrimeField field_;
  std::vector<Symbol> values_;
};

/// X = (x_1, ..., x_k)
using PacketVector = SymbolVector<struct PacketTag>;
/// Y = (y_1, ..., y_n) as heard on the channel
using BroadcastVector = SymbolVector<struct BroadcastTag>;
/// Received broadcasts with the client's own contribution removed.
using ReducedVector = SymbolVector<struct ReducedTag>;

/// Packet index (0-based) -> value for the packets a client holds.
using HeldPackets = std::map<std::size_t, FieldElement>;

enum class DecodeStatus {
  kUnique,     // single closest candidate
  kAmbiguous,  // several candidates tie at the minimum distance
  kFailed,     // decoding was not carried out (enumeration budget)
};

struct DecodeResult {
  std::size_t client = 0;
  /// Decoded value of every missing packet.
  std::map<std::size_t, FieldElement> recovered;
  /// Full estimate: held packets plus decoded ones (decode_all only).
  std::optional<PacketVector> estimate;
  DecodeStatus status = DecodeStatus::kFailed;
  /// Hamming distance between the best re-encoding and the reduced vector.
  std::size_t distance = 0;
  /// Number of candidates achieving `distance`.
  std::uint64_t minimizers = 0;
};

/// y_j = sum_i a_{i,j} x_i
FieldElement encode_broadcast(const EncodingMatrix& encoding, const PacketVector& packets, std::size_t client);
BroadcastVector encode_all(const EncodingMatrix& encoding, const PacketVector& packets);

/// The values of the packets `client` holds, read from X.
HeldPackets held_packets(const CdeProblem& problem, std::size_t client, const PacketVector& packets);

/// z_{j'} = y_{j'} - sum_{i held} a_{i,j'} x_i for j' != client, z_client = 0.
/// `held` must cover exactly the client's holding set.
ReducedVector reduce_received(const EncodingMatrix& encoding, std::size_t client, const BroadcastVector& received,
                              const HeldPackets& held);

/// Nearest codeword of the local code to z by exhaustive search over all
/// q^rows messages.  Throws BudgetExceeded.
DecodeResult min_distance_decode(const LocalCode& code, const ReducedVector& reduced,
                                 std::uint64_t budget = kDefaultBudget);

/// reduce_received followed by min_distance_decode, merged with the held
/// packets into a full estimate.
DecodeResult decode_all(const EncodingMatrix& encoding, std::size_t client, const BroadcastVector& received,
                        const HeldPackets& held, std::uint64_t budget = kDefaultBudget);

}  // namespace cde
