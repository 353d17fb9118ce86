#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cde {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

class NotPrime : public Error {
 public:
  explicit NotPrime(std::uint64_t q)
      : Error("field size " + std::to_string(q) + " is not a prime in [2, 2^31-1]"), q_(q) {}
  std::uint64_t modulus() const noexcept { return q_; }

 private:
  std::uint64_t q_;
};

class FieldMismatch : public Error {
 public:
  FieldMismatch(std::uint32_t lhs, std::uint32_t rhs)
      : Error("operands belong to GF(" + std::to_string(lhs) + ") and GF(" + std::to_string(rhs) + ")") {}
};

class DivideByZero : public Error {
 public:
  DivideByZero() : Error("inverse of zero") {}
};

class NoSolution : public Error {
 public:
  NoSolution() : Error("linear system is inconsistent") {}
};

class NotUnique : public Error {
 public:
  explicit NotUnique(std::size_t rank, std::size_t unknowns)
      : Error("linear system has rank " + std::to_string(rank) + " < " + std::to_string(unknowns) +
              " unknowns") {}
};

class IndexOutOfRange : public Error {
 public:
  using Error::Error;
};

/// Packets (1-based) that no client holds.
class UncoveredPacket : public Error {
 public:
  explicit UncoveredPacket(std::vector<std::size_t> packets);
  const std::vector<std::size_t>& packets() const noexcept { return packets_; }

 private:
  std::vector<std::size_t> packets_;
};

/// Some client cannot recover its missing packets even with zero errors.
class Infeasible : public Error {
 public:
  explicit Infeasible(std::size_t client)
      : Error("client " + std::to_string(client + 1) + " cannot recover its missing packets"), client_(client) {}
  /// 0-based client index.
  std::size_t client() const noexcept { return client_; }

 private:
  std::size_t client_;
};

class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::uint64_t required, std::uint64_t budget)
      : Error("enumeration needs " + std::to_string(required) + " evaluations, budget is " +
              std::to_string(budget)),
        required_(required),
        budget_(budget) {}
  std::uint64_t required() const noexcept { return required_; }
  std::uint64_t budget() const noexcept { return budget_; }

 private:
  std::uint64_t required_;
  std::uint64_t budget_;
};

class SearchExhausted : public Error {
 public:
  explicit SearchExhausted(std::uint64_t attempts)
      : Error("no verified encoding found after " + std::to_string(attempts) +
              " candidates; try a larger field"),
        attempts_(attempts) {}
  std::uint64_t attempts() const noexcept { return attempts_; }

 private:
  std::uint64_t attempts_;
};

/// A nonzero coefficient where the client does not hold the packet.
class SupportViolation : public Error {
 public:
  SupportViolation(std::size_t packet, std::size_t client)
      : Error("nonzero coefficient for packet " + std::to_string(packet + 1) + " at client " +
              std::to_string(client + 1) + ", which does not hold it"),
        packet_(packet),
        client_(client) {}
  std::size_t packet() const noexcept { return packet_; }
  std::size_t client() const noexcept { return client_; }

 private:
  std::size_t packet_;
  std::size_t client_;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace cde
