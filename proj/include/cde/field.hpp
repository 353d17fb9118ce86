#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "cde/kernels.hpp"

namespace cde {

using kernels::Symbol;

class FieldElement;

/// The prime field GF(q), 2 <= q <= 2^31 - 1.  Primality is checked on
/// construction; the bound keeps every product inside 64-bit arithmetic.
class PrimeField {
 public:
  static constexpr std::uint64_t kMaxModulus = (std::uint64_t{1} << 31) - 1;

  /// Throws NotPrime.
  explicit PrimeField(std::uint64_t q);

  Symbol modulus() const noexcept { return q_; }

  /// Reduces any integer (including negatives) into the field.
  FieldElement element(std::int64_t value) const;
  FieldElement zero() const;
  FieldElement one() const;

  Symbol add(Symbol a, Symbol b) const noexcept {
    const Symbol s = a + b;
    return s >= q_ ? s - q_ : s;
  }
  Symbol sub(Symbol a, Symbol b) const noexcept { return a >= b ? a - b : a + (q_ - b); }
  Symbol neg(Symbol a) const noexcept { return a == 0 ? 0 : q_ - a; }
  Symbol mul(Symbol a, Symbol b) const noexcept {
    return static_cast<Symbol>(static_cast<std::uint64_t>(a) * b % q_);
  }
  /// Throws DivideByZero.
  Symbol inv(Symbol a) const;
  Symbol reduce(std::int64_t value) const noexcept;

  friend bool operator==(const PrimeField&, const PrimeField&) = default;

 private:
  friend class FieldElement;
  struct Trusted {};
  PrimeField(Trusted, Symbol q) noexcept : q_(q) {}
  static PrimeField from_trusted(Symbol q) noexcept { return PrimeField(Trusted{}, q); }

  Symbol q_;
};

/// Convenience factory mirroring the constructor.
PrimeField make_field(std::uint64_t q);

bool is_prime(std::uint64_t q) noexcept;

/// A residue tagged with its modulus; mixing fields throws FieldMismatch.
class FieldElement {
 public:
  FieldElement(Symbol value, PrimeField field);

  Symbol value() const noexcept { return value_; }
  PrimeField field() const noexcept { return PrimeField::from_trusted(q_); }
  Symbol modulus() const noexcept { return q_; }

  FieldElement operator+(const FieldElement& rhs) const;
  FieldElement operator-(const FieldElement& rhs) const;
  FieldElement operator*(const FieldElement& rhs) const;
  FieldElement operator/(const FieldElement& rhs) const;
  FieldElement operator-() const;
  FieldElement inverse() const;

  FieldElement& operator+=(const FieldElement& rhs) { return *this = *this + rhs; }
  FieldElement& operator-=(const FieldElement& rhs) { return *this = *this - rhs; }
  FieldElement& operator*=(const FieldElement& rhs) { return *this = *this * rhs; }

  bool is_zero() const noexcept { return value_ == 0; }

  friend bool operator==(const FieldElement&, const FieldElement&) = default;

 private:
  FieldElement(Symbol value, Symbol q) noexcept : value_(value), q_(q) {}
  Symbol check_same(const FieldElement& rhs) const;

  Symbol value_;
  Symbol q_;
};

FieldElement inv(const FieldElement& a);

/// Dense row-major matrix over a prime field.
class Matrix {
 public:
  Matrix(PrimeField field, std::size_t rows, std::size_t cols);
  /// Entries are reduced into the field.
  static Matrix from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows);
  static Matrix from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows);
  static Matrix identity(PrimeField field, std::size_t size);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const PrimeField& field() const noexcept { return field_; }

  FieldElement at(std::size_t r, std::size_t c) const;
  Symbol symbol(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Symbol value);
  void set(std::size_t r, std::size_t c, const FieldElement& value);

  std::span<const Symbol> row(std::size_t r) const noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<Symbol> row(std::size_t r) noexcept { return {data_.data() + r * cols_, cols_}; }
  std::span<const Symbol> symbols() const noexcept { return data_; }

  Matrix transpose() const;
  Matrix select_rows(std::span<const std::size_t> indices) const;
  Matrix select_columns(std::span<const std::size_t> indices) const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  PrimeField field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Symbol> data_;
};

/// Row rank by exact Gaussian elimination.
std::size_t rank(const Matrix& m);

/// The unique x with a * x = b.  Throws NoSolution or NotUnique.
std::vector<FieldElement> solve_unique(const Matrix& a, std::span<const FieldElement> b);

}  // namespace cde
