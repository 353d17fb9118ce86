#include "cde/field.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "cde/error.hpp"

namespace cde {

bool is_prime(std::uint64_t q) noexcept {
  if (q < 2) return false;
  if (q % 2 == 0) return q == 2;
  for (std::uint64_t d = 3; d * d <= q; d += 2) {
    if (q % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint64_t q) : q_(0) {
  if (q > kMaxModulus || !is_prime(q)) throw NotPrime(q);
  q_ = static_cast<Symbol>(q);
}

PrimeField make_field(std::uint64_t q) { return PrimeField(q); }

Symbol PrimeField::reduce(std::int64_t value) const noexcept {
  const std::int64_t r = value % static_cast<std::int64_t>(q_);
  return static_cast<Symbol>(r < 0 ? r + q_ : r);
}

Symbol PrimeField::inv(Symbol a) const {
  if (a % q_ == 0) throw DivideByZero();
  // extended Euclid on (a, q)
  std::int64_t r0 = q_, r1 = a;
  std::int64_t t0 = 0, t1 = 1;
  while (r1 != 0) {
    const std::int64_t quot = r0 / r1;
    r0 = std::exchange(r1, r0 - quot * r1);
    t0 = std::exchange(t1, t0 - quot * t1);
  }
  return reduce(t0);
}

FieldElement PrimeField::element(std::int64_t value) const { return FieldElement(reduce(value), *this); }
FieldElement PrimeField::zero() const { return FieldElement(0, *this); }
FieldElement PrimeField::one() const { return FieldElement(1 % q_, *this); }

FieldElement::FieldElement(Symbol value, PrimeField field) : value_(value), q_(field.modulus()) {
  if (value >= q_) {
    throw InvalidArgument("value " + std::to_string(value) + " is not a residue mod " + std::to_string(q_));
  }
}

Symbol FieldElement::check_same(const FieldElement& rhs) const {
  if (q_ != rhs.q_) throw FieldMismatch(q_, rhs.q_);
  return q_;
}

FieldElement FieldElement::operator+(const FieldElement& rhs) const {
  check_same(rhs);
  return {field().add(value_, rhs.value_), q_};
}

FieldElement FieldElement::operator-(const FieldElement& rhs) const {
  check_same(rhs);
  return {field().sub(value_, rhs.value_), q_};
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  check_same(rhs);
  return {field().mul(value_, rhs.value_), q_};
}

FieldElement FieldElement::operator/(const FieldElement& rhs) const {
  check_same(rhs);
  return {field().mul(value_, field().inv(rhs.value_)), q_};
}

FieldElement FieldElement::operator-() const { return {field().neg(value_), q_}; }

FieldElement FieldElement::inverse() const { return {field().inv(value_), q_}; }

FieldElement inv(const FieldElement& a) { return a.inverse(); }

Matrix::Matrix(PrimeField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {}

Matrix Matrix::from_rows(PrimeField field, const std::vector<std::vector<std::int64_t>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  Matrix m(field, rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw InvalidArgument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.data_[r * cols + c] = field.reduce(rows[r][c]);
  }
  return m;
}

Matrix Matrix::from_rows(PrimeField field, std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  std::vector<std::vector<std::int64_t>> copy;
  copy.reserve(rows.size());
  for (const auto& r : rows) copy.emplace_back(r);
  return from_rows(field, copy);
}

Matrix Matrix::identity(PrimeField field, std::size_t size) {
  Matrix m(field, size, size);
  for (std::size_t i = 0; i < size; ++i) m.data_[i * size + i] = 1 % field.modulus();
  return m;
}

FieldElement Matrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix index out of range");
  return FieldElement(data_[r * cols_ + c], field_);
}

void Matrix::set(std::size_t r, std::size_t c, Symbol value) {
  if (r >= rows_ || c >= cols_) throw IndexOutOfRange("matrix index out of range");
  if (value >= field_.modulus()) throw InvalidArgument("entry is not a field residue");
  data_[r * cols_ + c] = value;
}

void Matrix::set(std::size_t r, std::size_t c, const FieldElement& value) {
  if (value.modulus() != field_.modulus()) throw FieldMismatch(field_.modulus(), value.modulus());
  set(r, c, value.value());
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) t.data_[c * rows_ + r] = data_[r * cols_ + c];
  }
  return t;
}

Matrix Matrix::select_rows(std::span<const std::size_t> indices) const {
  Matrix m(field_, indices.size(), cols_);
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (indices[i] >= rows_) throw IndexOutOfRange("row index out of range");
    std::copy_n(data_.begin() + static_cast<std::ptrdiff_t>(indices[i] * cols_), cols_,
                m.data_.begin() + static_cast<std::ptrdiff_t>(i * cols_));
  }
  return m;
}

Matrix Matrix::select_columns(std::span<const std::size_t> indices) const {
  Matrix m(field_, rows_, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) {
    if (indices[j] >= cols_) throw IndexOutOfRange("column index out of range");
  }
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t j = 0; j < indices.size(); ++j) {
      m.data_[r * indices.size() + j] = data_[r * cols_ + indices[j]];
    }
  }
  return m;
}

namespace {

// Reduces m in place to row echelon form over its first `pivot_cols` columns
// and returns the pivot column of each pivot row.  With `full`, rows above
// each pivot are cleared too (reduced echelon form).
std::vector<std::size_t> eliminate(Matrix& m, std::size_t pivot_cols, bool full) {
  const PrimeField& f = m.field();
  const Symbol q = f.modulus();
  std::vector<std::size_t> pivots;
  std::size_t top = 0;
  for (std::size_t c = 0; c < pivot_cols && top < m.rows(); ++c) {
    std::size_t p = top;
    while (p < m.rows() && m.symbol(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != top) std::swap_ranges(m.row(p).begin(), m.row(p).end(), m.row(top).begin());
    const Symbol scale = f.inv(m.symbol(top, c));
    for (Symbol& x : m.row(top)) x = f.mul(x, scale);
    for (std::size_t r = full ? 0 : top + 1; r < m.rows(); ++r) {
      if (r == top || m.symbol(r, c) == 0) continue;
      kernels::axpy_mod(m.row(r), m.row(top), f.neg(m.symbol(r, c)), q);
    }
    pivots.push_back(c);
    ++top;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const Matrix& m) {
  Matrix work = m;
  return eliminate(work, work.cols(), false).size();
}

std::vector<FieldElement> solve_unique(const Matrix& a, std::span<const FieldElement> b) {
  if (b.size() != a.rows()) throw InvalidArgument("right-hand side length does not match row count");
  const PrimeField& f = a.field();
  Matrix aug(f, a.rows(), a.cols() + 1);
  for (std::size_t r = 0; r < a.rows(); ++r) {
    if (b[r].modulus() != f.modulus()) throw FieldMismatch(f.modulus(), b[r].modulus());
    std::copy(a.row(r).begin(), a.row(r).end(), aug.row(r).begin());
    aug.set(r, a.cols(), b[r].value());
  }
  const auto pivots = eliminate(aug, a.cols(), true);
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r) {
    if (aug.symbol(r, a.cols()) != 0) throw NoSolution();
  }
  if (pivots.size() < a.cols()) throw NotUnique(pivots.size(), a.cols());
  std::vector<FieldElement> x;
  x.reserve(a.cols());
  for (std::size_t r = 0; r < a.cols(); ++r) x.push_back(aug.at(r, a.cols()));
  return x;
}

}  // namespace cde
