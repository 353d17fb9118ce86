#include <gtest/gtest.h>

#include <random>
#include <vector>

#include "cde/error.hpp"
#include "cde/field.hpp"
#include "oracles/oracles.hpp"

using namespace cde;

TEST(PrimeField, RejectsNonPrimes) {
  EXPECT_THROW(PrimeField(0), NotPrime);
  EXPECT_THROW(PrimeField(1), NotPrime);
  EXPECT_THROW(PrimeField(4), NotPrime);
  EXPECT_THROW(PrimeField(1001), NotPrime);
  EXPECT_THROW(PrimeField(PrimeField::kMaxModulus + 2), NotPrime);
  EXPECT_NO_THROW(PrimeField(2));
  EXPECT_NO_THROW(PrimeField(PrimeField::kMaxModulus));
}

TEST(PrimeField, PrimalityTable) {
  const std::vector<std::uint64_t> primes = {2, 3, 5, 7, 11, 13, 1009, 65521, 2147483647};
  for (auto p : primes) EXPECT_TRUE(is_prime(p)) << p;
  for (std::uint64_t c : {0ull, 1ull, 9ull, 91ull, 561ull, 1024ull, 2147483649ull}) EXPECT_FALSE(is_prime(c)) << c;
}

TEST(PrimeField, SmallFieldArithmetic) {
  const PrimeField f(3);
  EXPECT_EQ((f.element(2) + f.element(2)).value(), 1u);
  EXPECT_EQ((f.element(2) * f.element(2)).value(), 1u);
  EXPECT_EQ(f.element(2).inverse().value(), 2u);
  EXPECT_EQ((-f.element(1)).value(), 2u);
  EXPECT_EQ(f.element(-1).value(), 2u);
  EXPECT_EQ(f.element(7).value(), 1u);
  const PrimeField g(1009);
  EXPECT_EQ((g.element(1008) * g.element(1008)).value(), 1u);
  EXPECT_EQ(inv(g.element(2)).value(), 505u);
}

TEST(PrimeField, DivisionByZero) {
  const PrimeField f(5);
  EXPECT_THROW(f.zero().inverse(), DivideByZero);
  EXPECT_THROW(f.one() / f.zero(), DivideByZero);
}

TEST(PrimeField, MixedFieldsThrow) {
  const PrimeField f(3), g(5);
  EXPECT_THROW(f.one() + g.one(), FieldMismatch);
  EXPECT_THROW(f.one() * g.one(), FieldMismatch);
}

TEST(PrimeField, AxiomsHoldExhaustivelyInSmallFields) {
  for (std::uint64_t q : {2u, 3u, 5u, 7u}) {
    const PrimeField f(q);
    for (std::uint64_t a = 0; a < q; ++a) {
      const auto x = f.element(static_cast<std::int64_t>(a));
      EXPECT_EQ(x + f.zero(), x);
      EXPECT_EQ(x * f.one(), x);
      EXPECT_TRUE((x + (-x)).is_zero());
      if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), f.one());
      for (std::uint64_t b = 0; b < q; ++b) {
        const auto y = f.element(static_cast<std::int64_t>(b));
        EXPECT_EQ(x + y, y + x);
        EXPECT_EQ(x * y, y * x);
        for (std::uint64_t c = 0; c < q; ++c) {
          const auto z = f.element(static_cast<std::int64_t>(c));
          EXPECT_EQ((x + y) + z, x + (y + z));
          EXPECT_EQ((x * y) * z, x * (y * z));
          EXPECT_EQ(x * (y + z), x * y + x * z);
        }
      }
    }
  }
}

TEST(PrimeField, AxiomsHoldOnRandomSamples) {
  std::mt19937_64 rng(3);
  for (std::uint64_t q : {1009u, 2147483647u}) {
    const PrimeField f(q);
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(q) - 1);
    for (int i = 0; i < 2000; ++i) {
      const auto x = f.element(d(rng)), y = f.element(d(rng)), z = f.element(d(rng));
      EXPECT_EQ(x * (y + z), x * y + x * z);
      EXPECT_EQ((x - y) + y, x);
      if (!y.is_zero()) EXPECT_EQ((x / y) * y, x);
    }
  }
}

TEST(Matrix, ConstructionAndAccess) {
  const PrimeField f(3);
  const auto m = Matrix::from_rows(f, {{1, 2, 3}, {4, -1, 0}});
  EXPECT_EQ(m.rows(), 2u);
  EXPECT_EQ(m.cols(), 3u);
  EXPECT_EQ(m.symbol(0, 2), 0u);
  EXPECT_EQ(m.symbol(1, 0), 1u);
  EXPECT_EQ(m.symbol(1, 1), 2u);
  EXPECT_EQ(m.transpose().symbol(2, 1), 0u);
  EXPECT_THROW(Matrix::from_rows(f, {{1, 2}, {1}}), InvalidArgument);
  EXPECT_THROW(m.at(2, 0), IndexOutOfRange);
}

TEST(Matrix, RankExamples) {
  const PrimeField f(3);
  EXPECT_EQ(rank(Matrix::identity(f, 4)), 4u);
  EXPECT_EQ(rank(Matrix(f, 3, 5)), 0u);
  EXPECT_EQ(rank(Matrix::from_rows(f, {{1, 2}, {2, 1}})), 1u);  // second row = 2 * first mod 3
  EXPECT_EQ(rank(Matrix::from_rows(PrimeField(5), {{1, 2}, {2, 1}})), 2u);
  const auto e = Matrix::from_rows(f, oracle::example2_entries());
  const std::vector<std::size_t> missing = {1, 3, 4};
  EXPECT_EQ(rank(e.select_rows(missing)), 3u);
}

TEST(Matrix, RankInvariants) {
  std::mt19937_64 rng(5);
  for (std::uint64_t q : {2u, 3u, 5u, 1009u}) {
    const PrimeField f(q);
    std::uniform_int_distribution<std::int64_t> d(0, static_cast<std::int64_t>(q) - 1);
    std::uniform_int_distribution<std::size_t> dim(1, 7);
    for (int rep = 0; rep < 100; ++rep) {
      const std::size_t r = dim(rng), c = dim(rng);
      std::vector<std::vector<std::int64_t>> rows(r, std::vector<std::int64_t>(c));
      for (auto& row : rows) {
        for (auto& v : row) v = (d(rng) % 3 == 0) ? 0 : d(rng);
      }
      const auto m = Matrix::from_rows(f, rows);
      const std::size_t rk = rank(m);
      EXPECT_LE(rk, std::min(r, c));
      EXPECT_EQ(rank(m.transpose()), rk);
      auto swapped = rows;
      std::swap(swapped.front(), swapped.back());
      EXPECT_EQ(rank(Matrix::from_rows(f, swapped)), rk);
      auto scaled = rows;
      const std::int64_t s = 1 + d(rng) % (static_cast<std::int64_t>(q) - 1);
      for (auto& v : scaled[0]) v *= s;
      EXPECT_EQ(rank(Matrix::from_rows(f, scaled)), rk);
    }
  }
}

TEST(Matrix, SolveUnique) {
  const PrimeField f(3);
  // Client 1 in the running example: rows {2,4,5} of E restricted to the
  // broadcasts, transposed to the system E^T x = y.
  const auto e = Matrix::from_rows(f, oracle::example2_entries());
  const std::vector<std::size_t> rows = {1, 3, 4};
  const auto a = e.select_rows(rows).transpose();
  const std::vector<FieldElement> x = {f.element(2), f.element(1), f.element(2)};
  std::vector<FieldElement> b;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    FieldElement acc = f.zero();
    for (std::size_t j = 0; j < a.cols(); ++j) acc += a.at(i, j) * x[j];
    b.push_back(acc);
  }
  EXPECT_EQ(solve_unique(a, b), x);
}

TEST(Matrix, SolveUniqueErrors) {
  const PrimeField f(5);
  const auto singular = Matrix::from_rows(f, {{1, 1}, {2, 2}});
  const std::vector<FieldElement> consistent = {f.element(1), f.element(2)};
  const std::vector<FieldElement> inconsistent = {f.element(1), f.element(3)};
  EXPECT_THROW(solve_unique(singular, consistent), NotUnique);
  EXPECT_THROW(solve_unique(singular, inconsistent), NoSolution);
  const std::vector<FieldElement> wrong_len = {f.element(1)};
  EXPECT_THROW(solve_unique(singular, wrong_len), InvalidArgument);
}
