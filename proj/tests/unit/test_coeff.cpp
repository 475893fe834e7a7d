#include <gtest/gtest.h>

#include <random>

#include "superschur/coeff.hpp"

using namespace superschur::coeff;

TEST(Ring, ParsesDescriptors) {
  EXPECT_TRUE(make_ring("Z").is_integers());
  const Ring z5 = make_ring("Z/5");
  EXPECT_EQ(z5.kind(), Ring::Kind::IntegersMod);
  EXPECT_EQ(z5.modulus(), 5);
  EXPECT_TRUE(z5.is_field());
  EXPECT_FALSE(make_ring("Z/6").is_field());
  EXPECT_EQ(z5.to_string(), "Z/5");
}

TEST(Ring, RejectsBadDescriptors) {
  EXPECT_THROW(make_ring("Z/1"), std::invalid_argument);
  EXPECT_THROW(make_ring("Z/0"), std::invalid_argument);
  EXPECT_THROW(make_ring("Q"), std::invalid_argument);
  EXPECT_THROW(make_ring("Z/"), std::invalid_argument);
  EXPECT_THROW(make_ring("Z/-3"), std::invalid_argument);
}

TEST(Ring, ModularArithmetic) {
  const Ring r = make_ring("Z/7");
  EXPECT_EQ(r.reduce(-1), 6);
  EXPECT_EQ(r.mul(3, 5), 1);
  EXPECT_TRUE(r.is_unit(3));
  EXPECT_FALSE(make_ring("Z/6").is_unit(4));
  EXPECT_TRUE(Ring::integers().is_unit(-1));
  EXPECT_FALSE(Ring::integers().is_unit(2));
}

TEST(Ring, AxiomsOnRandomScalars) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<long> dist(-1000, 1000);
  for (const Ring& r : {Ring::integers(), make_ring("Z/5"), make_ring("Z/12")}) {
    for (int trial = 0; trial < 200; ++trial) {
      const Integer a = dist(rng), b = dist(rng), c = dist(rng);
      EXPECT_EQ(r.add(r.add(a, b), c), r.add(a, r.add(b, c)));
      EXPECT_EQ(r.mul(a, r.add(b, c)), r.add(r.mul(a, b), r.mul(a, c)));
      EXPECT_EQ(r.add(a, b), r.add(b, a));
      EXPECT_EQ(r.mul(a, b), r.mul(b, a));
    }
  }
}

TEST(Rank, HandExamples) {
  const Ring z5 = make_ring("Z/5");
  EXPECT_EQ(rank(Matrix::identity(z5, 2)), 2u);
  EXPECT_EQ(rank(Matrix(z5, 3, 4)), 0u);
  EXPECT_EQ(rank(Matrix(z5, 2, 2, {1, 2, 2, 4})), 1u);
}

TEST(Rank, IntegersNeedAPrime) {
  const Matrix m(Ring::integers(), 2, 2, {2, 0, 0, 3});
  EXPECT_THROW(rank(m), std::invalid_argument);
  EXPECT_EQ(rank(m, 5), 2u);
  EXPECT_EQ(rank(m, 2), 1u);
  EXPECT_EQ(rank(m, 3), 1u);
  EXPECT_THROW(rank(Matrix(make_ring("Z/6"), 1, 1, {1})), std::invalid_argument);
  EXPECT_EQ(rank(Matrix(make_ring("Z/6"), 1, 1, {2}), 3), 1u);
  EXPECT_EQ(rank(Matrix(make_ring("Z/6"), 1, 1, {3}), 3), 0u);
}

TEST(Rank, TransposeInvariantOnRandomMatrices) {
  std::mt19937_64 rng(5);
  for (std::uint64_t p : {5ull, 7ull}) {
    const Ring r = Ring::integers_mod(p);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t rows = 1 + rng() % 6, cols = 1 + rng() % 6;
      Matrix m(r, rows, cols);
      for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j)
          if (rng() % 3) m.set(i, j, static_cast<long>(rng() % p));
      EXPECT_EQ(rank(m), rank(m.transpose()));
    }
  }
}

TEST(FpMatrix, NullspaceIsAKernelOfComplementaryDimension) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t rows = 1 + rng() % 5, cols = 1 + rng() % 7;
    FpMatrix a(7, rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) a.set(i, j, static_cast<std::uint64_t>(rng() % 7));
    const FpMatrix k = a.nullspace();
    EXPECT_EQ(k.rows() + a.rank(), cols);
    for (std::size_t b = 0; b < k.rows(); ++b) {
      for (std::size_t i = 0; i < rows; ++i) {
        std::uint64_t acc = 0;
        for (std::size_t j = 0; j < cols; ++j) acc = (acc + a.at(i, j) * k.at(b, j)) % 7;
        EXPECT_EQ(acc, 0u);
      }
    }
  }
}

TEST(Matrix, ProductAndTranspose) {
  const Ring z = Ring::integers();
  const Matrix a(z, 2, 3, {1, 2, 3, 4, 5, 6});
  const Matrix b(z, 3, 1, {1, 0, -1});
  const Matrix ab = a * b;
  EXPECT_EQ(ab.at(0, 0), -2);
  EXPECT_EQ(ab.at(1, 0), -2);
  EXPECT_EQ(a.transpose().transpose(), a);
}

TEST(Integers, BinomialAndDecimal) {
  EXPECT_EQ(binomial(5, 2), 10);
  EXPECT_EQ(binomial(2, 5), 0);
  EXPECT_EQ(binomial(0, 0), 1);
  const Integer big = binomial(200, 100);
  EXPECT_EQ(from_decimal(to_decimal(big)), big);
  EXPECT_EQ(from_decimal("-42"), -42);
  EXPECT_THROW(from_decimal("4x"), std::invalid_argument);
}

TEST(Primes, TrialDivision) {
  EXPECT_TRUE(is_prime(2));
  EXPECT_TRUE(is_prime(10007));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(10001));
}
