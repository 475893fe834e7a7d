#include <gtest/gtest.h>

#include "superschur/schur.hpp"

using namespace superschur;
using namespace superschur::schur;

namespace {

const coeff::Ring kZ = coeff::Ring::integers();

bool is_zero(const std::vector<Integer>& v) {
  for (const auto& c : v)
    if (c != 0) return false;
  return true;
}

bool is_even(const SchurAlgebra& s, const std::vector<Integer>& v) {
  for (std::size_t i = s.labels().module().even_dim(); i < v.size(); ++i)
    if (v[i] != 0) return false;
  return true;
}

}  // namespace

TEST(Weights, Enumeration) {
  EXPECT_EQ(weights(2, 2), (std::vector<Weight>{{2, 0}, {1, 1}, {0, 2}}));
  EXPECT_EQ(weights(3, 3).size(), 10u);
  EXPECT_EQ(weights(1, 4), (std::vector<Weight>{{4}}));
}

TEST(SchurAlgebra, ClassicalDimensions) {
  const auto k = salg::ground(kZ);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 1; d <= 3; ++d) {
      const auto s = schur_algebra(k, n, d);
      EXPECT_EQ(Integer(s.dim()), coeff::binomial(n * n + d - 1, d));
      EXPECT_EQ(s.labels().module().odd_dim(), 0u);
    }
  EXPECT_EQ(schur_algebra(k, 2, 2).dim(), 10u);
  const auto one = schur_algebra(k, 1, 3).algebra();
  EXPECT_EQ(one.table(), salg::ground(kZ).table());
  EXPECT_EQ(one.unit(), salg::ground(kZ).unit());
}

TEST(SchurAlgebra, SuperDimensions) {
  const auto k = salg::ground(kZ);
  const auto c1 = salg::clifford1(kZ);
  EXPECT_EQ(schur_algebra_super(k, 1, 1, 2).dim(), 8u);
  EXPECT_EQ(schur_algebra(c1, 2, 2).dim(), 32u);
  for (std::size_t n = 1; n <= 3; ++n)
    for (std::size_t d = 1; d <= 3; ++d)
      EXPECT_EQ(Integer(schur_algebra(c1, n, d).dim()), divpow::dim_formula(n * n, n * n, d));
  EXPECT_EQ(schur_algebra_super(k, 2, 0, 2).algebra(), schur_algebra(k, 2, 2).algebra());
  const auto q = schur_algebra_super(c1, 1, 1, 1);
  const auto m11 = salg::matrix_superalgebra(c1, 1, 1);
  EXPECT_EQ(q.algebra().table(), m11.table());
  EXPECT_EQ(q.algebra().carrier().parities(), m11.carrier().parities());
  EXPECT_TRUE(salg::check_superalgebra(schur_algebra_super(k, 1, 1, 2).algebra()).passed());
}

TEST(WeightIdempotent, DegreeOneIsTheUnit) {
  const auto c1 = salg::clifford1(kZ);
  const auto s = schur_algebra(c1, 1, 1);
  EXPECT_EQ(weight_idempotent(s, {1}), s.unit());
}

TEST(WeightIdempotent, OmegaInClassicalS22) {
  const auto s = schur_algebra(salg::ground(kZ), 2, 2);
  const auto xi = weight_idempotent(s, {1, 1});
  const auto& lay = s.layout();
  const auto idx = s.labels().find(divpow::Word{lay.index(0, 0, 0), lay.index(0, 1, 1)});
  ASSERT_TRUE(idx.has_value());
  std::vector<Integer> expect(s.dim());
  expect[*idx] = 1;
  EXPECT_EQ(xi, expect);
  EXPECT_EQ(s.multiply(xi, xi), xi);
  std::vector<Integer> total(s.dim());
  for (const auto& l : weights(2, 2)) {
    const auto x = weight_idempotent(s, l);
    for (std::size_t i = 0; i < total.size(); ++i) total[i] += x[i];
  }
  EXPECT_EQ(total, s.unit());
}

TEST(WeightIdempotent, OrthogonalIdempotentDecompositionOfOne) {
  for (const auto& a : {salg::ground(kZ), salg::clifford1(kZ)})
    for (std::size_t n = 1; n <= 3; ++n)
      for (std::size_t d = 1; d <= 3; ++d) {
        const auto s = schur_algebra(a, n, d);
        const auto ws = weights(n, d);
        std::vector<std::vector<Integer>> xis;
        std::vector<Integer> total(s.dim());
        for (const auto& l : ws) {
          xis.push_back(weight_idempotent(s, l));
          EXPECT_TRUE(is_even(s, xis.back()));
          for (std::size_t i = 0; i < total.size(); ++i) total[i] += xis.back()[i];
        }
        EXPECT_EQ(total, s.unit());
        for (std::size_t i = 0; i < xis.size(); ++i)
          for (std::size_t j = 0; j < xis.size(); ++j) {
            const auto p = s.multiply(xis[i], xis[j]);
            if (i == j) EXPECT_EQ(p, xis[i]);
            else EXPECT_TRUE(is_zero(p));
          }
      }
}

TEST(WeightIdempotent, RejectsBadWeights) {
  const auto s = schur_algebra(salg::ground(kZ), 2, 2);
  EXPECT_THROW(weight_idempotent(s, {1, 0}), std::invalid_argument);
  EXPECT_THROW(weight_idempotent(s, {1, 1, 0}), std::invalid_argument);
  EXPECT_THROW(weight_idempotent(schur_algebra_super(salg::ground(kZ), 1, 1, 2), {1, 1}),
               std::invalid_argument);
}

TEST(Surjectivity, DegreeOneAlwaysFull) {
  const auto k = salg::ground(kZ);
  for (std::size_t m = 1; m <= 2; ++m)
    EXPECT_TRUE(composition_surjectivity_check(k, 1, m, 0, {2, 1}, {1, 2}, 5).full_rank());
}

TEST(Surjectivity, LargeMiddleIsFull) {
  const auto k = salg::ground(kZ);
  const auto r = composition_surjectivity_check(k, 2, 2, 2, {1, 1}, {1, 1}, 5);
  EXPECT_TRUE(r.full_rank());
  EXPECT_EQ(r.target_dim, 8u);
}

TEST(Surjectivity, SmallMiddleHasDeficit) {
  const auto k = salg::ground(kZ);
  // Gamma^2 of 1x2 and 2x1 matrices: at most 3*3 = 9 products against dim 10.
  const auto r = composition_surjectivity_check(k, 2, 1, 0, {2, 0}, {2, 0}, 5);
  EXPECT_EQ(r.target_dim, 10u);
  EXPECT_FALSE(r.full_rank());
  EXPECT_LE(r.rank, 9u);
}

TEST(Surjectivity, RejectsNonPrime) {
  EXPECT_THROW(composition_surjectivity_check(salg::ground(kZ), 1, 1, 0, {1, 0}, {1, 0}, 6),
               std::invalid_argument);
  EXPECT_THROW(composition_surjectivity_check(salg::ground(coeff::make_ring("Z/7")), 1, 1, 0,
                                              {1, 0}, {1, 0}, 5),
               std::invalid_argument);
}
