#include <gtest/gtest.h>

#include "superschur/salg.hpp"

using namespace superschur;
using namespace superschur::salg;

namespace {

const Ring kZ = Ring::integers();

std::vector<Integer> coords(const SuperAlgebra& a, std::initializer_list<std::pair<std::size_t, long>> terms) {
  std::vector<Integer> v(a.dim());
  for (auto [i, c] : terms) v[i] = c;
  return v;
}

}  // namespace

TEST(Clifford, Relations) {
  const auto c1 = clifford1(kZ);
  EXPECT_EQ(c1.carrier().even_dim(), 1u);
  EXPECT_EQ(c1.carrier().odd_dim(), 1u);
  EXPECT_EQ(c1.multiply(c1.basis_vector(0), c1.basis_vector(1)), c1.basis_vector(1));
  EXPECT_EQ(c1.multiply(c1.basis_vector(1), c1.basis_vector(1)), c1.basis_vector(0));
  const auto minus = clifford1(kZ, CliffordSign::Minus);
  EXPECT_EQ(minus.multiply(minus.basis_vector(1), minus.basis_vector(1)), coords(minus, {{0, -1}}));
  EXPECT_TRUE(check_superalgebra(c1).passed());
  EXPECT_TRUE(check_superalgebra(minus).passed());
}

TEST(Tensor, GroundIsNeutral) {
  const auto c1 = clifford1(kZ);
  const auto t = tensor_algebra(ground(kZ), c1);
  EXPECT_EQ(t.table(), c1.table());
  EXPECT_EQ(t.unit(), c1.unit());
}

TEST(Tensor, OddFactorsAnticommute) {
  const auto c1 = clifford1(kZ);
  const auto t = tensor_algebra(c1, c1);
  const auto tm = supermod::tensor(c1.carrier(), c1.carrier());
  const auto left = t.basis_vector(tm.index(1, 0));   // c (x) 1
  const auto right = t.basis_vector(tm.index(0, 1));  // 1 (x) c
  const auto lr = t.multiply(left, right);
  const auto rl = t.multiply(right, left);
  EXPECT_EQ(lr, t.basis_vector(tm.index(1, 1)));
  for (std::size_t i = 0; i < lr.size(); ++i) EXPECT_EQ(lr[i], -rl[i]);
  EXPECT_EQ(t.unit(), t.basis_vector(tm.index(0, 0)));
  EXPECT_TRUE(check_superalgebra(t).passed());
}

TEST(Tensor, AssociativeUpToFlattening) {
  const auto a = clifford1(kZ), b = matrix_superalgebra(ground(kZ), 1, 1), c = clifford1(kZ);
  const auto ab = supermod::tensor(a.carrier(), b.carrier());
  const auto bc = supermod::tensor(b.carrier(), c.carrier());
  const auto left = tensor_algebra(tensor_algebra(a, b), c);
  const auto right = tensor_algebra(a, tensor_algebra(b, c));
  const auto lmod = supermod::tensor(ab.module, c.carrier());
  const auto rmod = supermod::tensor(a.carrier(), bc.module);
  std::vector<std::size_t> to_right(left.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j)
      for (std::size_t k = 0; k < c.dim(); ++k)
        to_right[lmod.index(ab.index(i, j), k)] = rmod.index(i, bc.index(j, k));
  for (std::size_t x = 0; x < left.dim(); ++x) {
    EXPECT_EQ(left.unit()[x], right.unit()[to_right[x]]);
    for (std::size_t y = 0; y < left.dim(); ++y) {
      coeff::SparseVector mapped;
      for (const auto& [k, v] : left.product(x, y)) mapped.push_back({static_cast<std::uint32_t>(to_right[k]), v});
      std::sort(mapped.begin(), mapped.end(), [](auto& p, auto& q) { return p.index < q.index; });
      EXPECT_EQ(mapped, right.product(to_right[x], to_right[y]));
    }
  }
}

TEST(Matrix, OrdinaryMatrixUnits) {
  const auto m = matrix_superalgebra(ground(kZ), 2, 0);
  EXPECT_EQ(m.dim(), 4u);
  EXPECT_EQ(m.carrier().odd_dim(), 0u);
  const MatrixLayout lay(ground(kZ), 2, 0);
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) {
          const auto p = m.multiply(m.basis_vector(lay.index(0, i, j)), m.basis_vector(lay.index(0, k, l)));
          const auto expect = j == k ? m.basis_vector(lay.index(0, i, l)) : std::vector<Integer>(4);
          EXPECT_EQ(p, expect);
        }
}

TEST(Matrix, SuperParities) {
  const auto m = matrix_superalgebra(ground(kZ), 1, 1);
  const MatrixLayout lay(ground(kZ), 1, 1);
  EXPECT_EQ(m.carrier().parity(lay.index(0, 0, 0)), Parity::Even);
  EXPECT_EQ(m.carrier().parity(lay.index(0, 0, 1)), Parity::Odd);
  EXPECT_EQ(m.carrier().parity(lay.index(0, 1, 0)), Parity::Odd);
  EXPECT_EQ(m.carrier().parity(lay.index(0, 1, 1)), Parity::Even);
  EXPECT_TRUE(check_superalgebra(m).passed());
}

TEST(Matrix, DimensionCounts) {
  const auto c1 = clifford1(kZ);
  for (std::size_t n = 0; n <= 2; ++n)
    for (std::size_t m = 0; m <= 2; ++m) {
      if (n + m == 0) continue;
      const auto a = matrix_superalgebra(c1, n, m);
      const std::size_t units_even = n * n + m * m, units_odd = 2 * n * m;
      EXPECT_EQ(a.dim(), (n + m) * (n + m) * 2);
      EXPECT_EQ(a.carrier().even_dim(), units_even + units_odd);
      EXPECT_EQ(a.carrier().odd_dim(), units_odd + units_even);
    }
  const auto m2 = matrix_superalgebra(c1, 2, 0);
  EXPECT_EQ(m2.dim(), 8u);
  EXPECT_EQ(m2.carrier().even_dim(), 4u);
  EXPECT_TRUE(check_superalgebra(m2).passed());
}

TEST(GroupAlgebra, SmallCases) {
  EXPECT_EQ(group_algebra_sym(1, kZ).dim(), 1u);
  const auto s2 = group_algebra_sym(2, kZ);
  EXPECT_EQ(s2.multiply(s2.basis_vector(1), s2.basis_vector(1)), s2.unit());
  const auto s3 = group_algebra_sym(3, kZ);
  const auto report = check_superalgebra(s3);
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.triples_checked, 216u);
  Limits tight;
  tight.max_algebra_dim = 100;
  EXPECT_THROW(group_algebra_sym(5, kZ, tight), SizeLimitError);
}

TEST(Check, DetectsCorruptedConstant) {
  const auto m2 = matrix_superalgebra(ground(kZ), 2, 0);
  const MatrixLayout lay(ground(kZ), 2, 0);
  const auto e11 = lay.index(0, 0, 0), e12 = lay.index(0, 0, 1);
  auto table = m2.table();
  table[e11 * m2.dim() + e12] = {{e12, 2}};  // e11*e12 = 2 e12
  const auto report = check_superalgebra(SuperAlgebra(m2.carrier(), m2.unit(), table));
  ASSERT_FALSE(report.passed());
  bool found = false;
  for (const auto& v : report.violations)
    if (v.kind == AxiomViolation::Kind::Associativity && v.i == e11 && v.j == e11 && v.k == e12)
      found = true;
  EXPECT_TRUE(found);
  EXPECT_FALSE(report.violations.front().describe().empty());
}

TEST(Check, DetectsGradingAndUnitErrors) {
  const auto c1 = clifford1(kZ);
  auto table = c1.table();
  table[1] = {{0, 1}, {1, 1}};  // 1*c picks up an even component
  const auto report = check_superalgebra(SuperAlgebra(c1.carrier(), c1.unit(), table));
  bool grading = false, unit = false;
  for (const auto& v : report.violations) {
    grading |= v.kind == AxiomViolation::Kind::Grading;
    unit |= v.kind == AxiomViolation::Kind::LeftUnit;
  }
  EXPECT_TRUE(grading);
  EXPECT_TRUE(unit);
  const auto odd_unit = check_superalgebra(SuperAlgebra(c1.carrier(), {1, 1}, c1.table()));
  EXPECT_EQ(odd_unit.violations.front().kind, AxiomViolation::Kind::UnitParity);
}
