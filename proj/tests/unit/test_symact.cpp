#include <gtest/gtest.h>

#include <set>

#include "superschur/symact.hpp"

using namespace superschur;
using namespace superschur::symact;

namespace {

const Ring kZ = Ring::integers();

Permutation perm(std::initializer_list<std::uint32_t> images) {
  std::vector<std::uint32_t> v(images);
  return Permutation::from_images(v);
}

// Every word of M^{(x)d} as a one-term vector.
std::vector<TensorVector> word_basis(const SuperModule& m, std::size_t d) {
  TensorPower p(m, d);
  std::vector<TensorVector> out;
  for (std::size_t i = 0; i < p.dim(); ++i) out.push_back(TensorVector{{p.word(i), Integer(1)}});
  return out;
}

}  // namespace

TEST(Permutation, CompositionIsFunctional) {
  const auto a = perm({2, 1, 3});
  const auto b = perm({1, 3, 2});
  // (a*b)(1) = a(b(1)) = a(1) = 2; (a*b)(2) = a(3) = 3; (a*b)(3) = a(2) = 1.
  EXPECT_EQ((a * b).images(), (std::vector<std::uint32_t>{2, 3, 1}));
  EXPECT_TRUE((a * a.inverse()).is_identity());
  EXPECT_EQ(perm({3, 1, 2}).to_string(), "[3,1,2]");
  EXPECT_THROW(perm({1, 1}), std::invalid_argument);
  EXPECT_EQ(all_permutations(3).size(), 6u);
  EXPECT_EQ(factorial(5), 120u);
}

TEST(Act, TranspositionExamples) {
  const auto m = SuperModule::standard(kZ, 1, 2);  // v1 even, v2 v3 odd
  const auto s = Permutation::transposition(2, 1, 2);
  EXPECT_EQ(act(TensorVector{{{0, 1}, 1}}, m, s), (TensorVector{{{1, 0}, 1}}));
  EXPECT_EQ(act(TensorVector{{{1, 2}, 1}}, m, s), (TensorVector{{{2, 1}, -1}}));
}

TEST(Act, ThreeCycleOnOddLetters) {
  const auto m = SuperModule::standard(kZ, 0, 3);  // a, b, c all odd
  // Letter at position k of x.sigma is x[sigma(k)], so [2,3,1] sends a(x)b(x)c to b(x)c(x)a,
  // reversing two odd pairs.
  const auto x = TensorVector{{{0, 1, 2}, 1}};
  EXPECT_EQ(act(x, m, perm({2, 3, 1})), (TensorVector{{{1, 2, 0}, 1}}));
  EXPECT_EQ(act(x, m, perm({3, 1, 2})), (TensorVector{{{2, 0, 1}, 1}}));
  // The same result through transpositions.
  const auto s1 = Permutation::transposition(3, 1, 2), s2 = Permutation::transposition(3, 2, 3);
  EXPECT_EQ(act(act(x, m, s1), m, s2), act(x, m, s1 * s2));
}

TEST(Act, RightActionAxiomExhaustive) {
  const auto m = SuperModule::standard(kZ, 1, 1);
  const auto perms = all_permutations(3);
  for (const auto& x : word_basis(m, 3))
    for (const auto& rho : perms)
      for (const auto& sigma : perms) ASSERT_EQ(act(act(x, m, rho), m, sigma), act(x, m, rho * sigma));
}

TEST(Act, InverseUndoesAndPreservesParity) {
  const auto m = SuperModule::standard(kZ, 1, 2);
  TensorPower p(m, 3);
  for (const auto& x : word_basis(m, 3)) {
    for (const auto& s : all_permutations(3)) {
      const auto y = act(x, m, s);
      EXPECT_EQ(act(y, m, s.inverse()), x);
      EXPECT_EQ(p.parity(y.begin()->first), p.parity(x.begin()->first));
    }
  }
}

TEST(Act, DegreeMismatchThrows) {
  const auto m = SuperModule::standard(kZ, 1, 0);
  EXPECT_THROW(act(TensorVector{{{0, 0}, 1}}, m, Permutation::identity(3)), std::invalid_argument);
}

TEST(Invariants, HandExamples) {
  const Ring z5 = coeff::make_ring("Z/5");
  EXPECT_EQ(invariants(SuperModule::standard(z5, 1, 0), 3, 5).rows(), 1u);
  EXPECT_EQ(invariants(SuperModule::standard(z5, 1, 1), 2, 5).rows(), 2u);
  EXPECT_EQ(invariants(SuperModule::standard(z5, 0, 1), 2, 5).rows(), 0u);
}

TEST(Invariants, VectorsAreFixed) {
  const auto m = SuperModule::standard(kZ, 1, 2);
  const auto inv = invariants(m, 3, 7);
  TensorPower p(m, 3);
  for (std::size_t r = 0; r < inv.rows(); ++r) {
    TensorVector x;
    for (std::size_t c = 0; c < inv.cols(); ++c)
      if (inv.at(r, c)) x[p.word(c)] = Integer(inv.at(r, c));
    const auto z7 = SuperModule::standard(coeff::make_ring("Z/7"), 1, 2);
    EXPECT_TRUE(is_invariant(x, z7));
  }
}

TEST(CosetReps, CountsAndShape) {
  EXPECT_EQ(coset_reps(1, 1).size(), 2u);
  EXPECT_EQ(coset_reps(2, 1).size(), 3u);
  const auto reps = coset_reps(2, 2);
  ASSERT_EQ(reps.size(), 6u);
  std::set<std::vector<std::uint32_t>> distinct;
  for (const auto& t : reps) {
    const auto im = t.images();
    EXPECT_LT(im[0], im[1]);
    EXPECT_LT(im[2], im[3]);
    distinct.insert(im);
  }
  EXPECT_EQ(distinct.size(), 6u);
  EXPECT_TRUE(reps.front().is_identity());
  EXPECT_EQ(coset_reps(0, 3).size(), 1u);
}

TEST(CosetReps, RepresentEveryCoset) {
  // Every permutation factors uniquely as tau * h with h in S_2 x S_1.
  const auto reps = coset_reps(2, 1);
  const std::vector<Permutation> young = {Permutation::identity(3), Permutation::transposition(3, 1, 2)};
  std::set<Permutation> all;
  for (const auto& t : reps)
    for (const auto& h : young) all.insert(t * h);
  EXPECT_EQ(all.size(), 6u);
}

TEST(MultiShuffles, Count) {
  const std::vector<std::size_t> blocks = {1, 2, 1};
  EXPECT_EQ(multi_shuffles(blocks).size(), 12u);
}

TEST(Interleave, SignRule) {
  const auto m = SuperModule::standard(kZ, 1, 1);
  // Product table "letterwise identity": f(i,j) = [letter i].
  std::vector<coeff::SparseVector> table = {{{0, 1}}, {{1, 1}}};
  const LetterProduct f = [&](std::uint32_t i, std::uint32_t) -> const coeff::SparseVector& {
    return table[i];
  };
  // x = u (x) u', y = w (x) w'; sign counts (y_1, x_2) only.
  const TensorVector x{{{1, 1}, 1}}, y{{{1, 0}, 1}}, y2{{{0, 1}, 1}};
  EXPECT_EQ(interleave_apply(x, m, y, m, f, kZ), (TensorVector{{{1, 1}, -1}}));
  EXPECT_EQ(interleave_apply(x, m, y2, m, f, kZ), (TensorVector{{{1, 1}, 1}}));
}
