#include <gtest/gtest.h>

#include "support.hpp"

using namespace mutinv;
using mutinv::testing::fx;

namespace {

ExchangeMatrix torus() { return ExchangeMatrix::from_rows({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}); }
ExchangeMatrix lampe() { return ExchangeMatrix::from_rows({{0, 1, -1}, {-4, 0, 2}, {4, -2, 0}}); }
ExchangeMatrix a2() { return ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}); }

const char* kT1 = "(x1^2 + x2^2 + x3^2)/(x1*x2*x3)";
const char* kT2 = "(x1^2 + x2^4 + x3^4 + 2*x1*x2^2 + 2*x1*x3^2)/(x1*x2^2*x3^2)";

}  // namespace

TEST(Seeds, MutationRule) {
  Seed s = mutate_seed(initial_seed(a2()), 1);
  EXPECT_EQ(s.cluster[0], fx("(x2 + 1)/x1"));
  EXPECT_EQ(s.cluster[1], fx("x2"));
  EXPECT_EQ(s.matrix, mutate_matrix(a2(), 1));
  EXPECT_EQ(s.word, std::vector<std::size_t>{1});

  Seed t = mutate_seed(initial_seed(torus()), 1);
  EXPECT_EQ(t.cluster[0], fx("(x2^2 + x3^2)/x1", 3));
  EXPECT_EQ(t.matrix, -torus());
}

TEST(Seeds, InvolutionAndWords) {
  for (int trial = 0; trial < 20; ++trial) {
    auto b = mutinv::testing::random_symmetrizable(3, 2);
    Seed s = initial_seed(b);
    for (std::size_t k = 1; k <= 3; ++k) {
      Seed back = mutate_seed(mutate_seed(s, k), k);
      EXPECT_EQ(back.cluster, s.cluster);
      EXPECT_EQ(back.matrix, s.matrix);
      EXPECT_TRUE(back.word.empty());
    }
  }
  EXPECT_THROW(mutate_seed(initial_seed(a2()), 3), std::out_of_range);
}

TEST(Seeds, LaurentPhenomenon) {
  // Every cluster variable reached within depth 5 is a Laurent polynomial with nonnegative coefficients.
  for (const auto& b : {torus(), lampe(), a2(), ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})}) {
    std::vector<Seed> frontier{initial_seed(b)};
    for (int depth = 0; depth < 5; ++depth) {
      std::vector<Seed> next;
      for (const auto& s : frontier) {
        for (std::size_t k = 1; k <= b.rank(); ++k) {
          if (!s.word.empty() && s.word.back() == k) continue;
          Seed m = mutate_seed(s, k);
          auto l = as_laurent(m.cluster[k - 1]);
          ASSERT_TRUE(l) << to_string(m.cluster[k - 1]);
          ASSERT_TRUE(l->poly().nonnegative_coefficients());
          next.push_back(std::move(m));
        }
      }
      frontier = std::move(next);
    }
  }
}

TEST(VerifyInvariant, LampeInvariants) {
  auto c1 = verify_invariant(fx(kT1, 3), torus(), 1);
  EXPECT_TRUE(c1.holds);
  EXPECT_TRUE(c1.sign_equivalent);
  EXPECT_TRUE(c1.proven);
  EXPECT_EQ(c1.seeds_checked, 3u);

  auto c2 = verify_invariant(fx(kT2, 3), lampe(), 3);
  EXPECT_TRUE(c2.holds);
  EXPECT_EQ(c2.seeds_checked, 3u + 6u + 12u);

  // The invariants are tied to their matrices.
  EXPECT_FALSE(verify_invariant(fx(kT2, 3), torus(), 1).holds);
  EXPECT_FALSE(verify_invariant(fx(kT1, 3), lampe(), 1).holds);
}

TEST(VerifyInvariant, AffineRank2) {
  EXPECT_TRUE(verify_invariant(fx("(x1^2 + x2^2 + 1)/(x1*x2)"), ExchangeMatrix::from_rows({{0, 2}, {-2, 0}}), 4).holds);
  EXPECT_TRUE(verify_invariant(fx("(x2^4 + x1^2 + 2*x1 + 1)/(x1*x2^2)"), ExchangeMatrix::from_rows({{0, 1}, {-4, 0}}), 4).holds);
}

TEST(VerifyInvariant, Counterexample) {
  auto c = verify_invariant(fx("x1"), a2(), 3);
  EXPECT_FALSE(c.holds);
  ASSERT_TRUE(c.counterexample);
  EXPECT_EQ(*c.counterexample, std::vector<std::size_t>{1});
  EXPECT_FALSE(c.proven);

  // x1 + x2 + x3 is fixed by no mutation of the torus.
  auto d = verify_invariant(fx("x1 + x2 + x3", 3), torus(), 2);
  EXPECT_FALSE(d.holds);
  EXPECT_EQ(d.seeds_checked, 1u);
}

TEST(VerifyInvariant, DepthMatters) {
  // Product of the five A2 cluster variables. Every rank-2 matrix is sign-equivalent, so
  // depth 1 already settles it.
  auto t = fx("(x1 + x2 + 1)*(x1 + 1)*(x2 + 1)/(x1*x2)");
  for (std::size_t depth = 1; depth <= 6; ++depth) EXPECT_TRUE(verify_invariant(t, a2(), depth).holds);
  EXPECT_TRUE(verify_invariant(t, a2(), 1).proven);
  EXPECT_FALSE(verify_invariant(t, a2(), 0).proven);
  EXPECT_THROW(verify_invariant(fx("7"), a2(), 1), std::invalid_argument);
  EXPECT_THROW(verify_invariant(fx("x1", 3), a2(), 1), std::invalid_argument);
}
