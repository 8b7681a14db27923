#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

using namespace mutinv;
using mutinv::testing::uniform;

namespace {

ExchangeMatrix torus() { return ExchangeMatrix::from_rows({{0, 2, -2}, {-2, 0, 2}, {2, -2, 0}}); }
ExchangeMatrix lampe() { return ExchangeMatrix::from_rows({{0, 1, -1}, {-4, 0, 2}, {4, -2, 0}}); }
ExchangeMatrix lampe_dual() { return ExchangeMatrix::from_rows({{0, -4, 4}, {1, 0, -2}, {-1, 2, 0}}); }

}  // namespace

TEST(MutationClass, TorusIsSignEquivalent) {
  auto r = mutation_class(torus());
  ASSERT_TRUE(r.class_size);
  EXPECT_EQ(*r.class_size, 2u);
  EXPECT_TRUE(r.is_sign_equivalent);
  EXPECT_EQ(std::set<ExchangeMatrix>(r.members.begin(), r.members.end()), (std::set<ExchangeMatrix>{torus(), -torus()}));
}

TEST(MutationClass, A2) {
  auto b = ExchangeMatrix::from_rows({{0, 1}, {-1, 0}});
  auto r = mutation_class(b);
  EXPECT_EQ(r.class_size, 2u);
  EXPECT_TRUE(r.is_sign_equivalent);
}

TEST(MutationClass, ZeroMatrix) {
  auto r = mutation_class(ExchangeMatrix::from_rows({{0, 0}, {0, 0}}));
  EXPECT_EQ(r.class_size, 1u);
  EXPECT_FALSE(r.is_sign_equivalent);
}

TEST(MutationClass, BudgetExceeded) {
  // Double arrows along a path: mutation at the middle creates ever larger entries.
  auto wild = mutation_class(ExchangeMatrix::from_rows({{0, 2, 0}, {-2, 0, 2}, {0, -2, 0}}), 50);
  EXPECT_FALSE(wild.class_size);
  EXPECT_TRUE(wild.members.empty());
  EXPECT_THROW(mutation_class(torus(), 0), std::invalid_argument);
}

TEST(MutationClass, A3ClassSize) {
  auto r = mutation_class(ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}}));
  ASSERT_TRUE(r.class_size);
  EXPECT_GT(*r.class_size, 2u);
  EXPECT_FALSE(r.is_sign_equivalent);
}

TEST(SignEquivalence, Examples) {
  EXPECT_TRUE(check_sign_equivalent(lampe()));
  EXPECT_TRUE(check_sign_equivalent(torus()));
  EXPECT_FALSE(check_sign_equivalent(ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 1}, {0, -1, 0}})));
  EXPECT_FALSE(check_sign_equivalent(ExchangeMatrix::from_rows({{0, 0}, {0, 0}})));
  EXPECT_FALSE(check_sign_equivalent(ExchangeMatrix::from_rows({{0}})));
}

TEST(SignEquivalence, FastPathAgreesWithClassSearch) {
  for (int trial = 0; trial < 200; ++trial) {
    auto b = mutinv::testing::random_symmetrizable(uniform(2, 4), 2);
    if (!is_irreducible(b)) continue;
    auto r = mutation_class(b, 3);
    bool slow = r.class_size && r.is_sign_equivalent;
    ASSERT_EQ(check_sign_equivalent(b), slow) << b.to_text();
  }
}

TEST(SignEquivalence, ReducibleInputUsesClassSearch) {
  // A direct sum of two sign-equivalent blocks is not sign-equivalent: mu_1 negates one block only.
  auto b = ExchangeMatrix::from_rows({{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  EXPECT_FALSE(check_sign_equivalent(b));
  // A sign-equivalent block plus an isolated vertex stays sign-equivalent.
  auto c = ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}});
  EXPECT_TRUE(check_sign_equivalent(c));
}

TEST(SignEquivalence, PermutationInvariant) {
  std::vector<std::size_t> p{2, 0, 1};
  for (const auto& b : {torus(), lampe(), lampe_dual()}) {
    EXPECT_TRUE(check_sign_equivalent(permute(b, Permutation(p))));
  }
}

TEST(Classify, Rank3Bound4MatchesTheThreeOrbits) {
  auto cat = classify_irreducible_sign_equivalent(3, 4);
  std::set<ExchangeMatrix> got;
  for (const auto& e : cat.found) {
    got.insert(sign_orbit_representative(e.matrix));
    for (std::size_t k = 1; k <= 3; ++k) EXPECT_EQ(mutate_matrix(e.matrix, k), -e.matrix);
    EXPECT_TRUE(e.skew_symmetrizer);
  }
  std::set<ExchangeMatrix> want{sign_orbit_representative(torus()), sign_orbit_representative(lampe()),
                                sign_orbit_representative(lampe_dual())};
  EXPECT_EQ(cat.found.size(), 3u);
  EXPECT_EQ(got, want);
}

TEST(Classify, Rank3OrbitSizes) {
  auto cat = classify_irreducible_sign_equivalent(3, 4);
  std::multiset<std::size_t> sizes;
  for (const auto& e : cat.found) sizes.insert(e.orbit_size);
  EXPECT_EQ(sizes, (std::multiset<std::size_t>{2, 6, 6}));
}

TEST(Classify, Rank1IsEmpty) {
  EXPECT_TRUE(classify_irreducible_sign_equivalent(1, 5).found.empty());
}

TEST(Classify, Rank2IsEveryBetaGamma) {
  const long bound = 3;
  auto cat = classify_irreducible_sign_equivalent(2, bound);
  std::set<ExchangeMatrix> want;
  for (long beta = 1; beta <= bound; ++beta)
    for (long gamma = 1; gamma <= bound; ++gamma)
      want.insert(sign_orbit_representative(ExchangeMatrix::from_rows({{0, beta}, {-gamma, 0}})));
  std::set<ExchangeMatrix> got;
  for (const auto& e : cat.found) got.insert(e.matrix);
  EXPECT_EQ(got, want);
  EXPECT_EQ(cat.found.size(), 6u);
}

TEST(Classify, RepresentativesAreDistinctCanonicalForms) {
  auto cat = classify_irreducible_sign_equivalent(3, 3);
  std::set<ExchangeMatrix> seen;
  for (const auto& e : cat.found) {
    EXPECT_TRUE(seen.insert(sign_orbit_representative(e.matrix)).second);
    EXPECT_EQ(e.matrix, sign_orbit_representative(e.matrix));
    EXPECT_TRUE(is_irreducible(e.matrix));
    EXPECT_TRUE(check_sign_equivalent(e.matrix));
  }
}

TEST(Classify, ThreadCountDoesNotChangeResult) {
  ClassifyOptions one, four;
  four.threads = 4;
  auto a = classify_irreducible_sign_equivalent(3, 4, one);
  auto b = classify_irreducible_sign_equivalent(3, 4, four);
  ASSERT_EQ(a.found.size(), b.found.size());
  for (std::size_t i = 0; i < a.found.size(); ++i) EXPECT_EQ(a.found[i].matrix, b.found[i].matrix);
}

TEST(Classify, NonSymmetrizableFlagKeepsRank3Result) {
  ClassifyOptions o;
  o.require_skew_symmetrizable = false;
  auto cat = classify_irreducible_sign_equivalent(3, 3, o);
  for (const auto& e : cat.found) EXPECT_TRUE(e.skew_symmetrizer);
}

TEST(Classify, RankOutOfRange) {
  EXPECT_THROW(classify_irreducible_sign_equivalent(0, 2), std::invalid_argument);
  EXPECT_THROW(classify_irreducible_sign_equivalent(5, 2), std::invalid_argument);
  EXPECT_THROW(classify_irreducible_sign_equivalent(3, 0), std::invalid_argument);
}

TEST(Decompose, ShuffledA2PlusZero) {
  // block-diag([[0,1],[-1,0]], [0]) with vertices relabelled.
  auto b = ExchangeMatrix::from_rows({{0, 0, 1}, {0, 0, 0}, {-1, 0, 0}});
  auto d = decompose(b);
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0], ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}));
  EXPECT_EQ(d.zero_block_size, 1u);
  auto p = permute(b, d.sigma);
  EXPECT_EQ(p, ExchangeMatrix::from_rows({{0, 1, 0}, {-1, 0, 0}, {0, 0, 0}}));
}

TEST(Decompose, IrreducibleIsOneBlock) {
  auto d = decompose(torus());
  ASSERT_EQ(d.blocks.size(), 1u);
  EXPECT_EQ(d.blocks[0], torus());
  EXPECT_EQ(d.zero_block_size, 0u);
}

TEST(Decompose, TorusPlusA2) {
  auto b = ExchangeMatrix::from_rows({{0, 2, -2, 0, 0},
                                      {-2, 0, 2, 0, 0},
                                      {2, -2, 0, 0, 0},
                                      {0, 0, 0, 0, 1},
                                      {0, 0, 0, -1, 0}});
  auto d = decompose(b);
  ASSERT_EQ(d.blocks.size(), 2u);
  EXPECT_EQ(d.blocks[0], torus());
  EXPECT_EQ(d.blocks[1], ExchangeMatrix::from_rows({{0, 1}, {-1, 0}}));
  EXPECT_EQ(d.zero_block_size, 0u);
}
