#include <gtest/gtest.h>

#include <map>
#include <random>
#include <set>

#include "sqfbrace/errors.hpp"
#include "sqfbrace/groups.hpp"
#include "support.hpp"

using namespace sqfb;
using sqfb::testing::squarefree_orders;

TEST(Groups, CanonicalizeExamples) {
  EXPECT_EQ(canonicalize(2, 3, 2).label(), "G(2,3,2)");
  EXPECT_EQ(canonicalize(1, 6, 1).label(), "G(1,6,1)");
  EXPECT_EQ(canonicalize(6, 7, 5), canonicalize(6, 7, 3));
  EXPECT_EQ(canonicalize(1, 1, 1).n, 1);
  EXPECT_THROW(canonicalize(2, 3, 1), InvalidTriple);
  EXPECT_THROW(canonicalize(2, 6, 5), InvalidTriple);
  EXPECT_THROW(canonicalize(3, 7, 3), InvalidTriple);
}

TEST(Groups, EnumerationCounts) {
  EXPECT_EQ(enumerate_groups(1).size(), 1u);
  EXPECT_EQ(enumerate_groups(6).size(), 2u);
  EXPECT_EQ(enumerate_groups(15).size(), 1u);
  EXPECT_EQ(enumerate_groups(30).size(), 4u);
  EXPECT_EQ(enumerate_groups(42).size(), 6u);
  EXPECT_THROW(enumerate_groups(12), NotSquarefree);
}

TEST(Groups, CanonicalizeIsIdempotentAndConstantOnSubgroups) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    Int e = 2 + static_cast<Int>(rng() % 199);
    if (!is_squarefree(e)) continue;
    std::map<std::set<Int>, std::set<Int>> canon_by_subgroup;
    for (Int k : units(e)) {
      const Int d = multiplicative_order(k, e);
      if (std::gcd(d, e) != 1 || !is_squarefree(d * e)) continue;
      auto G = canonicalize(d, e, k);
      EXPECT_EQ(canonicalize(G.d, G.e, G.k), G);
      std::set<Int> sub;
      for (Int j = 0, x = 1; j < d; ++j, x = mulmod(x, k, e)) sub.insert(x);
      canon_by_subgroup[sub].insert(G.k);
    }
    for (const auto& [sub, ks] : canon_by_subgroup) EXPECT_EQ(ks.size(), 1u);
  }
}

TEST(Groups, EnumeratedGroupsArePairwiseDistinctAndOrdered) {
  for (Int n : squarefree_orders(200)) {
    auto groups = enumerate_groups(n);
    for (std::size_t i = 0; i + 1 < groups.size(); ++i) EXPECT_LT(groups[i], groups[i + 1]);
    for (const auto& G : groups) {
      EXPECT_EQ(G.d * G.e, n);
      EXPECT_EQ(G.z() * G.g(), G.e);
      EXPECT_EQ(std::gcd(G.z(), G.g()), 1);
      EXPECT_EQ(G.g() % 2, 1);
    }
  }
}

TEST(Groups, ThreePrimeGroupCount) {
  // n = p1 p2 p3 with every congruence holding has 5 + (p1 - 1) groups
  EXPECT_EQ(enumerate_groups(42).size(), 6u);
  EXPECT_EQ(enumerate_groups(2 * 3 * 13).size(), 6u);
  EXPECT_EQ(enumerate_groups(3 * 7 * 43).size(), 5u + 2u);
}

TEST(Groups, AutOrder) {
  EXPECT_EQ(aut_group_order(canonicalize(1, 30, 1)), 8);
  EXPECT_EQ(aut_group_order(canonicalize(2, 3, 2)), 6);
  for (Int m : {3, 5, 7, 15, 21})
    EXPECT_EQ(aut_group_order(canonicalize(2, m, m - 1)), m * euler_phi(m));
}

// Exhaustive group axioms from the normal-form multiplication.
TEST(Groups, MultiplicationIsAGroupLaw) {
  for (Int n : squarefree_orders(42))
    for (const auto& D : enumerate_groups(n)) {
      Group G(D);
      const auto els = G.elements();
      ASSERT_EQ(static_cast<Int>(els.size()), n);
      for (const auto& x : els) {
        EXPECT_EQ(G.mul(x, G.identity()), x);
        EXPECT_EQ(G.mul(G.identity(), x), x);
        EXPECT_EQ(G.mul(x, G.inv(x)), G.identity());
        EXPECT_EQ(G.pow(x, G.element_order(x)), G.identity());
        for (const auto& y : els)
          for (const auto& w : els) ASSERT_EQ(G.mul(G.mul(x, y), w), G.mul(x, G.mul(y, w)));
      }
      // the defining relations
      const auto s = G.sigma(), t = G.tau();
      EXPECT_EQ(G.pow(s, D.e), G.identity());
      EXPECT_EQ(G.pow(t, D.d), G.identity());
      EXPECT_EQ(G.mul(G.mul(t, s), G.inv(t)), G.pow(s, D.k));
    }
}

TEST(Groups, LabelsRoundTrip) {
  Group G(canonicalize(6, 7, 3));
  for (Int l = 0; l < 42; ++l) EXPECT_EQ(G.label(G.from_label(l)), l);
  EXPECT_EQ(G.label(G.identity()), 0);
}

TEST(Groups, CheckedMultiplicationRejectsForeignElements) {
  Group G(canonicalize(2, 3, 2));
  EXPECT_THROW(group_mul(G, Element{5, 0}, Element{0, 0}), OwnerMismatch);
  EXPECT_THROW(group_mul(G, Element{0, 0}, Element{0, 2}), OwnerMismatch);
  EXPECT_EQ(group_mul(G, G.tau(), G.sigma()), G.make(2, 1));
}
