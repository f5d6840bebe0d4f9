#include <gtest/gtest.h>

#include <algorithm>

#include "sqfbrace/brace.hpp"
#include "sqfbrace/errors.hpp"
#include "support.hpp"

using namespace sqfb;
using sqfb::testing::squarefree_orders;

namespace {

const GroupDescriptor S3 = canonicalize(2, 3, 2);
const GroupDescriptor C6 = canonicalize(1, 6, 1);

RegularSubgroup translations(const Holomorph& H) {
  std::vector<HolElement> gens;
  for (const auto& x : H.base().elements()) gens.push_back(H.translation(x));
  RegularSubgroup sub;
  sub.M = sub.A = H.descriptor();
  sub.elements = *regular_closure(H, gens);
  for (const auto& h : sub.elements) sub.key.push_back(H.encode(h));
  return sub;
}

}  // namespace

TEST(Brace, TrivialBraceHasEqualOperations) {
  for (Int n : squarefree_orders(42))
    for (const auto& A : enumerate_groups(n)) {
      Holomorph H(A);
      auto B = build_skew_brace(translations(H), H);
      EXPECT_EQ(B.add, B.mul);
      EXPECT_TRUE(verify_skew_brace(B).ok);
      for (int b = 0; b < B.n; ++b)
        for (int a = 0; a < B.n; ++a) EXPECT_EQ(B.lambda[b][a], a);
    }
}

TEST(Brace, BuiltBracesSatisfyAxioms) {
  for (Int n : squarefree_orders(42)) {
    auto groups = enumerate_groups(n);
    for (const auto& M : groups)
      for (const auto& A : groups) {
        auto braces = orbit_representative_braces(M, A);
        EXPECT_EQ(static_cast<Int>(braces.size()), count_skew_braces(M, A));
        for (const auto& B : braces) {
          auto check = verify_skew_brace(B);
          EXPECT_TRUE(check.ok) << M.label() << " " << A.label() << " " << check.axiom;
          EXPECT_EQ(recognize_table(B.mul), M);
          EXPECT_EQ(recognize_table(B.add), A);
        }
        EXPECT_EQ(count_brace_classes(braces), count_skew_braces(M, A));
      }
  }
}

TEST(Brace, OrderSixExamples) {
  auto braces = orbit_representative_braces(S3, S3);
  ASSERT_EQ(braces.size(), 2u);
  EXPECT_FALSE(skew_braces_isomorphic(braces[0], braces[1]));
  EXPECT_TRUE(skew_braces_isomorphic(braces[0], braces[0]));
  Int total = 0;
  for (const auto& M : enumerate_groups(6))
    for (const auto& A : enumerate_groups(6)) total += count_brace_classes(orbit_representative_braces(M, A));
  EXPECT_EQ(total, 6);
}

TEST(Brace, SameOrbitGivesIsomorphicBraces) {
  Holomorph H(S3);
  auto subs = enumerate_regular_subgroups(C6, S3, Strategy::Quintuple);
  auto orbits = aut_orbits(subs, H);
  for (const auto& orbit : orbits.orbits)
    for (int j : orbit)
      EXPECT_TRUE(skew_braces_isomorphic(build_skew_brace(subs[orbit.front()], H),
                                         build_skew_brace(subs[j], H)));
  EXPECT_FALSE(skew_braces_isomorphic(build_skew_brace(subs[orbits.orbits[0].front()], H),
                                      build_skew_brace(subs[orbits.orbits[1].front()], H)));
}

TEST(Brace, VerifierReportsWitness) {
  Holomorph H(S3);
  auto B = orbit_representative_braces(S3, S3)[1];
  auto broken = B;
  std::swap(broken.mul[1][2], broken.mul[1][3]);
  auto check = verify_skew_brace(broken);
  EXPECT_FALSE(check.ok);
  EXPECT_FALSE(check.axiom.empty());
  EXPECT_FALSE(check.witness.empty());

  auto wrong_lambda = B;
  wrong_lambda.lambda[2][1] = (wrong_lambda.lambda[2][1] + 1) % 6;
  auto lam = verify_skew_brace(wrong_lambda);
  EXPECT_FALSE(lam.ok);
  EXPECT_EQ(lam.axiom, "lambda table");
  EXPECT_EQ(lam.witness, (std::vector<int>{2, 1}));
}

TEST(Brace, CompatibilityFailureIsDetected) {
  // relabel a group law on the Z_6 carrier until it stops being compatible
  auto B = orbit_representative_braces(C6, C6)[0];
  const Table s3_mul = orbit_representative_braces(S3, S3)[0].mul;
  std::vector<int> perm{0, 1, 2, 3, 4, 5};
  bool found = false;
  while (std::next_permutation(perm.begin() + 1, perm.end())) {
    Table relabelled(6, std::vector<int>(6));
    for (int x = 0; x < 6; ++x)
      for (int y = 0; y < 6; ++y) relabelled[perm[x]][perm[y]] = perm[s3_mul[x][y]];
    B.mul = relabelled;
    B.lambda.clear();
    auto check = verify_skew_brace(B);
    if (check.ok) continue;
    EXPECT_EQ(check.axiom, "compatibility");
    EXPECT_EQ(check.witness.size(), 3u);
    found = true;
    break;
  }
  EXPECT_TRUE(found);
}

TEST(Brace, RejectsForeignOrIrregularSubgroups) {
  Holomorph H(S3), K(C6);
  auto sub = translations(H);
  EXPECT_THROW(build_skew_brace(sub, K), OwnerMismatch);
  auto irregular = sub;
  irregular.elements[1] = irregular.elements[0];
  EXPECT_THROW(build_skew_brace(irregular, H), NotRegular);
}

TEST(Brace, JsonRoundTrip) {
  for (const auto& B : orbit_representative_braces(canonicalize(2, 15, 14), canonicalize(2, 15, 14))) {
    auto back = brace_from_json(brace_to_json(B));
    EXPECT_EQ(back.add, B.add);
    EXPECT_EQ(back.mul, B.mul);
    EXPECT_EQ(back.lambda, B.lambda);
    EXPECT_TRUE(verify_skew_brace(back).ok);
  }
  EXPECT_THROW(brace_from_json("{\"n\": 2}"), ShapeError);
  EXPECT_THROW(brace_from_json("not json"), ShapeError);
}
