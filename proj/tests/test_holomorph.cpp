#include <gtest/gtest.h>

#include <random>
#include <set>

#include "sqfbrace/errors.hpp"
#include "sqfbrace/holomorph.hpp"
#include "support.hpp"

using namespace sqfb;
using sqfb::testing::squarefree_orders;

namespace {

std::vector<GroupDescriptor> groups_up_to(Int limit) {
  std::vector<GroupDescriptor> out;
  for (Int n : squarefree_orders(limit))
    for (const auto& G : enumerate_groups(n)) out.push_back(G);
  return out;
}

// theta^r phi_s evaluated by rewriting sigma^u tau^f generator by generator.
Element rewrite_apply(const Group& G, Int r, Int s, Element x) {
  const Element img_sigma = G.make(s, 0);                 // phi_s then theta^r fixes sigma^s
  const Element img_tau = G.make(mulmod(r, G.z(), G.e()), 1);  // theta^r(tau) = sigma^(rz) tau
  return G.mul(G.pow(img_sigma, x.u), G.pow(img_tau, x.f));
}

}  // namespace

TEST(Holomorph, SmallExamples) {
  Holomorph H(canonicalize(2, 3, 2));
  const Group& A = H.base();
  EXPECT_EQ(H.apply(H.theta(), A.tau()), A.make(1, 1));
  EXPECT_EQ(H.apply({1, 2}, A.make(1, 1)), A.tau());
  EXPECT_EQ(H.compose(H.phi(2), H.theta()), (Automorphism{2, 2}));
  EXPECT_EQ(H.mul(H.translation(A.sigma()), H.translation(A.sigma())), H.translation(A.make(2, 0)));
  EXPECT_EQ(H.mul({A.identity(), H.theta()}, H.translation(A.sigma())),
            (HolElement{A.sigma(), H.theta()}));
  EXPECT_EQ(H.mul({A.tau(), H.phi(2)}, H.translation(A.sigma())), (HolElement{A.make(1, 1), H.phi(2)}));
  EXPECT_EQ(H.act({A.tau(), H.phi(2)}, A.sigma()), A.make(1, 1));
  EXPECT_EQ(H.aut_order(), 6);
  EXPECT_EQ(H.order(), 36);
}

TEST(Holomorph, ApplyAgreesWithGeneratorRewriting) {
  for (const auto& D : groups_up_to(42)) {
    Holomorph H(D);
    for (auto a : H.automorphisms())
      for (const auto& x : H.base().elements())
        ASSERT_EQ(H.apply(a, x), rewrite_apply(H.base(), a.r, a.s, x)) << D.label();
  }
}

TEST(Holomorph, AutomorphismsAreDistinctHomomorphisms) {
  for (const auto& D : groups_up_to(42)) {
    Holomorph H(D);
    const Group& A = H.base();
    const auto auts = H.automorphisms();
    EXPECT_EQ(static_cast<Int>(auts.size()), aut_group_order(D));
    std::set<std::vector<Element>> images;
    for (auto a : auts) {
      std::vector<Element> img;
      for (const auto& x : A.elements()) {
        img.push_back(H.apply(a, x));
        for (const auto& y : A.elements())
          ASSERT_EQ(H.apply(a, A.mul(x, y)), A.mul(H.apply(a, x), H.apply(a, y)));
      }
      images.insert(img);
    }
    EXPECT_EQ(images.size(), auts.size()) << D.label();
  }
}

TEST(Holomorph, CompositionIsPointwise) {
  for (const auto& D : groups_up_to(42)) {
    Holomorph H(D);
    const auto auts = H.automorphisms();
    for (auto a : auts) {
      EXPECT_EQ(H.compose(a, H.inverse(a)), H.aut_identity());
      for (auto b : auts)
        for (const auto& x : H.base().elements())
          ASSERT_EQ(H.apply(H.compose(a, b), x), H.apply(a, H.apply(b, x)));
    }
  }
}

TEST(Holomorph, GeneratorsReachWholeHolomorph) {
  for (const auto& D : groups_up_to(42)) {
    Holomorph H(D);
    const Group& A = H.base();
    std::vector<HolElement> gens{H.translation(A.sigma()), H.translation(A.tau()),
                                 {A.identity(), H.theta()}};
    for (Int s : units(D.e)) gens.push_back({A.identity(), H.phi(s)});
    std::set<HolElement> seen{H.identity()};
    std::vector<HolElement> queue{H.identity()};
    for (std::size_t i = 0; i < queue.size(); ++i)
      for (const auto& g : gens) {
        auto p = H.mul(g, queue[i]);
        if (seen.insert(p).second) queue.push_back(p);
      }
    EXPECT_EQ(static_cast<Int>(seen.size()), D.n * D.g() * euler_phi(D.e)) << D.label();
    EXPECT_EQ(static_cast<Int>(seen.size()), H.order());
  }
}

TEST(Holomorph, ActionIsFaithfulAndTranslationsRegular) {
  for (const auto& D : groups_up_to(30)) {
    Holomorph H(D);
    const Group& A = H.base();
    std::set<std::vector<Int>> perms;
    for (const auto& h : H.elements()) {
      EXPECT_EQ(H.mul(H.inv(h), h), H.identity());
      std::vector<Int> perm;
      for (const auto& y : A.elements()) perm.push_back(A.label(H.act(h, y)));
      perms.insert(perm);
    }
    EXPECT_EQ(static_cast<Int>(perms.size()), H.order()) << D.label();
    std::set<Int> images;
    for (const auto& x : A.elements()) images.insert(A.label(H.act(H.translation(x), A.identity())));
    EXPECT_EQ(static_cast<Int>(images.size()), D.n);
  }
}

TEST(Holomorph, ActionIsALeftAction) {
  std::mt19937_64 rng(3);
  for (const auto& D : groups_up_to(42)) {
    Holomorph H(D);
    const auto els = H.elements();
    for (int i = 0; i < 200; ++i) {
      const auto& a = els[rng() % els.size()];
      const auto& b = els[rng() % els.size()];
      for (const auto& y : H.base().elements())
        ASSERT_EQ(H.act(H.mul(a, b), y), H.act(a, H.act(b, y)));
    }
  }
}

TEST(Holomorph, ConjugationByAutomorphism) {
  for (const auto& D : groups_up_to(30)) {
    Holomorph H(D);
    const auto els = H.elements();
    for (auto psi : H.automorphisms()) {
      const HolElement P{H.base().identity(), psi};
      for (std::size_t i = 0; i < els.size(); i += 7)
        ASSERT_EQ(H.conjugate_by_aut(psi, els[i]), H.mul(H.mul(P, els[i]), H.inv(P)));
      // X = [sigma^a, theta^c] goes to X^s
      for (Int a = 0; a < D.e; ++a)
        for (Int c = 0; c < D.g(); ++c) {
          const HolElement X = H.make(a, 0, c, 1);
          EXPECT_EQ(H.conjugate_by_aut(psi, X), H.pow(X, psi.s));
        }
    }
  }
}

TEST(Holomorph, ClosedPowerMatchesIteration) {
  for (const auto& D : groups_up_to(21)) {
    Holomorph H(D);
    for (Int t : units(D.e))
      for (Int u = 0; u < D.e; ++u)
        for (Int v = 0; v < D.g(); ++v) {
          const HolElement Y = H.make(u, 1, v, t);
          for (Int j = 0; j <= D.n; ++j)
            ASSERT_EQ(H.y_power(Y, j), sqfb::testing::iterated_power(H, Y, j));
        }
  }
}

TEST(Holomorph, ClosedPowerRejectsWrongShape) {
  Holomorph H(canonicalize(2, 3, 2));
  EXPECT_THROW(H.y_power(H.make(1, 0, 0, 1), 2), ShapeError);
  EXPECT_EQ(H.y_power(H.make(1, 1, 1, 2), 0), H.identity());
  EXPECT_EQ(H.y_power(H.make(1, 1, 1, 2), 1), H.make(1, 1, 1, 2));
}

TEST(Holomorph, EncodeRoundTripsAndOrders) {
  Holomorph H(canonicalize(2, 15, 4));
  const auto els = H.elements();
  for (std::size_t i = 0; i < els.size(); ++i) {
    EXPECT_EQ(H.decode(H.encode(els[i])), els[i]);
    if (i) EXPECT_LT(H.encode(els[i - 1]), H.encode(els[i]));
  }
}

TEST(Holomorph, CheckedOperationsRejectForeignOperands) {
  Holomorph H(canonicalize(2, 3, 2));
  const HolElement bad{Element{0, 0}, Automorphism{0, 3}};
  EXPECT_THROW(hol_mul(H, bad, H.identity()), OwnerMismatch);
  EXPECT_THROW(hol_act(H, H.identity(), Element{4, 0}), OwnerMismatch);
  EXPECT_THROW(aut_apply(H, Automorphism{5, 1}, Element{0, 0}), OwnerMismatch);
  EXPECT_THROW(aut_compose(H, Automorphism{0, 1}, Automorphism{0, 0}), OwnerMismatch);
}
