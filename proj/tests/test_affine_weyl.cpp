#include <gtest/gtest.h>

#include "daff/error.hpp"
#include "daff/oracle.hpp"
#include "daff/sampling.hpp"
#include "helpers.hpp"

using namespace daff;
using namespace daff::test;

TEST(AffineWeyl, SimpleReflectionsAreInvolutions) {
  for (int i = 0; i <= 2; ++i) {
    AffineWeylElement s = AffineWeylElement::simple_reflection(A2(), i);
    EXPECT_TRUE((s * s).is_identity());
    EXPECT_EQ(aff_length(s), 1);
    EXPECT_EQ(s.apply(simple_affine_root(A2(), i)), -simple_affine_root(A2(), i));
  }
  EXPECT_THROW(AffineWeylElement::simple_reflection(A2(), 3), DomainError);
}

TEST(AffineWeyl, ZeroReflectionIsTranslatedThetaReflection) {
  const RootSystem& sys = A2();
  FiniteRoot theta(&sys, sys.theta());
  AffineWeylElement s0 = AffineWeylElement::simple_reflection(sys, 0);
  EXPECT_EQ(s0, AffineWeylElement(theta.coords(), FiniteWeylElement::reflection(theta)));
}

TEST(AffineWeyl, InversionSetOfTranslation) {
  const RootSystem& sys = A2();
  AffineWeylElement w = AffineWeylElement::translation(sys, {0, -1});
  std::vector<AffineRoot> expected{{FiniteRoot::from_coords(sys, {1, 0}), 0},
                                   {FiniteRoot::from_coords(sys, {0, -1}), 1},
                                   {FiniteRoot::from_coords(sys, {0, -1}), 2},
                                   {FiniteRoot::from_coords(sys, {-1, -1}), 1}};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(inversions(w), expected);
  EXPECT_EQ(oracle::inversions_scan(w, -5, 5), expected);
  EXPECT_EQ(aff_length(w), 4);
}

TEST(AffineWeyl, SmallLengths) {
  EXPECT_EQ(aff_length(affine(A1(), {2}, {1})), 3);
  EXPECT_EQ(oracle::aff_length_bfs(affine(A1(), {2}, {1}), 4), 3);
  EXPECT_EQ(oracle::aff_length_bfs(AffineWeylElement::translation(A2(), {0, 1}), 5), 4);
  EXPECT_EQ(oracle::aff_length_bfs(AffineWeylElement::identity(A2()), 0), 0);
  EXPECT_FALSE(oracle::aff_length_bfs(AffineWeylElement::translation(A2(), {0, 1}), 3));
}

TEST(AffineWeyl, LengthMatchesWordSearchExhaustively) {
  for (const RootSystem* sys : {&A1(), &A2()}) {
    std::vector<AffineWeylElement> ball = affine_ball(*sys, 5);
    for (const auto& w : ball) {
      ASSERT_LE(aff_length(w), 5);
      EXPECT_EQ(oracle::aff_length_bfs(w, 5), aff_length(w));
      EXPECT_EQ(static_cast<Int>(w.reduced_word().size()), aff_length(w));
      EXPECT_EQ(AffineWeylElement::from_word(*sys, w.reduced_word()), w);
    }
  }
  // Ball sizes 1, 3, 5, 7, ... in A1.
  EXPECT_EQ(affine_ball(A1(), 5).size(), 11u);
}

TEST(AffineWeyl, InversionScanAgreesOnRandomElements) {
  sampling::Rng rng(7);
  for (int k = 0; k < 60; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    AffineWeylElement w = sampling::random_affine(sys, rng, 7);
    EXPECT_EQ(inversions(w), oracle::inversions_scan(w, -10, 10));
  }
}

TEST(AffineWeyl, ProductLengthIdentity) {
  sampling::Rng rng(11);
  for (int k = 0; k < 200; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    AffineWeylElement x = sampling::random_affine(sys, rng, 6);
    AffineWeylElement y = sampling::random_affine(sys, rng, 6);
    EXPECT_TRUE(aff_length_product_identity_check(x, y));
  }
}

TEST(AffineWeyl, ActionOnWeightsIsAGroupAction) {
  sampling::Rng rng(3);
  AffineWeight zeta = weight(A2(), {2, -1}, 4, 3);
  for (int k = 0; k < 50; ++k) {
    AffineWeylElement x = sampling::random_affine(A2(), rng, 5);
    AffineWeylElement y = sampling::random_affine(A2(), rng, 5);
    EXPECT_EQ(x.apply(y.apply(zeta)), (x * y).apply(zeta));
    // Pairings are W_aff-invariant.
    for (int id = 0; id < A2().num_roots(); ++id) {
      AffineRoot a{FiniteRoot(&A2(), id), k % 3 - 1};
      EXPECT_EQ(x.apply(zeta).pair(x.apply(a)), zeta.pair(a));
    }
  }
}

TEST(AffineWeyl, PairingWithTwoRho) {
  const RootSystem& sys = A2();
  AffineRoot a{FiniteRoot(&sys, sys.theta()), -3};
  EXPECT_EQ(pairing_2rho(a), -14);
  EXPECT_EQ(weight(sys, {0, 0}, 2, 1).pair_two_rho(), 2 * 3 * 2);
}

TEST(AffineWeyl, DominantizeExamples) {
  AffineWeight z = weight(A2(), {0, 0}, 2, 1);
  Dominantization d = dominantize(z);
  EXPECT_EQ(d.dominant, z);
  EXPECT_TRUE(d.v.is_identity());

  Dominantization e = dominantize(weight(A2(), {1, 1}, 1, 1));
  EXPECT_EQ(e.dominant, weight(A2(), {0, 0}, 2, 1));
  EXPECT_EQ(e.v, AffineWeylElement::simple_reflection(A2(), 0));

  Dominantization f = dominantize(weight(A1(), {14}, -23, 8));
  EXPECT_EQ(f.dominant, weight(A1(), {2}, 1, 8));
  EXPECT_EQ(f.v, AffineWeylElement::from_word(A1(), {0, 1, 0}));

  Dominantization level0 = dominantize(weight(A2(), {0, 0}, -4, 0));
  EXPECT_TRUE(level0.v.is_identity());
  EXPECT_THROW(dominantize(weight(A2(), {1, 0}, 0, 0)), DomainError);
}

TEST(AffineWeyl, DominantizeIsStableUnderTheGroup) {
  sampling::Rng rng(5);
  for (int k = 0; k < 60; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    AffineWeight zp = sampling::random_dominant(sys, rng, 0, 3);
    if (zp.l <= 0) continue;
    AffineWeylElement w = sampling::random_affine(sys, rng, 6);
    Dominantization d = dominantize(w.apply(zp));
    EXPECT_EQ(d.dominant, zp);
    EXPECT_EQ(d.v.apply(zp), w.apply(zp));
    EXPECT_LE(aff_length(d.v), aff_length(w));
  }
}

TEST(AffineWeyl, TitsCone) {
  EXPECT_TRUE(in_tits_cone(weight(A2(), {0, 0}, -7, 0)));
  EXPECT_FALSE(in_tits_cone(weight(A2(), {1, 0}, 0, 0)));
  EXPECT_FALSE(in_tits_cone(weight(A2(), {0, 0}, 0, -1)));
  EXPECT_TRUE(in_tits_cone(weight(A2(), {5, -3}, 2, 1)));
}

TEST(QuantumBruhatGraph, A1Neighbourhood) {
  const RootSystem& sys = A1();
  AffineWeylElement id = AffineWeylElement::identity(sys);
  AffineWeylElement s1 = AffineWeylElement::simple_reflection(sys, 1);
  // s1 -> id is quantum with label alpha_1 (l(s_a) = 1 = <alpha_1, 2 rho> - 1).
  auto edge = qbg_edge(id, {FiniteRoot::simple(sys, 1), 0});
  ASSERT_TRUE(edge.has_value());
  EXPECT_EQ(edge->kind, QbgKind::kQuantum);
  EXPECT_EQ(edge->source, s1);
  auto bruhat = qbg_edge(s1, {FiniteRoot::simple(sys, 1), 0});
  ASSERT_TRUE(bruhat.has_value());
  EXPECT_EQ(bruhat->kind, QbgKind::kBruhat);
}

TEST(QuantumBruhatGraph, IntoAndFromAreConsistent) {
  for (const RootSystem* sys : {&A1(), &A2()}) {
    auto edges = local_qbg(*sys, 3);
    EXPECT_FALSE(edges.empty());
    for (const auto& e : edges) {
      EXPECT_EQ(e.source, e.target * affine_reflection(e.label));
      bool found = false;
      for (const auto& f : qbg_edges_from(e.source))
        if (f.target == e.target && f.label == e.label && f.kind == e.kind) found = true;
      EXPECT_TRUE(found);
    }
  }
}

TEST(QuantumBruhatGraph, QuantumLabelsAreBounded) {
  // Brute-force check of the quantum-capable list for small r.
  const RootSystem& sys = A2();
  auto capable = quantum_capable_roots(sys);
  for (int id = 0; id < sys.num_roots(); ++id)
    for (Int r = 0; r <= 12; ++r) {
      AffineRoot a{FiniteRoot(&sys, id), r};
      if (!a.is_positive()) continue;
      bool is_capable = aff_length(affine_reflection(a)) == pairing_2rho(a) - 1;
      EXPECT_EQ(is_capable, std::find(capable.begin(), capable.end(), a) != capable.end());
    }
}
