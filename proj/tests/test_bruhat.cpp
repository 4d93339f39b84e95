#include <gtest/gtest.h>

#include "daff/error.hpp"
#include "daff/oracle.hpp"
#include "daff/sampling.hpp"
#include "helpers.hpp"

using namespace daff;
using namespace daff::test;

namespace {

const oracle::ScanWindow kWide{-25, 25, 0, 40};

std::vector<DoubleAffineRoot> alphas(const std::vector<Cocover>& cs) {
  std::vector<DoubleAffineRoot> out;
  for (const auto& c : cs) out.push_back(c.alpha);
  return out;
}

std::vector<DoubleAffineRoot> betas(const std::vector<Cover>& cs) {
  std::vector<DoubleAffineRoot> out;
  for (const auto& c : cs) out.push_back(c.beta);
  return out;
}

}  // namespace

TEST(LowerGraph, RunningExampleMembership) {
  SemigroupElement x = a2_example();
  FiniteRoot a1 = FiniteRoot::simple(A2(), 1);
  EXPECT_TRUE(gamma_contains(x, a1, -2, 1));
  EXPECT_FALSE(gamma_contains(x, a1, -1, 0));
  EXPECT_TRUE(gamma_contains(x, a1, -3, 1));
  EXPECT_EQ(gamma_shape(x, a1).shape_name(), "L1*+U3");
  EXPECT_TRUE(is_corner(x, a2_alpha()));
  EXPECT_THROW(is_corner(x, root(A2(), {1, 0}, -1, 0)), DomainError);
}

TEST(LowerGraph, MembershipAgreesWithInequalities) {
  sampling::Rng rng(31);
  for (int k = 0; k < 30; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {});
    for (int id = 0; id < sys.num_roots(); ++id) {
      FiniteRoot nu(&sys, id);
      for (Int r = -8; r <= 8; ++r)
        for (Int j = 0; j <= 10; ++j)
          ASSERT_EQ(gamma_contains(x, nu, r, j), oracle::gamma_inequalities(x, nu, r, j))
              << format_element(x) << " nu=" << id << " r=" << r << " j=" << j;
    }
  }
}

TEST(LowerGraph, ShapeIsConsistentWithPoints) {
  sampling::Rng rng(32);
  for (int k = 0; k < 40; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {});
    for (int id = 0; id < sys.num_roots(); ++id) {
      FiniteRoot nu(&sys, id);
      LowerGraph g = gamma_shape(x, nu);
      for (Int r = -20; r <= 20; ++r) {
        bool on_bottom = gamma_contains(x, nu, r, 0);
        bool expected = g.lower_edge && g.lower_edge->first <= r && r <= g.lower_edge->second;
        EXPECT_EQ(on_bottom, expected);
        Int j = g.boundary(r);
        if (j >= 0 && r > g.upper_r_max) EXPECT_FALSE(gamma_contains(x, nu, r, j));
      }
      if (g.boundary(g.upper_r_max) >= 0)
        EXPECT_TRUE(gamma_contains(x, nu, g.upper_r_max, g.boundary(g.upper_r_max)));
    }
  }
}

TEST(LowerGraph, RotationIsNegatedReflection) {
  sampling::Rng rng(33);
  for (int k = 0; k < 500; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    FiniteRoot nu(&sys, static_cast<int>(sampling::uniform(rng, 0, sys.num_roots() - 1)));
    DoubleAffineRoot a{nu, sampling::uniform(rng, -9, 9), sampling::uniform(rng, -9, 9)};
    DoubleAffineRoot b{nu, sampling::uniform(rng, -9, 9), sampling::uniform(rng, -9, 9)};
    EXPECT_EQ(rotate180(b, a), -daff_reflect_root(a, b));
  }
  EXPECT_THROW(rotate180(root(A2(), {1, 0}, 0, 0), root(A2(), {0, 1}, 0, 0)), DomainError);
}

TEST(Corners, AgreeWithExhaustiveScan) {
  sampling::Rng rng(34);
  for (int k = 0; k < 12; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {0, 2, 2, 2});
    for (int id = 0; id < sys.num_roots(); ++id) {
      FiniteRoot nu(&sys, id);
      EXPECT_EQ(corners(x, nu), oracle::corners_scan(x, nu, kWide)) << format_element(x);
    }
  }
}

TEST(Corners, LieOnTheFourLines) {
  sampling::Rng rng(35);
  for (int k = 0; k < 30; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {});
    for (int id = 0; id < sys.num_roots(); ++id) {
      FiniteRoot nu(&sys, id);
      LowerGraph g = gamma_shape(x, nu);
      for (const auto& a : corners(x, nu)) {
        Int c = g.boundary(a.r);
        EXPECT_TRUE(a.j == 0 || a.j == 1 || a.j == c || a.j == c - 1);
      }
    }
  }
}

TEST(LengthDifference, RunningExample) {
  SemigroupElement x = a2_example();
  std::vector<DoubleAffineRoot> expected{a2_alpha(), root(A2(), {1, 1}, -3, 1),
                                         root(A2(), {0, -1}, 1, 0)};
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(length_diff_set(x, a2_alpha()), expected);
  EXPECT_EQ(oracle::length_diff_scan(x, a2_alpha(), kWide), expected);
  EXPECT_THROW(length_diff_set(x, root(A2(), {1, 0}, -1, 0)), DomainError);
}

TEST(LengthDifference, SizesMatchLengthDrops) {
  sampling::Rng rng(36);
  int done = 0;
  while (done < 60) {
    const RootSystem& sys = done % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {});
    auto down = sampling::random_reflection_root(x, rng, false);
    auto up = sampling::random_reflection_root(x, rng, true);
    if (!down || !up) continue;
    ++done;
    Int lx = daff_length(x);
    EXPECT_EQ(static_cast<Int>(length_diff_set(x, *down).size()),
              lx - daff_length(apply_reflection_left(*down, x)));
    EXPECT_EQ(static_cast<Int>(cover_diff_set(x, *up).size()),
              daff_length(apply_reflection_left(*up, x)) - lx);
  }
}

TEST(LengthDifference, CoverSetMatchesScan) {
  sampling::Rng rng(37);
  int done = 0;
  while (done < 20) {
    const RootSystem& sys = done % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {0, 2, 2, 2});
    auto up = sampling::random_reflection_root(x, rng, true);
    if (!up) continue;
    ++done;
    EXPECT_EQ(cover_diff_set(x, *up), oracle::cover_diff_scan(x, *up, kWide));
  }
}

TEST(Cocovers, RunningExampleItems) {
  SemigroupElement x = a2_example();
  SemigroupElement item2 = element(A2(), {1, 1}, 1, 1, {2, 3}, {1, 2, 1});
  SemigroupElement item3 = element(A2(), {1, 1}, 1, 1, {0, 0}, {2});
  DoubleAffineRoot theta_root = root(A2(), {1, 1}, -3, 1);
  DoubleAffineRoot a2_root = root(A2(), {0, -1}, 1, 0);
  EXPECT_EQ(apply_reflection_left(theta_root, x), item2);
  EXPECT_EQ(apply_reflection_left(a2_root, x), item3);
  EXPECT_TRUE(is_cocover(x, theta_root));
  EXPECT_TRUE(is_cocover(x, a2_root));
  EXPECT_FALSE(is_cocover(x, a2_alpha()));
  auto found = alphas(cocovers(x));
  EXPECT_TRUE(std::find(found.begin(), found.end(), theta_root) != found.end());
  EXPECT_TRUE(std::find(found.begin(), found.end(), a2_root) != found.end());
  EXPECT_EQ(found, oracle::cocovers_scan(x, kWide));
}

TEST(Covers, RunningExampleItems) {
  SemigroupElement y = apply_reflection_left(a2_alpha(), a2_example());
  EXPECT_EQ(daff_length(y), 9);
  SemigroupElement item5 = element(A2(), {1, 1}, 1, 1, {2, 0}, {1, 2});
  SemigroupElement item6 = element(A2(), {1, 1}, 1, 1, {3, 3}, {2, 1});
  EXPECT_EQ(apply_reflection_left(root(A2(), {1, 1}, -3, 1), y), item5);
  EXPECT_EQ(apply_reflection_left(root(A2(), {0, -1}, 1, 0), y), item6);
  auto ys = keys(covers(y));
  for (const auto& item : {item5, item6, element(A2(), {1, 1}, 1, 1, {3, 1}, {1, 2}),
                           element(A2(), {1, 1}, 1, 1, {3, 2}, {2, 1})}) {
    EXPECT_EQ(daff_length(item), 10);
    EXPECT_TRUE(std::binary_search(ys.begin(), ys.end(), item.key())) << format_element(item);
  }
  EXPECT_EQ(cover_diff_set(y, root(A2(), {1, 1}, -3, 1)).size(), 1u);
}

TEST(Cocovers, A1ExampleAndClassification) {
  SemigroupElement x = a1_example();
  SemigroupElement y = element(A1(), {-6}, -3, 8, {1}, {1});
  DoubleAffineRoot a0 = root(A1(), {-1}, 1, 0);
  EXPECT_TRUE(is_cocover(x, a0));
  EXPECT_EQ(apply_reflection_left(a0, x), y);
  auto classified = classify_cocovers_qbg(x, 1);
  auto it = std::find_if(classified.begin(), classified.end(),
                         [&](const Cocover& c) { return c.y == y; });
  ASSERT_NE(it, classified.end());
  ASSERT_TRUE(it->descriptor.has_value());
  EXPECT_EQ(it->descriptor->case_id, 1);
  EXPECT_EQ(it->descriptor->j, 0);
}

TEST(Cocovers, HypothesisErrorsNameTheBound) {
  try {
    classify_cocovers_qbg(a2_example(), 1);
    FAIL() << "expected a hypothesis error";
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.bound(), HypothesisError::Bound::kRegular);
  }
  try {
    classify_cocovers_qbg(a1_example(), 5);
    FAIL() << "expected a hypothesis error";
  } catch (const HypothesisError& e) {
    EXPECT_EQ(e.bound(), HypothesisError::Bound::kDominantPairing);
  }
}

TEST(Cocovers, StrategiesAgreeOnDeepDominantElements) {
  sampling::Rng rng(38);
  int done = 0;
  while (done < 15) {
    const RootSystem& sys = done % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {3, 5, 3, 3});
    if (!is_deep_dominant(x)) continue;
    ++done;
    auto fast = cocovers(x, CocoverStrategy::kClassification);
    auto slow = cocovers(x, CocoverStrategy::kCorners);
    EXPECT_EQ(alphas(fast), alphas(slow));
    for (const auto& c : fast) {
      ASSERT_TRUE(c.descriptor.has_value());
      EXPECT_EQ(classify_root(decompose(x), c.alpha)->case_id, c.descriptor->case_id);
    }
  }
}

TEST(Cocovers, EveryCocoverIsACorner) {
  sampling::Rng rng(39);
  for (int k = 0; k < 30; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {});
    for (const auto& c : cocovers(x, CocoverStrategy::kCorners)) {
      EXPECT_TRUE(is_corner(x, c.alpha));
      EXPECT_EQ(daff_length(c.y), daff_length(x) - 1);
    }
  }
}

TEST(Covers, DualToCocovers) {
  sampling::Rng rng(40);
  for (int k = 0; k < 25; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {});
    for (const auto& c : covers(x)) {
      auto down = keys(cocovers(c.y));
      EXPECT_TRUE(std::binary_search(down.begin(), down.end(), x.key()));
    }
    for (const auto& c : cocovers(x)) {
      auto up = keys(covers(c.y));
      EXPECT_TRUE(std::binary_search(up.begin(), up.end(), x.key()));
    }
  }
}

TEST(Covers, AgreeWithScan) {
  sampling::Rng rng(41);
  for (int k = 0; k < 8; ++k) {
    const RootSystem& sys = k % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {0, 2, 2, 2});
    EXPECT_EQ(betas(covers(x)), oracle::covers_scan(x, kWide)) << format_element(x);
  }
}

TEST(Covers, CapIsEnforced) {
  EXPECT_THROW(covers(a2_example(), BruhatOptions{5}), InternalError);
}

TEST(Interval, RunningExample) {
  SemigroupElement x = a2_example();
  SemigroupElement y = apply_reflection_left(a2_alpha(), x);
  Interval iv = interval(y, x);
  ASSERT_FALSE(iv.elements.empty());
  EXPECT_EQ(iv.elements.front(), y);
  EXPECT_EQ(iv.elements.back(), x);
  for (std::size_t k = 0; k < iv.elements.size(); ++k) {
    EXPECT_EQ(iv.lengths[k], daff_length(iv.elements[k]));
    EXPECT_GE(iv.lengths[k], 9);
    EXPECT_LE(iv.lengths[k], 12);
  }
  for (const auto& e : iv.edges) {
    EXPECT_EQ(iv.lengths[e.upper], iv.lengths[e.lower] + 1);
    EXPECT_EQ(apply_reflection_left(e.alpha, iv.elements[e.upper]), iv.elements[e.lower]);
  }
  EXPECT_EQ(keys(iv.elements), keys(oracle::interval_chains(y, x, 3)));
  EXPECT_TRUE(is_leq(y, x));
  EXPECT_FALSE(is_leq(x, y));
  EXPECT_TRUE(is_leq(x, x));
}

TEST(Interval, AgreesWithUpwardChainsOnRandomPairs) {
  sampling::Rng rng(42);
  int done = 0;
  while (done < 10) {
    const RootSystem& sys = done % 2 ? A2() : A1();
    SemigroupElement x = sampling::random_element(sys, rng, {0, 2, 2, 2});
    auto down = sampling::random_reflection_root(x, rng, false);
    if (!down) continue;
    SemigroupElement y = apply_reflection_left(*down, x);
    Int gap = daff_length(x) - daff_length(y);
    if (gap > 4) continue;
    ++done;
    Interval iv = interval(y, x);
    EXPECT_EQ(keys(iv.elements), keys(oracle::interval_chains(y, x, static_cast<int>(gap))));
  }
}

TEST(Interval, IncomparableAndDifferentLevels) {
  SemigroupElement x = a2_example();
  EXPECT_TRUE(interval(x, element(A2(), {1, 1}, 1, 2, {0, 1})).elements.empty());
  EXPECT_FALSE(is_leq(element(A2(), {1, 1}, 1, 2, {0, 1}), x));
  SemigroupElement same_length = element(A2(), {1, 1}, 1, 1, {2, 3}, {1, 2, 1});
  SemigroupElement other = element(A2(), {1, 1}, 1, 1, {0, 0}, {2});
  EXPECT_FALSE(is_leq(same_length, other));
}
