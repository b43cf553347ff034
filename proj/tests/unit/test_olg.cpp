#include <gtest/gtest.h>

#include <cmath>

#include "hetperc/generators.hpp"
#include "hetperc/matrices.hpp"
#include "hetperc/olg.hpp"
#include "hetperc/return_probability.hpp"
#include "hetperc/spectral.hpp"
#include "test_support.hpp"

namespace hetperc {
namespace {

TEST(Olg, OrientedGraphsSatisfyConditionA) {
  const OlgReport r = olg_connectivity_report(oriented_cycle(5));
  EXPECT_TRUE(r.digraph_strongly_connected);
  EXPECT_TRUE(r.olg_strongly_connected);
  EXPECT_EQ(r.condition, OlgCondition::a);
}

// Removing any single arc of an undirected cycle leaves it strongly
// connected, so the bond-by-bond condition (b) holds, yet the oriented line
// graph is two disjoint directed cycles. The report keeps the ground truth
// separately and the bounds only use that.
TEST(Olg, UndirectedCycleOlgSplitsIntoTwoOrientations) {
  const OlgReport r = olg_connectivity_report(cycle(6));
  EXPECT_TRUE(r.digraph_strongly_connected);
  EXPECT_FALSE(r.olg_strongly_connected);
  EXPECT_EQ(r.condition, OlgCondition::b);
  EXPECT_FALSE(olg_strongly_connected(cycle(6)));
}

TEST(Olg, K4SatisfiesConditionBWithReturnLengthFour) {
  const OlgReport r = olg_connectivity_report(complete(4));
  EXPECT_TRUE(r.olg_strongly_connected);
  EXPECT_EQ(r.condition, OlgCondition::b);
  for (const auto& len : r.return_length) {
    ASSERT_TRUE(len.has_value());
    EXPECT_EQ(*len, 4u);
  }
}

TEST(Olg, TreeHasNoStronglyConnectedOlg) {
  EXPECT_FALSE(olg_strongly_connected(rooted_tree(2, 3)));
}

TEST(ReturnProbability, K4HomogeneousIsOneSixteenth) {
  const Digraph k4 = complete(4);
  const SiteProbabilities p = SiteProbabilities::homogeneous(4, 0.25);
  const auto h = weighted_hashimoto(k4, p);
  const double lambda = spectral_radius(h).rho_upper;
  EXPECT_NEAR(lambda, 0.5, 1e-9);
  const ReturnProbability rp = minimal_return_probability(k4, p, h, lambda);
  ASSERT_TRUE(rp.applicable) << rp.reason;
  EXPECT_NEAR(rp.p_min, 1.0 / 16.0, 1e-9);
  for (double v : rp.per_vertex) EXPECT_NEAR(v, 1.0 / 16.0, 1e-9);
}

TEST(ReturnProbability, OrientedArcsUseProbabilityOverLambda) {
  const Digraph d = oriented_cycle(4);
  const SiteProbabilities p({0.2, 0.4, 0.6, 0.8});
  const ReturnProbability rp = minimal_return_probability(d, p, 0.5);
  ASSERT_TRUE(rp.applicable);
  for (VertexId v = 0; v < 4; ++v) EXPECT_NEAR(rp.per_vertex[v], p[v] / 0.5, 1e-12);
}

TEST(ReturnProbability, UnreachableInverseIsInapplicable) {
  const ReturnProbability rp =
      minimal_return_probability(cycle(5), SiteProbabilities::homogeneous(5, 0.5), 1.0);
  EXPECT_FALSE(rp.applicable);
  EXPECT_FALSE(rp.reason.empty());
  EXPECT_TRUE(std::isnan(rp.per_vertex[0]));
}

}  // namespace
}  // namespace hetperc
