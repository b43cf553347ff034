#include <gtest/gtest.h>

#include <set>

#include "hetperc/generators.hpp"
#include "hetperc/oracle.hpp"
#include "hetperc/sac.hpp"
#include "hetperc/spectral.hpp"
#include "test_support.hpp"

namespace hetperc {
namespace {

TEST(Sac, TriangleHasOneCyclePerOrientation) {
  const Digraph d = cycle(3);
  const OpenMask open(3, 1);
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const SacCount c = count_sacs(d, open, a, 3);
    EXPECT_EQ(c.total, 1u);
    EXPECT_EQ(c.by_length[3], 1u);
    EXPECT_EQ(c.by_length[2], 0u);  // backtracking is not a cycle
  }
}

TEST(Sac, ClosedVertexKillsCycles) {
  const Digraph d = cycle(3);
  EXPECT_EQ(count_sacs(d, OpenMask{1, 1, 0}, 0, 3).total, 0u);
}

TEST(Sac, TreesHaveNone) {
  const Digraph t = regular_tree(3, 3);
  const OpenMask open(t.vertex_count(), 1);
  for (ArcId a = 0; a < t.arc_count(); ++a) EXPECT_EQ(count_sacs(t, open, a, 20).total, 0u);
}

TEST(Sac, CompleteGraphCounts) {
  // In K_n a cycle of length s through a fixed arc picks an ordered
  // sequence of s - 2 further vertices: (n-2)!/(n-s)!.
  const Digraph d = complete(5);
  const SacCount c = count_sacs(d, OpenMask(5, 1), 0, 5);
  EXPECT_EQ(c.by_length[3], 3u);
  EXPECT_EQ(c.by_length[4], 6u);
  EXPECT_EQ(c.by_length[5], 6u);
  EXPECT_EQ(c.total, 15u);
  EXPECT_EQ(count_sacs(d, OpenMask(5, 1), 0, 4).total, 9u);
}

TEST(Sac, EnumerationListsDistinctCyclesStartingAtTail) {
  const Digraph d = complete(4);
  const Arc a = d.arc(0);
  std::set<std::vector<VertexId>> seen;
  for_each_sac(d, OpenMask(4, 1), 0, 4, [&](std::span<const VertexId> cyc) {
    EXPECT_EQ(cyc[0], a.tail);
    EXPECT_EQ(cyc[1], a.head);
    seen.emplace(cyc.begin(), cyc.end());
  });
  EXPECT_EQ(seen.size(), 4u);
}

TEST(Sac, MatchesOracleExpectationOnK4) {
  const Digraph d = complete(4);
  const SiteProbabilities p({0.3, 0.5, 0.7, 0.9});
  const ExactObservables ex = exact_observables(d, p);
  // Expectation by explicit enumeration of open configurations.
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    double expected = 0.0;
    for (unsigned mask = 0; mask < 16; ++mask) {
      OpenMask open(4);
      double w = 1.0;
      for (unsigned v = 0; v < 4; ++v) {
        open[v] = (mask >> v) & 1u;
        w *= open[v] ? p[v] : 1.0 - p[v];
      }
      expected += w * static_cast<double>(count_sacs(d, open, a, 4).total);
    }
    EXPECT_NEAR(ex.chi_sac[a], expected, 1e-12);
  }
}

TEST(Sac, BudgetIsEnforced) {
  const Digraph d = complete(9);
  EXPECT_THROW(count_sacs(d, OpenMask(9, 1), 0, 9, 100), BudgetExceeded);
}

TEST(Sac, LengthCapTruncates) {
  const Digraph d = oriented_cycle(6);
  EXPECT_EQ(count_sacs(d, OpenMask(6, 1), 0, 5).total, 0u);
  EXPECT_EQ(count_sacs(d, OpenMask(6, 1), 0, 6).total, 1u);
}

}  // namespace
}  // namespace hetperc
