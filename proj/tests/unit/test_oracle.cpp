#include <gtest/gtest.h>

#include <cmath>
#include <numeric>

#include "hetperc/corpus.hpp"
#include "hetperc/generators.hpp"
#include "hetperc/oracle.hpp"
#include "test_support.hpp"

namespace hetperc {
namespace {

TEST(Oracle, CompleteTriangle) {
  const double p = 0.3;
  const ExactObservables ex = exact_observables(complete(3), SiteProbabilities::homogeneous(3, p));
  for (int k = 0; k < 4; ++k) {
    for (double c : ex.chi[k]) EXPECT_NEAR(c, p * (1 + 2 * p), 1e-14);
  }
  EXPECT_NEAR(ex.tau(ClusterMode::out, 0, 1), p * p, 1e-14);
  EXPECT_NEAR(ex.tau(ClusterMode::out, 2, 2), p, 1e-14);
  for (double s : ex.chi_sac) EXPECT_NEAR(s, p * p * p, 1e-14);
}

TEST(Oracle, OrientedTriangle) {
  const double p = 0.4;
  const ExactObservables ex =
      exact_observables(oriented_cycle(3), SiteProbabilities::homogeneous(3, p));
  EXPECT_NEAR(ex.chi[1][0], p + p * p + p * p * p, 1e-14);
  EXPECT_NEAR(ex.chi[3][0], p + 2 * p * p * p, 1e-14);
  EXPECT_NEAR(ex.tau(ClusterMode::in, 0, 1), ex.tau(ClusterMode::out, 1, 0), 0.0);
  EXPECT_NEAR(ex.tau(ClusterMode::out, 0, 2), p * p * p, 1e-14);
}

TEST(Oracle, DirectedPath) {
  const Digraph d = test::arcs_graph(3, {{0, 1}, {1, 2}});
  const ExactObservables ex = exact_observables(d, SiteProbabilities({0.5, 0.5, 0.5}));
  EXPECT_NEAR(ex.chi[1][0], 0.5 + 0.25 + 0.125, 1e-15);
  EXPECT_NEAR(ex.chi[2][0], 0.5, 1e-15);
  EXPECT_NEAR(ex.chi[0][1], 0.5 * (1 + 0.5 + 0.5), 1e-15);
  for (double s : ex.chi_sac) EXPECT_EQ(s, 0.0);
}

TEST(Oracle, IdentityAndDistributionsOnCorpus) {
  for (const CorpusInstance& inst : oracle_corpus(5, 20, 10)) {
    const ExactObservables ex = exact_observables(inst.graph, inst.p);
    EXPECT_LT(exact_chi_identity_defect(ex), 1e-12) << inst.name;
    const std::size_t n = inst.graph.vertex_count();
    for (int k = 0; k < 4; ++k) {
      const auto& dist = ex.largest_distribution[k];
      ASSERT_EQ(dist.size(), n + 1);
      EXPECT_NEAR(std::accumulate(dist.begin(), dist.end(), 0.0), 1.0, 1e-12) << inst.name;
    }
    for (VertexId v = 0; v < n; ++v) {
      EXPECT_NEAR(ex.tau(ClusterMode::out, v, v), inst.p[v], 1e-14);
      EXPECT_LE(ex.chi[3][v], std::min(ex.chi[1][v], ex.chi[2][v]) + 1e-12);
      EXPECT_LE(std::max(ex.chi[1][v], ex.chi[2][v]), ex.chi[0][v] + 1e-12);
    }
  }
}

TEST(Oracle, CertainConfiguration) {
  const ExactObservables ex = exact_observables(cycle(5), SiteProbabilities::homogeneous(5, 1.0));
  EXPECT_DOUBLE_EQ(ex.largest_distribution[0][5], 1.0);
  EXPECT_DOUBLE_EQ(ex.chi[3][2], 5.0);
}

TEST(Oracle, RefusesLargeGraphs) {
  EXPECT_THROW(exact_observables(cycle(kOracleMaxVertices + 1),
                                 SiteProbabilities::homogeneous(kOracleMaxVertices + 1, 0.5)),
               std::invalid_argument);
}

}  // namespace
}  // namespace hetperc
