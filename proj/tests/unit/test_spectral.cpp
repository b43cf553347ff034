#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "hetperc/corpus.hpp"
#include "hetperc/generators.hpp"
#include "hetperc/matrices.hpp"
#include "hetperc/scc.hpp"
#include "hetperc/spectral.hpp"
#include "test_support.hpp"

namespace hetperc {
namespace {

TEST(Spectral, CompleteGraphK4) {
  const Digraph k4 = complete(4);
  const PerronResult a = spectral_radius(adjacency_matrix(k4));
  const PerronResult h = spectral_radius(hashimoto_matrix(k4));
  EXPECT_TRUE(a.converged);
  EXPECT_NEAR(a.rho, 3.0, 1e-9);
  EXPECT_NEAR(h.rho, 2.0, 1e-9);
  EXPECT_LE(a.rho_lower, 3.0 + 1e-12);
  EXPECT_GE(a.rho_upper, 3.0 - 1e-12);
  EXPECT_NEAR(a.gamma_R.value, 1.0, 1e-8);
  EXPECT_NEAR(a.gamma_L.value, 1.0, 1e-8);
}

TEST(Spectral, AcyclicPatternIsExactlyZero) {
  const Digraph path = test::arcs_graph(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  const PerronResult r = spectral_radius(adjacency_matrix(path));
  EXPECT_EQ(r.rho, 0.0);
  EXPECT_EQ(r.rho_upper, 0.0);
  EXPECT_TRUE(r.converged);
  EXPECT_TRUE(std::isinf(r.gamma_R.value));
  const PerronResult t = spectral_radius(hashimoto_matrix(rooted_tree(3, 3)));
  EXPECT_EQ(t.rho, 0.0);
}

TEST(Spectral, PeriodicPatternsConverge) {
  // Oriented cycle: period n; even cycle adjacency: bipartite, period 2.
  const PerronResult oc = spectral_radius(adjacency_matrix(oriented_cycle(7)));
  EXPECT_TRUE(oc.converged);
  EXPECT_NEAR(oc.rho, 1.0, 1e-9);
  const PerronResult c6 = spectral_radius(adjacency_matrix(cycle(6)));
  EXPECT_TRUE(c6.converged);
  EXPECT_NEAR(c6.rho, 2.0, 1e-9);
}

TEST(Spectral, ReducibleMatrixTakesLargestClass) {
  // Triangle feeding into an oriented 2-cycle-free path and a 4-clique.
  std::vector<Arc> arcs{{0, 1}, {1, 2}, {2, 0}, {2, 3}};
  for (VertexId u = 3; u < 7; ++u) {
    for (VertexId v = 3; v < 7; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  const Digraph d = Digraph::from_arcs(7, arcs);
  const PerronResult r = spectral_radius(adjacency_matrix(d));
  EXPECT_FALSE(r.irreducible);
  EXPECT_NEAR(r.rho, 3.0, 1e-9);
  EXPECT_TRUE(std::isinf(r.gamma_R.value));
}

TEST(Spectral, MatchesDenseEigensolverOnRandomWeightedMatrices) {
  for (const CorpusInstance& inst : spectral_corpus(17, 60, 18)) {
    const Digraph& d = inst.graph;
    for (const SparseNonNegMatrix& m :
         {weighted_adjacency(d, inst.p), weighted_line_adjacency(d, inst.p),
          weighted_hashimoto(d, inst.p)}) {
      const PerronResult r = spectral_radius(m);
      const double expected = test::dense_spectral_radius(m);
      ASSERT_TRUE(r.converged) << inst.name;
      const SccResult scc = tarjan_scc<std::uint32_t>(m.row_offsets(), m.col_indices());
      if (scc.count() == m.dimension()) {
        // Nilpotent: the dense solver only sees rounding noise of order eps^(1/k).
        EXPECT_EQ(r.rho, 0.0) << inst.name;
        EXPECT_LT(expected, 1e-3) << inst.name;
        continue;
      }
      EXPECT_NEAR(r.rho, expected, 1e-8 * std::max(1.0, expected)) << inst.name;
      EXPECT_LE(r.rho_lower, expected + 1e-9) << inst.name;
      EXPECT_GE(r.rho_upper, expected - 1e-9) << inst.name;
    }
  }
}

TEST(Spectral, PerronVectorsAreEigenvectors) {
  const Digraph d = two_region(4, 3, 2, 9);
  const auto a = weighted_adjacency(d, SiteProbabilities::homogeneous(d.vertex_count(), 0.3));
  const PerronResult r = spectral_radius(a);
  ASSERT_TRUE(r.irreducible);
  std::vector<double> y(a.dimension());
  a.multiply(r.right_vec, y);
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(y[i], r.rho * r.right_vec[i], 1e-9);
  a.multiply_transpose(r.left_vec, y);
  for (std::size_t i = 0; i < y.size(); ++i) EXPECT_NEAR(y[i], r.rho * r.left_vec[i], 1e-9);
}

TEST(Spectral, HeightRatio) {
  const std::vector<double> v{0.5, 2.0, 1.0};
  EXPECT_DOUBLE_EQ(height_ratio(v).value, 4.0);
  EXPECT_FALSE(height_ratio(v).zero_support);
  const std::vector<double> z{0.0, 1.0};
  EXPECT_TRUE(height_ratio(z).zero_support);
  EXPECT_TRUE(std::isinf(height_ratio(z).value));
  const std::vector<double> empty;
  EXPECT_ANY_THROW(height_ratio(empty));
}

TEST(Spectral, InducedNormsMatchDense) {
  const auto m = SparseNonNegMatrix::from_triplets(
      3, {{0, 1, 1.0}, {0, 2, 0.5}, {1, 2, 2.0}, {2, 0, 3.0}, {2, 2, 0.25}});
  const Eigen::MatrixXd dm = test::dense(m);
  EXPECT_DOUBLE_EQ(induced_norm(m, NormKind::one), dm.cwiseAbs().colwise().sum().maxCoeff());
  EXPECT_DOUBLE_EQ(induced_norm(m, NormKind::inf), dm.cwiseAbs().rowwise().sum().maxCoeff());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(dm);
  EXPECT_NEAR(induced_norm(m, NormKind::two), svd.singularValues()(0), 1e-9);
}

TEST(Spectral, WalkProfileMatchesDensePowers) {
  const Digraph d = complete(4);
  const auto h = weighted_hashimoto(d, SiteProbabilities({0.3, 0.5, 0.7, 0.9}));
  WalkProfileOptions opts;
  opts.transpose_term = true;
  opts.diagonal = {0, 5};
  const WalkProfile w = walk_profile(h, 5, opts);
  const Eigen::MatrixXd dm = test::dense(h);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(dm.rows(), dm.cols());
  for (std::size_t m = 1; m <= 5; ++m) {
    const Eigen::MatrixXd prev = power;
    power = power * dm;
    const Eigen::VectorXd rows = power.rowwise().sum();
    const Eigen::VectorXd cols_prev = prev.colwise().sum();
    for (Eigen::Index u = 0; u < rows.size(); ++u) {
      EXPECT_NEAR(w.row_sums[m - 1][u], rows(u), 1e-12);
      EXPECT_NEAR(w.transposed[m - 1][u], cols_prev(u), 1e-12);
    }
    EXPECT_NEAR(w.sup_row_sum[m - 1], rows.maxCoeff(), 1e-12);
    EXPECT_NEAR(w.growth[m - 1], std::pow(rows.maxCoeff(), 1.0 / static_cast<double>(m)), 1e-12);
    EXPECT_NEAR(w.diagonal[0][m - 1], power(0, 0), 1e-12);
    EXPECT_NEAR(w.diagonal[1][m - 1], power(5, 5), 1e-12);
  }
}

TEST(Spectral, WalkProfileBudgetRefusal) {
  WalkProfileOptions opts;
  opts.cost_budget = 10;
  EXPECT_THROW(walk_profile(hashimoto_matrix(complete(5)), 50, opts), BudgetExceeded);
}

}  // namespace
}  // namespace hetperc
