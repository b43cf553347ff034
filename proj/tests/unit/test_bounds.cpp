#include <gtest/gtest.h>

#include <cmath>

#include "hetperc/bounds.hpp"
#include "hetperc/generators.hpp"
#include "test_support.hpp"

namespace hetperc {
namespace {

const BoundRecord& record(const BoundReport& r, const std::string& id) {
  const BoundRecord* rec = r.find(id);
  if (!rec) throw std::runtime_error("missing record " + id);
  return *rec;
}

class K4Bounds : public ::testing::Test {
 protected:
  Digraph k4 = complete(4);
  SiteProbabilities p = SiteProbabilities::homogeneous(4, 0.25);
  BoundReport report = analyze(k4, p, {{0, 1}, {2, 3}});
};

TEST_F(K4Bounds, AdjacencyForms) {
  const BoundRecord& out = record(report, "chi_out_adjacency");
  ASSERT_TRUE(out.applicable) << out.reason;
  EXPECT_NEAR(*out.value, 4.0, 1e-8);  // gamma / (1 - rho) with rho = 3/4
  for (double v : out.per_vertex) EXPECT_NEAR(v, 2.0, 1e-8);
  EXPECT_FALSE(out.vacuous);
  EXPECT_TRUE(record(report, "chi_in_adjacency").applicable);
}

TEST_F(K4Bounds, HashimotoForms) {
  const BoundRecord& out = record(report, "chi_out_hashimoto");
  ASSERT_TRUE(out.applicable) << out.reason;
  for (double v : out.per_vertex) EXPECT_NEAR(v, 7.0, 1e-7);
  EXPECT_TRUE(out.vacuous);  // 7 > n = 4
  const BoundRecord& tau = record(report, "tau_hashimoto_either");
  ASSERT_TRUE(tau.applicable) << tau.reason;
  EXPECT_NEAR(tau.input("P_min"), 1.0 / 16.0, 1e-9);
  for (const PairBound& b : tau.pairs) EXPECT_NEAR(b.value, 64.0, 1e-6);
}

TEST_F(K4Bounds, NormForms) {
  const BoundRecord& in = record(report, "chi_in_norm1");
  ASSERT_TRUE(in.applicable);
  for (double v : in.per_vertex) EXPECT_NEAR(v, 7.0, 1e-12);
  const BoundRecord& qinf = record(report, "chi_out_qnorm_inf");
  ASSERT_TRUE(qinf.applicable);
  EXPECT_NEAR(*qinf.value, 4.0, 1e-12);
  const BoundRecord& sac = record(report, "sac");
  ASSERT_TRUE(sac.applicable);
  EXPECT_NEAR(*sac.value, 2.0, 1e-8);
  const BoundRecord& cert = record(report, "threshold_certificates");
  EXPECT_NEAR(cert.input("inv_rho_H"), 0.5, 1e-9);
  EXPECT_NEAR(cert.input("inv_dmax_minus_1"), 0.5, 1e-12);
}

TEST_F(K4Bounds, UndirectedForms) {
  const BoundRecord& tau = record(report, "tau_undirected_adjacency");
  ASSERT_TRUE(tau.applicable);
  for (const PairBound& b : tau.pairs) EXPECT_NEAR(b.value, 0.75 / 0.25, 1e-8);
  EXPECT_TRUE(record(report, "chi_undirected_sqrt_n").applicable);
}

TEST(Bounds, SupercriticalIsInapplicableWithReason) {
  const BoundReport r = analyze(complete(4), SiteProbabilities::homogeneous(4, 0.5), {});
  const BoundRecord& rec = record(r, "chi_out_adjacency");
  EXPECT_FALSE(rec.applicable);
  EXPECT_NE(rec.reason.find(">= 1"), std::string::npos);
  EXPECT_FALSE(rec.value.has_value());
}

TEST(Bounds, NotStronglyConnectedBlocksVectorForms) {
  const Digraph path = test::arcs_graph(3, {{0, 1}, {1, 2}});
  const BoundReport r = analyze(path, SiteProbabilities::homogeneous(3, 0.5), {{0, 2}});
  EXPECT_FALSE(record(r, "chi_out_adjacency").applicable);
  EXPECT_FALSE(record(r, "tau_hashimoto_either").applicable);
  EXPECT_TRUE(record(r, "chi_out_norminf").applicable);
}

TEST(Bounds, UnreachablePairIsExactlyZero) {
  // Strongly connected ring with a one-way chord; pair bounds in both
  // directions are reported, so check the direction flags.
  const Digraph d = oriented_cycle(5);
  const BoundReport r = analyze(d, SiteProbabilities::homogeneous(5, 0.5), {{0, 2}});
  const BoundRecord& pair = record(r, "tau_adjacency_pair");
  ASSERT_TRUE(pair.applicable) << pair.reason;
  ASSERT_EQ(pair.pairs.size(), 2u);
  EXPECT_EQ(pair.pairs[0].distance, std::optional<std::size_t>(2));
  EXPECT_EQ(pair.pairs[1].distance, std::optional<std::size_t>(3));
  EXPECT_NEAR(pair.pairs[0].value, 0.25 / 0.5, 1e-8);
}

TEST(Bounds, DefaultPairsAreDeterministicAndBounded) {
  const Digraph d = torus({5, 5});
  const auto a = default_pairs(d);
  EXPECT_EQ(a, default_pairs(d));
  EXPECT_LE(a.size(), 64u);
  EXPECT_FALSE(a.empty());
  for (const auto& [u, v] : a) EXPECT_NE(u, v);
}

TEST(Bounds, UniquenessReportFlagsLargeClustersWhenSacBounded) {
  const Digraph d = complete(4);
  const SiteProbabilities p = SiteProbabilities::homogeneous(4, 0.25);
  const AnalysisContext ctx = make_context(d, p);
  const UniquenessReport none = uniqueness_report(d, p, ctx);
  EXPECT_TRUE(none.sac_bounded);
  EXPECT_TRUE(none.flagged_non_unique);
  const UniquenessReport small = uniqueness_report(d, p, ctx, 0.01);
  EXPECT_FALSE(small.flagged_non_unique);
  const UniquenessReport large = uniqueness_report(d, p, ctx, 0.5);
  EXPECT_TRUE(large.flagged_non_unique);
  const AnalysisContext hot = make_context(d, SiteProbabilities::homogeneous(4, 0.9));
  EXPECT_FALSE(uniqueness_report(d, SiteProbabilities::homogeneous(4, 0.9), hot).sac_bounded);
}

TEST(Bounds, TwoRegionHeightRatioGrowsWithL) {
  const SiteProbabilities p20 = SiteProbabilities::homogeneous(2 * 20 * 20, 0.3);
  const SiteProbabilities p6 = SiteProbabilities::homogeneous(2 * 6 * 6, 0.3);
  const AnalysisContext a = make_context(two_region(6, 3, 2, 1), p6);
  const AnalysisContext b = make_context(two_region(20, 3, 2, 1), p20);
  EXPECT_GT(b.perron_a.gamma_R.value, 100.0 * a.perron_a.gamma_R.value);
}

}  // namespace
}  // namespace hetperc
