#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hetperc/digraph.hpp"
#include "hetperc/olg.hpp"
#include "hetperc/return_probability.hpp"
#include "hetperc/sparse_matrix.hpp"
#include "hetperc/spectral.hpp"

namespace hetperc {

/// Bound on the directed connectivity tau_{from,to}.
struct PairBound {
  VertexId from = 0;
  VertexId to = 0;
  std::optional<std::size_t> distance;  ///< directed distance from -> to
  double value = 0.0;
  bool unreachable = false;  ///< distance infinite, so tau is exactly 0
  bool vacuous = false;      ///< value > 1
};

struct BoundRecord {
  std::string id;
  std::string formula;  ///< human-readable statement of the inequality
  bool applicable = false;
  std::string reason;   ///< failed precondition when not applicable
  /// Uniform or scalar bound; empty for records carrying only per-item
  /// values or only inputs.
  std::optional<double> value;
  bool vacuous = false;
  std::vector<double> per_vertex;
  std::vector<PairBound> pairs;
  std::vector<std::pair<std::string, double>> inputs;

  double input(const std::string& name) const;
};

/// Matrices, Perron data and structural facts shared by every bound.
struct AnalysisContext {
  SparseNonNegMatrix adjacency_p;
  SparseNonNegMatrix hashimoto_p;
  PerronResult perron_a;
  PerronResult perron_h;
  bool digraph_strongly_connected = false;
  bool olg_strongly_connected = false;
  bool undirected = false;
  std::size_t depth_cap = kDefaultReturnDepth;
  SpectralOptions spectral;
};

AnalysisContext make_context(const Digraph& d, const SiteProbabilities& p,
                             const SpectralOptions& spectral = {},
                             std::size_t depth_cap = kDefaultReturnDepth);

/// Out- and in-cluster bounds from the adjacency Perron vectors.
std::vector<BoundRecord> bound_chi_out_adjacency(const Digraph& d, const SiteProbabilities& p,
                                                 const AnalysisContext& ctx);

/// Out- and in-cluster bounds from the Hashimoto Perron vectors.
std::vector<BoundRecord> bound_chi_out_hashimoto(const Digraph& d, const SiteProbabilities& p,
                                                 const AnalysisContext& ctx);

/// Connectivity bounds for the requested vertex pairs; `rp` is the
/// minimal-return-probability result used by the Hashimoto forms.
std::vector<BoundRecord> bound_connectivity(const Digraph& d, const SiteProbabilities& p,
                                            const AnalysisContext& ctx,
                                            const std::vector<std::pair<VertexId, VertexId>>& pairs,
                                            const ReturnProbability& rp);

/// In-cluster bound from ||H_p||_1, out-cluster bound from ||H_p||_inf, and
/// homogeneous threshold certificates.
std::vector<BoundRecord> bound_chi_norm1(const Digraph& d, const SiteProbabilities& p,
                                         const AnalysisContext& ctx);

/// Bound on the q-th power mean of out-cluster susceptibilities. For q = inf
/// the record bounds max_v chi_out(v). For undirected input and q = 2 a
/// second record with the per-site sqrt(n) bound is appended.
std::vector<BoundRecord> bound_chi_qnorm(const Digraph& d, const SiteProbabilities& p,
                                         const AnalysisContext& ctx, NormKind q);

/// Bound on the expected number of self-avoiding cycles through any arc.
BoundRecord bound_sac(const Digraph& d, const SiteProbabilities& p, const AnalysisContext& ctx);

struct UniquenessReport {
  double rho_h = 0.0;
  bool sac_bounded = false;
  double sac_bound = 0.0;  ///< +inf when not bounded
  std::optional<double> largest_cluster_fraction;
  double large_cluster_threshold = 0.05;
  /// Large clusters coexist with a bounded SAC susceptibility, so a
  /// percolating cluster could not be unique.
  bool flagged_non_unique = false;
  std::string regime;
};

UniquenessReport uniqueness_report(const Digraph& d, const SiteProbabilities& p,
                                   const AnalysisContext& ctx,
                                   std::optional<double> largest_cluster_fraction = std::nullopt,
                                   double large_cluster_threshold = 0.05);

/// Deterministic pair sample: a few evenly spaced sources, and for each the
/// lowest-index vertex at every reachable distance plus one unreachable
/// vertex if any.
std::vector<std::pair<VertexId, VertexId>> default_pairs(const Digraph& d,
                                                         std::size_t max_pairs = 64);

struct BoundReport {
  std::size_t vertex_count = 0;
  std::size_t arc_count = 0;
  bool strictly_interior = true;
  AnalysisContext context;
  OlgReport olg;
  ReturnProbability return_probability;
  std::vector<BoundRecord> records;
  UniquenessReport uniqueness;

  const BoundRecord* find(const std::string& id) const;
};

/// Every bound above on one (digraph, probabilities) pair.
BoundReport analyze(const Digraph& d, const SiteProbabilities& p,
                    const std::vector<std::pair<VertexId, VertexId>>& pairs,
                    const SpectralOptions& spectral = {},
                    std::size_t depth_cap = kDefaultReturnDepth);

}  // namespace hetperc
