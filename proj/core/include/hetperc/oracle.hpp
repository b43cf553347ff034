#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "hetperc/clusters.hpp"
#include "hetperc/digraph.hpp"

namespace hetperc {

inline constexpr std::size_t kOracleMaxVertices = 15;

/*
  Exact percolation observables from enumerating all 2^n open/closed
  configurations, each weighted by prod p_v^{x_v} (1 - p_v)^{1 - x_v}.
  Configurations are visited in increasing bitmask order (bit v = vertex v
  open) so the floating-point summation order is fixed.

  The SAC susceptibility does not need the configuration sum: a cycle is
  present exactly when all of its vertices are open, so it is the sum over
  the directed self-avoiding cycles (length >= 3) through the arc of the
  product of their vertex probabilities.
*/
struct ExactObservables {
  std::size_t n = 0;
  /// chi[mode][v]: expected size of the mode-cluster of v (0 when v is closed).
  std::array<std::vector<double>, 4> chi;
  /// Row-major n x n. tau_out[u*n+v] = P(v reachable from u in the open subgraph);
  /// tau_str is mutual reachability, tau_und weak connectivity. Diagonal = p_v.
  std::vector<double> tau_out;
  std::vector<double> tau_str;
  std::vector<double> tau_und;
  /// Per arc: expected number of self-avoiding cycles through it, total and by length.
  std::vector<double> chi_sac;
  std::vector<std::vector<double>> chi_sac_by_length;
  /// largest_distribution[mode][k] = P(largest mode-cluster has size k).
  std::array<std::vector<double>, 4> largest_distribution;

  double tau(ClusterMode mode, VertexId u, VertexId v) const;
};

/// Throws std::invalid_argument above kOracleMaxVertices vertices or when the
/// cycle enumeration exceeds `cycle_budget` extensions.
ExactObservables exact_observables(const Digraph& d, const SiteProbabilities& p,
                                   std::uint64_t cycle_budget = 50'000'000);

/// Largest |chi - sum of tau| over vertices and modes; zero up to rounding
/// when the tables are consistent.
double exact_chi_identity_defect(const ExactObservables& obs);

}  // namespace hetperc
