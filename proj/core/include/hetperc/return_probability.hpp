#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "hetperc/digraph.hpp"
#include "hetperc/sparse_matrix.hpp"

namespace hetperc {

inline constexpr std::size_t kDefaultReturnDepth = 12;

struct ReturnProbability {
  bool applicable = false;
  std::string reason;  ///< why P_min is unavailable, empty when applicable
  double lambda = 0.0;
  std::size_t depth_cap = kDefaultReturnDepth;
  /// P_j per vertex; NaN for vertices whose value could not be certified.
  std::vector<double> per_vertex;
  double p_min = 0.0;
  bool olg_strongly_connected = false;
};

/*
  Minimal return probability P_j.

  For an in-arc a = l -> j whose inverse exists, the best path weight is
  the maximum over non-backtracking walks a = a_0, a_1, ..., a_k = inverse(a)
  with 1 <= k <= depth_cap of prod_t (H_p)_{a_{t-1} a_t} / lambda^k, found by
  a layered max-product relaxation. Arcs without an inverse contribute
  p_j / lambda. P_j is the minimum of p_j / lambda and the per-arc values.

  Walks give the same inequality chain as self-avoiding paths, so using
  them can only tighten P_j; truncating at depth_cap can only lower it.
  A vertex with an in-arc whose inverse exists but is not reached within
  the cap is marked uncertified (NaN), and P_min is then inapplicable.
*/
ReturnProbability minimal_return_probability(const Digraph& d, const SiteProbabilities& p,
                                             const SparseNonNegMatrix& hashimoto_p, double lambda,
                                             std::size_t depth_cap = kDefaultReturnDepth);

ReturnProbability minimal_return_probability(const Digraph& d, const SiteProbabilities& p,
                                             double lambda,
                                             std::size_t depth_cap = kDefaultReturnDepth);

}  // namespace hetperc
