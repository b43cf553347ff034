#include "hetperc/return_probability.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "hetperc/matrices.hpp"
#include "hetperc/olg.hpp"

namespace hetperc {

namespace {

// Largest weight of a non-backtracking walk from `start` to `target`
// with between 1 and `cap` transitions, each scaled by 1/lambda; 0 if none.
double best_return_weight(const SparseNonNegMatrix& h, ArcId start, ArcId target, double lambda,
                          std::size_t cap, std::vector<double>& cur, std::vector<double>& next,
                          std::vector<ArcId>& frontier, std::vector<ArcId>& staged) {
  double best = 0.0;
  frontier.assign(1, start);
  cur[start] = 1.0;
  for (std::size_t step = 1; step <= cap && !frontier.empty(); ++step) {
    staged.clear();
    for (ArcId x : frontier) {
      const auto cols = h.row_cols(x);
      const auto vals = h.row_values(x);
      for (std::size_t k = 0; k < cols.size(); ++k) {
        const double w = cur[x] * vals[k] / lambda;
        if (w <= 0.0) continue;
        if (next[cols[k]] == 0.0) staged.push_back(cols[k]);
        next[cols[k]] = std::max(next[cols[k]], w);
      }
    }
    for (ArcId x : frontier) cur[x] = 0.0;
    best = std::max(best, next[target]);
    frontier.swap(staged);
    for (ArcId x : frontier) {
      cur[x] = next[x];
      next[x] = 0.0;
    }
  }
  for (ArcId x : frontier) cur[x] = 0.0;
  return best;
}

}  // namespace

ReturnProbability minimal_return_probability(const Digraph& d, const SiteProbabilities& p,
                                             const SparseNonNegMatrix& hashimoto_p, double lambda,
                                             std::size_t depth_cap) {
  require_matching_size(d, p);
  ReturnProbability out;
  out.lambda = lambda;
  out.depth_cap = depth_cap;
  out.olg_strongly_connected = olg_strongly_connected(d);
  const std::size_t n = d.vertex_count();
  constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
  out.per_vertex.assign(n, kNaN);
  if (!(lambda > 0.0)) {
    out.reason = "spectral radius of H_p is zero";
    return out;
  }

  std::vector<double> cur(d.arc_count(), 0.0);
  std::vector<double> next(d.arc_count(), 0.0);
  std::vector<ArcId> frontier;
  std::vector<ArcId> staged;
  bool all_certified = true;
  for (VertexId j = 0; j < n; ++j) {
    double pj = p[j] / lambda;
    bool certified = true;
    for (ArcId a : d.in_arcs(j)) {
      if (!d.has_inverse(a)) continue;  // contributes p_j / lambda, already included
      const double w = best_return_weight(hashimoto_p, a, d.inverse(a), lambda, depth_cap, cur,
                                          next, frontier, staged);
      if (w == 0.0) {
        certified = false;
        break;
      }
      pj = std::min(pj, w);
    }
    if (certified) {
      out.per_vertex[j] = pj;
    } else {
      all_certified = false;
    }
  }

  if (!all_certified) {
    out.reason = "some inverse arc is not reachable within " + std::to_string(depth_cap) +
                 " non-backtracking steps";
    return out;
  }
  out.p_min = *std::min_element(out.per_vertex.begin(), out.per_vertex.end());
  if (!out.olg_strongly_connected) {
    out.reason = "oriented line graph is not strongly connected";
    return out;
  }
  out.applicable = true;
  return out;
}

ReturnProbability minimal_return_probability(const Digraph& d, const SiteProbabilities& p,
                                             double lambda, std::size_t depth_cap) {
  return minimal_return_probability(d, p, weighted_hashimoto(d, p), lambda, depth_cap);
}

}  // namespace hetperc
