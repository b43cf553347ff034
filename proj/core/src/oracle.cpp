#include "hetperc/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

namespace hetperc {

namespace {

using Mask = std::uint32_t;

// Forward closure of every open vertex inside the open set `open`.
void closure(const std::vector<Mask>& adj, Mask open, std::size_t n, std::vector<Mask>& reach) {
  for (std::size_t v = 0; v < n; ++v) {
    reach[v] = (open >> v & 1u) ? ((adj[v] & open) | (Mask{1} << v)) : 0;
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!(open >> k & 1u)) continue;
    const Mask bit = Mask{1} << k;
    for (std::size_t v = 0; v < n; ++v) {
      if (reach[v] & bit) reach[v] |= reach[k];
    }
  }
}

class CycleSums {
 public:
  CycleSums(const Digraph& d, const SiteProbabilities& p, std::uint64_t budget)
      : d_(d), p_(p), budget_(budget) {}

  // Sum over simple cycles tail -> head -> ... -> tail of length >= 3.
  void through(ArcId a, double& total, std::vector<double>& by_length) {
    const Arc& arc = d_.arc(a);
    target_ = arc.tail;
    total_ = &total;
    by_length_ = &by_length;
    visited_ = (Mask{1} << arc.tail) | (Mask{1} << arc.head);
    extend(arc.head, 2, p_[arc.tail] * p_[arc.head]);
  }

 private:
  void extend(VertexId v, std::size_t length, double weight) {
    for (VertexId w : d_.out_neighbors(v)) {
      if (++expansions_ > budget_) {
        throw std::invalid_argument("oracle cycle enumeration exceeded its budget");
      }
      if (w == target_) {
        if (length >= 3) {
          *total_ += weight;
          (*by_length_)[length] += weight;
        }
        continue;
      }
      const Mask bit = Mask{1} << w;
      if (visited_ & bit) continue;
      visited_ |= bit;
      extend(w, length + 1, weight * p_[w]);
      visited_ &= ~bit;
    }
  }

  const Digraph& d_;
  const SiteProbabilities& p_;
  std::uint64_t budget_;
  std::uint64_t expansions_ = 0;
  VertexId target_ = 0;
  Mask visited_ = 0;
  double* total_ = nullptr;
  std::vector<double>* by_length_ = nullptr;
};

}  // namespace

double ExactObservables::tau(ClusterMode mode, VertexId u, VertexId v) const {
  switch (mode) {
    case ClusterMode::und: return tau_und[u * n + v];
    case ClusterMode::out: return tau_out[u * n + v];
    case ClusterMode::in: return tau_out[v * n + u];
    case ClusterMode::str: return tau_str[u * n + v];
  }
  return 0.0;
}

ExactObservables exact_observables(const Digraph& d, const SiteProbabilities& p,
                                   std::uint64_t cycle_budget) {
  require_matching_size(d, p);
  const std::size_t n = d.vertex_count();
  if (n > kOracleMaxVertices) {
    throw std::invalid_argument("exact enumeration supports at most " +
                                std::to_string(kOracleMaxVertices) + " vertices, got " +
                                std::to_string(n));
  }

  std::vector<Mask> out_adj(n, 0), und_adj(n, 0);
  for (const Arc& a : d.arcs()) {
    out_adj[a.tail] |= Mask{1} << a.head;
    und_adj[a.tail] |= Mask{1} << a.head;
    und_adj[a.head] |= Mask{1} << a.tail;
  }

  ExactObservables obs;
  obs.n = n;
  for (auto& c : obs.chi) c.assign(n, 0.0);
  for (auto& l : obs.largest_distribution) l.assign(n + 1, 0.0);
  obs.tau_out.assign(n * n, 0.0);
  obs.tau_str.assign(n * n, 0.0);
  obs.tau_und.assign(n * n, 0.0);

  std::vector<Mask> reach(n), back(n), und(n);
  const Mask configs = Mask{1} << n;
  for (Mask open = 0; open < configs; ++open) {
    double w = 1.0;
    for (std::size_t v = 0; v < n; ++v) w *= (open >> v & 1u) ? p[v] : 1.0 - p[v];
    if (w == 0.0) continue;

    closure(out_adj, open, n, reach);
    closure(und_adj, open, n, und);
    std::fill(back.begin(), back.end(), 0);
    for (std::size_t u = 0; u < n; ++u) {
      for (Mask m = reach[u]; m; m &= m - 1) back[std::countr_zero(m)] |= Mask{1} << u;
    }

    std::array<std::size_t, 4> largest{};
    for (std::size_t u = 0; u < n; ++u) {
      if (!(open >> u & 1u)) continue;
      const Mask strong = reach[u] & back[u];
      const std::array<Mask, 4> cluster{und[u], reach[u], back[u], strong};
      for (std::size_t m = 0; m < 4; ++m) {
        const auto size = static_cast<std::size_t>(std::popcount(cluster[m]));
        obs.chi[m][u] += w * static_cast<double>(size);
        largest[m] = std::max(largest[m], size);
      }
      for (Mask m = reach[u]; m; m &= m - 1) obs.tau_out[u * n + std::countr_zero(m)] += w;
      for (Mask m = strong; m; m &= m - 1) obs.tau_str[u * n + std::countr_zero(m)] += w;
      for (Mask m = und[u]; m; m &= m - 1) obs.tau_und[u * n + std::countr_zero(m)] += w;
    }
    for (std::size_t m = 0; m < 4; ++m) obs.largest_distribution[m][largest[m]] += w;
  }

  CycleSums cycles(d, p, cycle_budget);
  obs.chi_sac.assign(d.arc_count(), 0.0);
  obs.chi_sac_by_length.assign(d.arc_count(), std::vector<double>(n + 1, 0.0));
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    cycles.through(a, obs.chi_sac[a], obs.chi_sac_by_length[a]);
  }
  return obs;
}

double exact_chi_identity_defect(const ExactObservables& obs) {
  const std::size_t n = obs.n;
  double worst = 0.0;
  for (std::size_t u = 0; u < n; ++u) {
    for (ClusterMode mode : kAllModes) {
      double sum = 0.0;
      for (std::size_t v = 0; v < n; ++v) {
        sum += obs.tau(mode, static_cast<VertexId>(u), static_cast<VertexId>(v));
      }
      worst = std::max(worst, std::abs(obs.chi[static_cast<std::size_t>(mode)][u] - sum));
    }
  }
  return worst;
}

}  // namespace hetperc
