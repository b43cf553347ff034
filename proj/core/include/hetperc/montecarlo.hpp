#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hetperc/clusters.hpp"
#include "hetperc/digraph.hpp"
#include "hetperc/sac.hpp"

namespace hetperc {

/// Vertex v is open iff the v-th uniform draw of stream (seed, stream) is
/// below p_v. Draws are consumed in vertex order.
OpenMask sample_open(const SiteProbabilities& p, std::uint64_t seed, std::uint64_t stream);
OpenMask sample_open(const Digraph& d, const SiteProbabilities& p, std::uint64_t seed,
                     std::uint64_t stream = 0);

/// Worker count used when a caller passes 0.
std::size_t default_workers();

struct Estimate {
  double mean = 0.0;
  double se = 0.0;  ///< sample standard deviation / sqrt(realizations)
  double sd = 0.0;
};

struct RealizationStats {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;
  std::size_t open_count = 0;
  std::size_t largest_und = 0;
  std::size_t largest_out = 0;
  std::size_t largest_in = 0;
  std::size_t largest_str = 0;
  std::size_t second_largest_str = 0;
  /// probe_sizes[mode][k] for the probe list, modes in kAllModes order.
  std::array<std::vector<std::size_t>, 4> probe_sizes;
  /// sac[k] = per-length counts through the k-th designated arc.
  std::vector<std::vector<std::uint64_t>> sac;
};

struct EstimateRequest {
  std::vector<VertexId> probes;
  std::vector<std::pair<VertexId, VertexId>> pairs;
  std::vector<ArcId> arcs;
  std::size_t sac_length_cap = 8;
  std::uint64_t sac_budget = kDefaultSacBudget;
  std::size_t realizations = 1000;
  std::uint64_t seed = 1;
  std::size_t workers = 0;
};

struct ObservableEstimates {
  std::size_t realizations = 0;
  /// chi[mode][k], modes in kAllModes order.
  std::array<std::vector<Estimate>, 4> chi;
  std::vector<Estimate> tau_out;  ///< P(v reachable from u)
  std::vector<Estimate> tau_str;  ///< P(u and v mutually reachable)
  std::vector<Estimate> tau_und;  ///< P(u and v weakly connected)
  std::vector<Estimate> sac_total;
  /// sac_by_length[k][s], s = 0..sac_length_cap
  std::vector<std::vector<Estimate>> sac_by_length;
};

/// Monte Carlo means and standard errors of susceptibilities, connectivities
/// and SAC counts. Realization r uses stream r; accumulation is in exact
/// integer arithmetic, so results do not depend on the worker count.
ObservableEstimates estimate_observables(const Digraph& d, const SiteProbabilities& p,
                                         const EstimateRequest& request);

struct SweepSpec {
  /// Homogeneous probabilities, or scale factors when `profile` is set.
  std::vector<double> grid;
  std::optional<SiteProbabilities> profile;
  std::size_t realizations = 120;
  std::uint64_t seed = 1;
  std::vector<ClusterMode> modes{ClusterMode::out};
  std::size_t workers = 0;
};

struct SweepPoint {
  double p = 0.0;  ///< grid value
  /// largest[mode] in kAllModes order; only requested modes are filled.
  std::array<Estimate, 4> largest;
  /// Largest second-largest strongly connected cluster seen (str mode).
  std::size_t max_second_largest_str = 0;
};

struct SweepResult {
  std::vector<SweepPoint> points;
  std::vector<ClusterMode> modes;
  std::size_t realizations = 0;
  std::uint64_t seed = 0;
  std::string rng_scheme;
  bool heterogeneous_profile = false;
};

/// Probabilities used at a grid value: homogeneous, or the profile scaled
/// and clipped to 1.
SiteProbabilities sweep_probabilities(const SweepSpec& spec, std::size_t n, double grid_value);

/// Stream id of realization r at grid index g.
inline std::uint64_t sweep_stream(std::size_t g, std::size_t r) {
  return (static_cast<std::uint64_t>(g) << 32) | static_cast<std::uint64_t>(r);
}

/// Independent resampling at every grid point. Realizations run on a worker
/// pool; per-realization integers are reduced in a fixed order.
SweepResult sweep(const Digraph& d, const SweepSpec& spec);

/// Statistics of a single realization (exposed for tests and diagnostics).
RealizationStats realization_stats(const Digraph& d, const SiteProbabilities& p,
                                   std::uint64_t seed, std::uint64_t stream,
                                   std::span<const VertexId> probes = {});

}  // namespace hetperc
