#include "hetperc/montecarlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <mutex>
#include <thread>

#include "hetperc/rng.hpp"

namespace hetperc {

namespace {

__extension__ using u128 = unsigned __int128;

// Exact integer moments: sums of integer samples are order independent,
// which is what makes results identical for any worker count.
struct Moments {
  std::uint64_t sum = 0;
  u128 sum_sq = 0;

  void add(std::uint64_t x) {
    sum += x;
    sum_sq += static_cast<u128>(x) * x;
  }
  void merge(const Moments& o) {
    sum += o.sum;
    sum_sq += o.sum_sq;
  }
  Estimate finish(std::size_t count) const {
    Estimate e;
    if (count == 0) return e;
    const auto n = static_cast<long double>(count);
    e.mean = static_cast<double>(static_cast<long double>(sum) / n);
    if (count > 1) {
      // N * sum_sq - sum^2 is computed exactly, then scaled once.
      const u128 s2 = static_cast<u128>(sum) * sum;
      const u128 nsq = sum_sq * static_cast<u128>(count);
      const long double numer = static_cast<long double>(nsq - s2);
      const long double var = numer / (n * (n - 1.0L));
      e.sd = static_cast<double>(std::sqrt(var));
      e.se = static_cast<double>(std::sqrt(var / n));
    }
    return e;
  }
};

std::size_t mode_index(ClusterMode m) { return static_cast<std::size_t>(m); }

// Runs fn(item, worker) for item in [0, count) on `workers` threads.
template <class Fn>
void parallel_for(std::size_t count, std::size_t workers, Fn&& fn) {
  workers = std::max<std::size_t>(1, std::min(workers, count));
  if (workers == 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i, 0);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < count; i = next++) fn(i, w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next = count;
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

OpenMask sample_open(const SiteProbabilities& p, std::uint64_t seed, std::uint64_t stream) {
  CounterRng rng(seed, stream);
  OpenMask open(p.size());
  for (std::size_t v = 0; v < p.size(); ++v) open[v] = rng.uniform() < p[v] ? 1 : 0;
  return open;
}

OpenMask sample_open(const Digraph& d, const SiteProbabilities& p, std::uint64_t seed,
                     std::uint64_t stream) {
  require_matching_size(d, p);
  return sample_open(p, seed, stream);
}

std::size_t default_workers() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

RealizationStats realization_stats(const Digraph& d, const SiteProbabilities& p,
                                   std::uint64_t seed, std::uint64_t stream,
                                   std::span<const VertexId> probes) {
  RealizationStats rs;
  rs.seed = seed;
  rs.stream = stream;
  const OpenMask open = sample_open(d, p, seed, stream);
  ClusterEngine engine(d);
  for (ClusterMode m : kAllModes) {
    const ClusterStats st = engine.compute(open, probes, m);
    rs.open_count = st.open_count;
    rs.probe_sizes[mode_index(m)] = st.probe_sizes;
    switch (m) {
      case ClusterMode::und: rs.largest_und = st.largest; break;
      case ClusterMode::out: rs.largest_out = st.largest; break;
      case ClusterMode::in: rs.largest_in = st.largest; break;
      case ClusterMode::str:
        rs.largest_str = st.largest;
        rs.second_largest_str = st.second_largest;
        break;
    }
  }
  return rs;
}

ObservableEstimates estimate_observables(const Digraph& d, const SiteProbabilities& p,
                                         const EstimateRequest& req) {
  require_matching_size(d, p);
  if (req.realizations < 1) throw std::invalid_argument("estimate_observables: realizations >= 1");
  const std::size_t n = d.vertex_count();
  for (VertexId v : req.probes) {
    if (v >= n) throw std::invalid_argument("estimate_observables: probe out of range");
  }
  for (const auto& [u, v] : req.pairs) {
    if (u >= n || v >= n) throw std::invalid_argument("estimate_observables: pair out of range");
  }
  for (ArcId a : req.arcs) {
    if (a >= d.arc_count()) throw std::invalid_argument("estimate_observables: arc out of range");
  }

  // Distinct pair endpoints whose forward reach is needed each realization.
  std::vector<VertexId> sources;
  for (const auto& [u, v] : req.pairs) {
    sources.push_back(u);
    sources.push_back(v);
  }
  std::sort(sources.begin(), sources.end());
  sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
  auto source_slot = [&](VertexId v) {
    return static_cast<std::size_t>(std::lower_bound(sources.begin(), sources.end(), v) -
                                    sources.begin());
  };

  struct Accum {
    std::array<std::vector<Moments>, 4> chi;
    std::vector<Moments> tau_out, tau_str, tau_und, sac_total;
    std::vector<std::vector<Moments>> sac_len;
  };
  const std::size_t workers =
      std::min(req.workers == 0 ? default_workers() : req.workers, req.realizations);
  std::vector<Accum> acc(std::max<std::size_t>(workers, 1));
  for (Accum& a : acc) {
    for (auto& c : a.chi) c.assign(req.probes.size(), {});
    a.tau_out.assign(req.pairs.size(), {});
    a.tau_str.assign(req.pairs.size(), {});
    a.tau_und.assign(req.pairs.size(), {});
    a.sac_total.assign(req.arcs.size(), {});
    a.sac_len.assign(req.arcs.size(), std::vector<Moments>(req.sac_length_cap + 1));
  }
  std::vector<ClusterEngine> engines;
  engines.reserve(acc.size());
  for (std::size_t w = 0; w < acc.size(); ++w) engines.emplace_back(d);

  parallel_for(req.realizations, acc.size(), [&](std::size_t r, std::size_t w) {
    Accum& a = acc[w];
    ClusterEngine& engine = engines[w];
    const OpenMask open = sample_open(p, req.seed, r);

    const ClusterStats str = engine.compute(open, req.probes, ClusterMode::str);
    // und goes last so its union-find roots stay valid for the pair loop.
    const ClusterStats und = engine.compute(open, req.probes, ClusterMode::und);
    for (std::size_t k = 0; k < req.probes.size(); ++k) {
      a.chi[mode_index(ClusterMode::und)][k].add(und.probe_sizes[k]);
      a.chi[mode_index(ClusterMode::str)][k].add(str.probe_sizes[k]);
      a.chi[mode_index(ClusterMode::out)][k].add(engine.reach(open, req.probes[k], true).size());
      a.chi[mode_index(ClusterMode::in)][k].add(engine.reach(open, req.probes[k], false).size());
    }

    if (!req.pairs.empty()) {
      std::vector<VertexId> und_root(sources.size());
      for (std::size_t s = 0; s < sources.size(); ++s) und_root[s] = engine.und_root(sources[s]);
      // Roots are read before reach() runs; reach does not touch union-find state.
      std::vector<std::uint8_t> reached(sources.size() * n, 0);
      for (std::size_t s = 0; s < sources.size(); ++s) {
        for (VertexId x : engine.reach(open, sources[s], true)) reached[s * n + x] = 1;
      }
      for (std::size_t k = 0; k < req.pairs.size(); ++k) {
        const auto [u, v] = req.pairs[k];
        const std::size_t su = source_slot(u);
        const std::size_t sv = source_slot(v);
        const bool uv = reached[su * n + v] != 0;
        const bool vu = reached[sv * n + u] != 0;
        a.tau_out[k].add(uv ? 1 : 0);
        a.tau_str[k].add(uv && vu ? 1 : 0);
        a.tau_und[k].add(open[u] && open[v] && und_root[su] == und_root[sv] ? 1 : 0);
      }
    }

    for (std::size_t k = 0; k < req.arcs.size(); ++k) {
      const SacCount c = count_sacs(d, open, req.arcs[k], req.sac_length_cap, req.sac_budget);
      a.sac_total[k].add(c.total);
      for (std::size_t s = 0; s <= req.sac_length_cap; ++s) a.sac_len[k][s].add(c.by_length[s]);
    }
  });

  for (std::size_t w = 1; w < acc.size(); ++w) {
    for (std::size_t m = 0; m < 4; ++m) {
      for (std::size_t k = 0; k < req.probes.size(); ++k) acc[0].chi[m][k].merge(acc[w].chi[m][k]);
    }
    for (std::size_t k = 0; k < req.pairs.size(); ++k) {
      acc[0].tau_out[k].merge(acc[w].tau_out[k]);
      acc[0].tau_str[k].merge(acc[w].tau_str[k]);
      acc[0].tau_und[k].merge(acc[w].tau_und[k]);
    }
    for (std::size_t k = 0; k < req.arcs.size(); ++k) {
      acc[0].sac_total[k].merge(acc[w].sac_total[k]);
      for (std::size_t s = 0; s <= req.sac_length_cap; ++s) {
        acc[0].sac_len[k][s].merge(acc[w].sac_len[k][s]);
      }
    }
  }

  ObservableEstimates out;
  const std::size_t N = req.realizations;
  out.realizations = N;
  const Accum& a = acc[0];
  for (std::size_t m = 0; m < 4; ++m) {
    for (const Moments& x : a.chi[m]) out.chi[m].push_back(x.finish(N));
  }
  for (std::size_t k = 0; k < req.pairs.size(); ++k) {
    out.tau_out.push_back(a.tau_out[k].finish(N));
    out.tau_str.push_back(a.tau_str[k].finish(N));
    out.tau_und.push_back(a.tau_und[k].finish(N));
  }
  for (std::size_t k = 0; k < req.arcs.size(); ++k) {
    out.sac_total.push_back(a.sac_total[k].finish(N));
    std::vector<Estimate> by_len;
    for (const Moments& x : a.sac_len[k]) by_len.push_back(x.finish(N));
    out.sac_by_length.push_back(std::move(by_len));
  }
  return out;
}

SiteProbabilities sweep_probabilities(const SweepSpec& spec, std::size_t n, double grid_value) {
  if (spec.profile) {
    if (spec.profile->size() != n) throw GraphError("sweep profile size does not match the digraph");
    if (!(grid_value >= 0.0)) throw std::invalid_argument("sweep scale factor must be >= 0");
    return spec.profile->scaled(grid_value);
  }
  if (!(grid_value >= 0.0 && grid_value <= 1.0)) {
    throw std::invalid_argument("sweep probability outside [0, 1]");
  }
  return SiteProbabilities::homogeneous(n, grid_value);
}

SweepResult sweep(const Digraph& d, const SweepSpec& spec) {
  if (spec.grid.empty()) throw std::invalid_argument("sweep: empty probability grid");
  if (spec.realizations < 2) throw std::invalid_argument("sweep: at least 2 realizations required");
  if (spec.modes.empty()) throw std::invalid_argument("sweep: no cluster modes requested");
  const std::size_t n = d.vertex_count();
  std::vector<SiteProbabilities> probs;
  probs.reserve(spec.grid.size());
  for (double g : spec.grid) probs.push_back(sweep_probabilities(spec, n, g));

  struct Item {
    std::array<std::uint32_t, 4> largest{};
    std::uint32_t second_str = 0;
  };
  const std::size_t R = spec.realizations;
  const std::size_t total = spec.grid.size() * R;
  std::vector<Item> items(total);
  const std::size_t workers = std::min(spec.workers == 0 ? default_workers() : spec.workers, total);
  std::vector<ClusterEngine> engines;
  engines.reserve(std::max<std::size_t>(workers, 1));
  for (std::size_t w = 0; w < std::max<std::size_t>(workers, 1); ++w) engines.emplace_back(d);

  parallel_for(total, engines.size(), [&](std::size_t item, std::size_t w) {
    const std::size_t g = item / R;
    const std::size_t r = item % R;
    const OpenMask open = sample_open(probs[g], spec.seed, sweep_stream(g, r));
    Item& out = items[item];
    for (ClusterMode m : spec.modes) {
      const ClusterStats st = engines[w].compute(open, {}, m);
      out.largest[mode_index(m)] = static_cast<std::uint32_t>(st.largest);
      if (m == ClusterMode::str) out.second_str = static_cast<std::uint32_t>(st.second_largest);
    }
  });

  SweepResult result;
  result.modes = spec.modes;
  result.realizations = R;
  result.seed = spec.seed;
  result.rng_scheme = CounterRng::kScheme;
  result.heterogeneous_profile = spec.profile.has_value();
  for (std::size_t g = 0; g < spec.grid.size(); ++g) {
    SweepPoint pt;
    pt.p = spec.grid[g];
    std::array<Moments, 4> mom;
    for (std::size_t r = 0; r < R; ++r) {
      const Item& it = items[g * R + r];
      for (ClusterMode m : spec.modes) mom[mode_index(m)].add(it.largest[mode_index(m)]);
      pt.max_second_largest_str = std::max<std::size_t>(pt.max_second_largest_str, it.second_str);
    }
    for (ClusterMode m : spec.modes) pt.largest[mode_index(m)] = mom[mode_index(m)].finish(R);
    result.points.push_back(pt);
  }
  return result;
}

}  // namespace hetperc
