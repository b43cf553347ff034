#include "hetperc/clusters.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

#include "hetperc/scc.hpp"

namespace hetperc {

const char* to_string(ClusterMode m) {
  switch (m) {
    case ClusterMode::und: return "und";
    case ClusterMode::out: return "out";
    case ClusterMode::in: return "in";
    case ClusterMode::str: return "str";
  }
  return "und";
}

ClusterMode cluster_mode_from_string(const std::string& name) {
  for (ClusterMode m : kAllModes) {
    if (name == to_string(m)) return m;
  }
  throw std::invalid_argument("unknown cluster mode '" + name + "' (expected und|out|in|str)");
}

ClusterEngine::ClusterEngine(const Digraph& d, std::size_t bitset_budget_bytes)
    : d_(&d), budget_(bitset_budget_bytes), parent_(d.vertex_count()), size_(d.vertex_count()),
      mark_(d.vertex_count(), 0) {}

ClusterStats ClusterEngine::compute(const OpenMask& open, std::span<const VertexId> probes,
                                    ClusterMode mode) {
  if (open.size() != d_->vertex_count()) {
    throw std::invalid_argument("open mask size does not match the digraph");
  }
  switch (mode) {
    case ClusterMode::und: return undirected(open, probes);
    case ClusterMode::out: return directed(open, probes, true);
    case ClusterMode::in: return directed(open, probes, false);
    case ClusterMode::str: return strong(open, probes);
  }
  return {};
}

const std::vector<VertexId>& ClusterEngine::reach(const OpenMask& open, VertexId source,
                                                  bool forward) {
  reach_.clear();
  if (!open[source]) return reach_;
  if (++epoch_ == 0) {
    std::fill(mark_.begin(), mark_.end(), 0);
    epoch_ = 1;
  }
  mark_[source] = epoch_;
  reach_.push_back(source);
  for (std::size_t head = 0; head < reach_.size(); ++head) {
    const VertexId v = reach_[head];
    const auto next = forward ? d_->out_neighbors(v) : d_->in_neighbors(v);
    for (VertexId w : next) {
      if (open[w] && mark_[w] != epoch_) {
        mark_[w] = epoch_;
        reach_.push_back(w);
      }
    }
  }
  return reach_;
}

ClusterStats ClusterEngine::directed(const OpenMask& open, std::span<const VertexId> probes,
                                     bool forward) {
  const std::size_t n = d_->vertex_count();
  const auto offsets = forward ? d_->out_offsets() : d_->in_offsets();
  const auto targets = forward ? d_->out_targets() : d_->in_sources();
  auto active = [&](std::size_t v) { return open[v] != 0; };
  const SccResult scc = tarjan_scc<VertexId>(offsets, targets, active);

  ClusterStats st;
  st.open_count = static_cast<std::size_t>(std::count_if(open.begin(), open.end(),
                                                         [](std::uint8_t o) { return o != 0; }));
  st.probe_sizes.assign(probes.size(), 0);
  const std::size_t comps = scc.count();
  if (comps == 0) return st;

  // Bit ranges: component c owns [first[c], first[c] + sizes[c]).
  std::vector<std::size_t> first(comps + 1, 0);
  for (std::size_t c = 0; c < comps; ++c) first[c + 1] = first[c] + scc.sizes[c];
  const std::size_t words = (st.open_count + 63) / 64;

  // Condensation successor lists, grouped by component.
  std::vector<std::size_t> succ_offsets(comps + 1, 0);
  std::vector<std::uint32_t> succ;
  std::vector<VertexId> order(n);
  std::vector<std::size_t> member_offsets(comps + 1, 0);
  for (std::size_t v = 0; v < n; ++v) {
    if (open[v]) ++member_offsets[scc.component[v] + 1];
  }
  for (std::size_t c = 0; c < comps; ++c) member_offsets[c + 1] += member_offsets[c];
  {
    std::vector<std::size_t> fill(member_offsets.begin(), member_offsets.end() - 1);
    for (std::size_t v = 0; v < n; ++v) {
      if (open[v]) order[fill[scc.component[v]]++] = static_cast<VertexId>(v);
    }
  }
  std::vector<bool> has_pred(comps, false);
  for (std::size_t c = 0; c < comps; ++c) {
    for (std::size_t k = member_offsets[c]; k < member_offsets[c + 1]; ++k) {
      const VertexId v = order[k];
      for (std::size_t e = offsets[v]; e < offsets[v + 1]; ++e) {
        const VertexId w = targets[e];
        if (!open[w]) continue;
        const std::uint32_t cw = scc.component[w];
        if (cw != c) {
          succ.push_back(cw);
          has_pred[cw] = true;
        }
      }
    }
    succ_offsets[c + 1] = succ.size();
  }

  const double bytes = static_cast<double>(comps) * static_cast<double>(words) * 8.0;
  if (bytes <= static_cast<double>(budget_)) {
    bits_.assign(comps * words, 0);
    std::vector<std::size_t> reach_size(comps, 0);
    for (std::size_t c = 0; c < comps; ++c) {
      std::uint64_t* row = bits_.data() + c * words;
      for (std::size_t b = first[c]; b < first[c + 1]; ++b) row[b >> 6] |= std::uint64_t{1} << (b & 63);
      for (std::size_t k = succ_offsets[c]; k < succ_offsets[c + 1]; ++k) {
        const std::uint64_t* other = bits_.data() + static_cast<std::size_t>(succ[k]) * words;
        for (std::size_t w = 0; w < words; ++w) row[w] |= other[w];
      }
      std::size_t count = 0;
      for (std::size_t w = 0; w < words; ++w) count += static_cast<std::size_t>(std::popcount(row[w]));
      reach_size[c] = count;
      st.largest = std::max(st.largest, count);
    }
    for (std::size_t k = 0; k < probes.size(); ++k) {
      if (open[probes[k]]) st.probe_sizes[k] = reach_size[scc.component[probes[k]]];
    }
    return st;
  }

  // Exact fallback: a largest reachable set always starts at a root of the
  // condensation, so search from one vertex of each root component.
  for (std::size_t c = 0; c < comps; ++c) {
    if (has_pred[c]) continue;
    st.largest = std::max(st.largest, reach(open, order[member_offsets[c]], forward).size());
  }
  for (std::size_t k = 0; k < probes.size(); ++k) {
    st.probe_sizes[k] = reach(open, probes[k], forward).size();
  }
  return st;
}

ClusterStats ClusterEngine::strong(const OpenMask& open, std::span<const VertexId> probes) {
  auto active = [&](std::size_t v) { return open[v] != 0; };
  const SccResult scc = tarjan_scc<VertexId>(d_->out_offsets(), d_->out_targets(), active);
  ClusterStats st;
  st.open_count = static_cast<std::size_t>(std::count_if(open.begin(), open.end(),
                                                         [](std::uint8_t o) { return o != 0; }));
  for (std::uint32_t s : scc.sizes) {
    if (s > st.largest) {
      st.second_largest = st.largest;
      st.largest = s;
    } else if (s > st.second_largest) {
      st.second_largest = s;
    }
  }
  st.probe_sizes.assign(probes.size(), 0);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    if (open[probes[k]]) st.probe_sizes[k] = scc.sizes[scc.component[probes[k]]];
  }
  return st;
}

VertexId ClusterEngine::und_root(VertexId v) {
  while (parent_[v] != v) {
    parent_[v] = parent_[parent_[v]];
    v = parent_[v];
  }
  return v;
}

ClusterStats ClusterEngine::undirected(const OpenMask& open, std::span<const VertexId> probes) {
  const std::size_t n = d_->vertex_count();
  std::iota(parent_.begin(), parent_.end(), 0u);
  std::fill(size_.begin(), size_.end(), 1u);
  for (const Arc& a : d_->arcs()) {
    if (!open[a.tail] || !open[a.head]) continue;
    VertexId x = und_root(a.tail);
    VertexId y = und_root(a.head);
    if (x == y) continue;
    if (size_[x] < size_[y]) std::swap(x, y);
    parent_[y] = x;
    size_[x] += size_[y];
  }
  ClusterStats st;
  for (VertexId v = 0; v < n; ++v) {
    if (!open[v]) continue;
    ++st.open_count;
    if (parent_[v] != v) continue;
    const std::size_t s = size_[v];
    if (s > st.largest) {
      st.second_largest = st.largest;
      st.largest = s;
    } else if (s > st.second_largest) {
      st.second_largest = s;
    }
  }
  st.probe_sizes.assign(probes.size(), 0);
  for (std::size_t k = 0; k < probes.size(); ++k) {
    if (open[probes[k]]) st.probe_sizes[k] = size_[und_root(probes[k])];
  }
  return st;
}

ClusterStats cluster_stats(const Digraph& d, const OpenMask& open, std::span<const VertexId> probes,
                           ClusterMode mode) {
  ClusterEngine engine(d);
  return engine.compute(open, probes, mode);
}

}  // namespace hetperc
