#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hetperc/digraph.hpp"

namespace hetperc {

/// Open vertices of one configuration: mask[v] != 0 means v is open.
using OpenMask = std::vector<std::uint8_t>;

/// und: weakly connected; out/in: reachable along/against arcs;
/// str: mutually reachable.
enum class ClusterMode { und, out, in, str };

const char* to_string(ClusterMode m);
ClusterMode cluster_mode_from_string(const std::string& name);
inline constexpr ClusterMode kAllModes[] = {ClusterMode::und, ClusterMode::out, ClusterMode::in,
                                            ClusterMode::str};

struct ClusterStats {
  std::size_t open_count = 0;
  std::size_t largest = 0;
  /// Second largest cluster for the partition modes (und, str); 0 for out/in.
  std::size_t second_largest = 0;
  /// Cluster size of each probe; 0 for closed probes.
  std::vector<std::size_t> probe_sizes;
};

/*
  Reusable workspace for cluster statistics on one digraph.

  Largest out-cluster: the open subgraph is condensed by Tarjan's algorithm
  (component ids come out sinks first) and every component receives a
  contiguous range of bits. One pass in id order ORs each component's
  successor rows into its own, so a row is exactly the reachable vertex
  set and its popcount the out-cluster size. When the rows would exceed
  `bitset_budget_bytes`, the engine instead runs an exact breadth-first
  search from every condensation root. Both paths are exact. In-clusters
  use the reversed arcs.
*/
class ClusterEngine {
 public:
  explicit ClusterEngine(const Digraph& d, std::size_t bitset_budget_bytes = 256u << 20);

  ClusterStats compute(const OpenMask& open, std::span<const VertexId> probes, ClusterMode mode);

  /// Vertices reachable from `source` (inclusive) along arcs (forward) or
  /// against them; empty when the source is closed.
  const std::vector<VertexId>& reach(const OpenMask& open, VertexId source, bool forward);

  /// Union-find roots after the last und computation.
  VertexId und_root(VertexId v);

 private:
  ClusterStats directed(const OpenMask& open, std::span<const VertexId> probes, bool forward);
  ClusterStats strong(const OpenMask& open, std::span<const VertexId> probes);
  ClusterStats undirected(const OpenMask& open, std::span<const VertexId> probes);

  const Digraph* d_;
  std::size_t budget_;
  std::vector<VertexId> parent_;
  std::vector<std::uint32_t> size_;
  std::vector<std::uint32_t> mark_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> reach_;
  std::vector<std::uint64_t> bits_;
};

ClusterStats cluster_stats(const Digraph& d, const OpenMask& open, std::span<const VertexId> probes,
                           ClusterMode mode);

}  // namespace hetperc
