#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hetperc {

using VertexId = std::uint32_t;
using ArcId = std::uint32_t;

inline constexpr ArcId kNoArc = std::numeric_limits<ArcId>::max();

/// Raised for structurally invalid graph input (self-loops, duplicates,
/// out-of-range endpoints, mismatched dimensions).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct Arc {
  VertexId tail;
  VertexId head;

  friend bool operator==(const Arc&, const Arc&) = default;
};

enum class EdgeKind : std::uint8_t { directed, undirected };

struct EdgeSpec {
  VertexId tail;
  VertexId head;
  EdgeKind kind;
};

/*
  Immutable simple digraph with arc bookkeeping.

  Arcs are stored in input order; an undirected edge expands to the pair
  (u->v, v->u) at consecutive positions. Any two arcs u->v and v->u are
  paired as mutual inverses (a symmetric bond) regardless of how they
  were entered. Out- and in-adjacency are kept in CSR form, both as arc
  ids and as neighbour vertex ids.
*/
class Digraph {
 public:
  Digraph() = default;

  static Digraph from_edge_list(std::size_t vertex_count, std::span<const EdgeSpec> edges);
  static Digraph from_arcs(std::size_t vertex_count, std::span<const Arc> arcs);
  static Digraph undirected(std::size_t vertex_count,
                            std::span<const std::pair<VertexId, VertexId>> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t arc_count() const noexcept { return arcs_.size(); }

  const Arc& arc(ArcId a) const { return arcs_[a]; }
  std::span<const Arc> arcs() const noexcept { return arcs_; }

  /// kNoArc when the reversed arc is absent.
  ArcId inverse(ArcId a) const { return inverse_[a]; }
  bool has_inverse(ArcId a) const { return inverse_[a] != kNoArc; }

  std::span<const ArcId> out_arcs(VertexId v) const {
    return {out_arc_ids_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const ArcId> in_arcs(VertexId v) const {
    return {in_arc_ids_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }
  std::span<const VertexId> out_neighbors(VertexId v) const {
    return {out_targets_.data() + out_offsets_[v], out_offsets_[v + 1] - out_offsets_[v]};
  }
  std::span<const VertexId> in_neighbors(VertexId v) const {
    return {in_sources_.data() + in_offsets_[v], in_offsets_[v + 1] - in_offsets_[v]};
  }

  std::size_t out_degree(VertexId v) const { return out_offsets_[v + 1] - out_offsets_[v]; }
  std::size_t in_degree(VertexId v) const { return in_offsets_[v + 1] - in_offsets_[v]; }

  // Raw CSR views, used by the SCC and cluster kernels.
  std::span<const std::size_t> out_offsets() const noexcept { return out_offsets_; }
  std::span<const VertexId> out_targets() const noexcept { return out_targets_; }
  std::span<const std::size_t> in_offsets() const noexcept { return in_offsets_; }
  std::span<const VertexId> in_sources() const noexcept { return in_sources_; }

  std::optional<ArcId> find_arc(VertexId tail, VertexId head) const;

  std::size_t symmetric_bond_count() const noexcept { return symmetric_bonds_; }
  bool has_symmetric_bonds() const noexcept { return symmetric_bonds_ > 0; }
  /// Every arc has an inverse: the digraph represents an undirected graph.
  bool is_symmetric() const noexcept { return 2 * symmetric_bonds_ == arcs_.size(); }

  std::size_t max_out_degree() const;
  std::size_t max_in_degree() const;

 private:
  void build_adjacency();

  std::size_t vertex_count_ = 0;
  std::vector<Arc> arcs_;
  std::vector<ArcId> inverse_;
  std::size_t symmetric_bonds_ = 0;

  std::vector<std::size_t> out_offsets_{0};
  std::vector<ArcId> out_arc_ids_;
  std::vector<VertexId> out_targets_;
  std::vector<std::size_t> in_offsets_{0};
  std::vector<ArcId> in_arc_ids_;
  std::vector<VertexId> in_sources_;
};

/// Per-vertex open probabilities, each in [0, 1].
class SiteProbabilities {
 public:
  SiteProbabilities() = default;
  explicit SiteProbabilities(std::vector<double> values);

  static SiteProbabilities homogeneous(std::size_t n, double p);

  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t v) const { return values_[v]; }
  std::span<const double> values() const noexcept { return values_; }

  /// All entries lie in the open interval (0, 1).
  bool strictly_interior() const noexcept { return strictly_interior_; }
  bool is_homogeneous() const noexcept;
  double min() const;
  double max() const;

  SiteProbabilities scaled(double factor) const;

 private:
  std::vector<double> values_;
  bool strictly_interior_ = true;
};

void require_matching_size(const Digraph& d, const SiteProbabilities& p);

/// BFS distance along arcs; nullopt when v is unreachable from u.
std::optional<std::size_t> directed_distance(const Digraph& d, VertexId u, VertexId v);

/// Distances from `source` to every vertex; kUnreachable where no path exists.
inline constexpr std::size_t kUnreachable = std::numeric_limits<std::size_t>::max();
std::vector<std::size_t> distances_from(const Digraph& d, VertexId source);

bool is_strongly_connected(const Digraph& d);

}  // namespace hetperc
