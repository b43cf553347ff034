#include "hetperc/digraph.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <functional>
#include <unordered_map>

#include "hetperc/scc.hpp"

namespace hetperc {

namespace {

std::uint64_t arc_key(VertexId tail, VertexId head) {
  return (static_cast<std::uint64_t>(tail) << 32) | head;
}

std::string describe(const Arc& a) {
  return std::to_string(a.tail) + "->" + std::to_string(a.head);
}

}  // namespace

Digraph Digraph::from_arcs(std::size_t vertex_count, std::span<const Arc> arcs) {
  if (vertex_count == 0) throw GraphError("digraph needs at least one vertex");
  if (vertex_count > std::numeric_limits<VertexId>::max()) {
    throw GraphError("vertex count exceeds 32-bit index range");
  }

  Digraph g;
  g.vertex_count_ = vertex_count;
  g.arcs_.assign(arcs.begin(), arcs.end());
  g.inverse_.assign(arcs.size(), kNoArc);

  std::unordered_map<std::uint64_t, ArcId> index;
  index.reserve(arcs.size() * 2);
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const Arc& a = arcs[i];
    if (a.tail >= vertex_count || a.head >= vertex_count) {
      throw GraphError("arc " + std::to_string(i) + " (" + describe(a) +
                       ") has an endpoint outside [0, " + std::to_string(vertex_count) + ")");
    }
    if (a.tail == a.head) {
      throw GraphError("arc " + std::to_string(i) + " (" + describe(a) + ") is a self-loop");
    }
    const auto [it, inserted] = index.emplace(arc_key(a.tail, a.head), static_cast<ArcId>(i));
    if (!inserted) {
      throw GraphError("arc " + std::to_string(i) + " (" + describe(a) +
                       ") duplicates arc " + std::to_string(it->second));
    }
  }
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto it = index.find(arc_key(arcs[i].head, arcs[i].tail));
    if (it != index.end()) {
      g.inverse_[i] = it->second;
      if (i < it->second) ++g.symmetric_bonds_;
    }
  }
  g.build_adjacency();
  return g;
}

Digraph Digraph::from_edge_list(std::size_t vertex_count, std::span<const EdgeSpec> edges) {
  std::vector<Arc> arcs;
  arcs.reserve(edges.size() * 2);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const EdgeSpec& e = edges[i];
    if (e.tail >= vertex_count || e.head >= vertex_count) {
      throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(e.tail) + "," +
                       std::to_string(e.head) + ") has an endpoint outside [0, " +
                       std::to_string(vertex_count) + ")");
    }
    if (e.tail == e.head) {
      throw GraphError("edge " + std::to_string(i) + " (" + std::to_string(e.tail) + "," +
                       std::to_string(e.head) + ") is a self-loop");
    }
    arcs.push_back({e.tail, e.head});
    if (e.kind == EdgeKind::undirected) arcs.push_back({e.head, e.tail});
  }
  return from_arcs(vertex_count, arcs);
}

Digraph Digraph::undirected(std::size_t vertex_count,
                            std::span<const std::pair<VertexId, VertexId>> edges) {
  std::vector<EdgeSpec> specs;
  specs.reserve(edges.size());
  for (const auto& [u, v] : edges) specs.push_back({u, v, EdgeKind::undirected});
  return from_edge_list(vertex_count, specs);
}

void Digraph::build_adjacency() {
  const std::size_t n = vertex_count_;
  out_offsets_.assign(n + 1, 0);
  in_offsets_.assign(n + 1, 0);
  for (const Arc& a : arcs_) {
    ++out_offsets_[a.tail + 1];
    ++in_offsets_[a.head + 1];
  }
  for (std::size_t v = 0; v < n; ++v) {
    out_offsets_[v + 1] += out_offsets_[v];
    in_offsets_[v + 1] += in_offsets_[v];
  }
  out_arc_ids_.resize(arcs_.size());
  out_targets_.resize(arcs_.size());
  in_arc_ids_.resize(arcs_.size());
  in_sources_.resize(arcs_.size());
  std::vector<std::size_t> out_fill(out_offsets_.begin(), out_offsets_.end() - 1);
  std::vector<std::size_t> in_fill(in_offsets_.begin(), in_offsets_.end() - 1);
  for (std::size_t i = 0; i < arcs_.size(); ++i) {
    const Arc& a = arcs_[i];
    const std::size_t o = out_fill[a.tail]++;
    out_arc_ids_[o] = static_cast<ArcId>(i);
    out_targets_[o] = a.head;
    const std::size_t k = in_fill[a.head]++;
    in_arc_ids_[k] = static_cast<ArcId>(i);
    in_sources_[k] = a.tail;
  }
}

std::optional<ArcId> Digraph::find_arc(VertexId tail, VertexId head) const {
  if (tail >= vertex_count_) return std::nullopt;
  for (ArcId a : out_arcs(tail)) {
    if (arcs_[a].head == head) return a;
  }
  return std::nullopt;
}

std::size_t Digraph::max_out_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) best = std::max(best, out_degree(v));
  return best;
}

std::size_t Digraph::max_in_degree() const {
  std::size_t best = 0;
  for (VertexId v = 0; v < vertex_count_; ++v) best = std::max(best, in_degree(v));
  return best;
}

SiteProbabilities::SiteProbabilities(std::vector<double> values) : values_(std::move(values)) {
  for (std::size_t v = 0; v < values_.size(); ++v) {
    const double p = values_[v];
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("site probability at vertex " + std::to_string(v) +
                                  " is outside [0, 1]");
    }
    if (p == 0.0 || p == 1.0) strictly_interior_ = false;
  }
}

SiteProbabilities SiteProbabilities::homogeneous(std::size_t n, double p) {
  return SiteProbabilities(std::vector<double>(n, p));
}

bool SiteProbabilities::is_homogeneous() const noexcept {
  return std::adjacent_find(values_.begin(), values_.end(), std::not_equal_to<>()) ==
         values_.end();
}

double SiteProbabilities::min() const {
  if (values_.empty()) throw std::logic_error("empty probability vector");
  return *std::min_element(values_.begin(), values_.end());
}

double SiteProbabilities::max() const {
  if (values_.empty()) throw std::logic_error("empty probability vector");
  return *std::max_element(values_.begin(), values_.end());
}

SiteProbabilities SiteProbabilities::scaled(double factor) const {
  std::vector<double> out(values_);
  for (double& p : out) p = std::min(1.0, p * factor);
  return SiteProbabilities(std::move(out));
}

void require_matching_size(const Digraph& d, const SiteProbabilities& p) {
  if (d.vertex_count() != p.size()) {
    throw GraphError("probability vector has " + std::to_string(p.size()) +
                     " entries for a digraph with " + std::to_string(d.vertex_count()) +
                     " vertices");
  }
}

std::vector<std::size_t> distances_from(const Digraph& d, VertexId source) {
  std::vector<std::size_t> dist(d.vertex_count(), kUnreachable);
  std::deque<VertexId> queue;
  dist[source] = 0;
  queue.push_back(source);
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    for (VertexId w : d.out_neighbors(v)) {
      if (dist[w] == kUnreachable) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> directed_distance(const Digraph& d, VertexId u, VertexId v) {
  if (u >= d.vertex_count() || v >= d.vertex_count()) {
    throw GraphError("vertex index out of range");
  }
  if (u == v) return 0;
  const auto dist = distances_from(d, u);
  if (dist[v] == kUnreachable) return std::nullopt;
  return dist[v];
}

bool is_strongly_connected(const Digraph& d) {
  if (d.vertex_count() == 0) return false;
  const auto scc = tarjan_scc<VertexId>(d.out_offsets(), d.out_targets());
  return scc.count() == 1;
}

}  // namespace hetperc
