#include "hetperc/generators.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <unordered_set>

#include "hetperc/rng.hpp"

namespace hetperc {

namespace {

// Distinct stream ids keep families with the same seed uncorrelated.
constexpr std::uint64_t kStreamTwoRegion = 0x7452;
constexpr std::uint64_t kStreamTreeB = 0x5442;
constexpr std::uint64_t kStreamTreeC = 0x5443;
constexpr std::uint64_t kStreamRegular = 0x5252;

constexpr int kMaxAttempts = 100000;

using Edge = std::pair<VertexId, VertexId>;

std::uint64_t edge_key(VertexId u, VertexId v) {
  if (u > v) std::swap(u, v);
  return (static_cast<std::uint64_t>(u) << 32) | v;
}

struct TreeShape {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;          // (parent, child)
  std::vector<VertexId> parent;     // parent[0] = 0 for the root
  std::vector<VertexId> leaves;
};

// Breadth-first tree: the root has `root_children` children, every other
// non-leaf vertex `children`.
TreeShape build_tree(std::uint32_t root_children, std::uint32_t children, std::uint32_t depth) {
  TreeShape t;
  t.parent.push_back(0);
  std::vector<VertexId> level{0};
  for (std::uint32_t k = 0; k < depth; ++k) {
    std::vector<VertexId> next;
    for (VertexId v : level) {
      const std::uint32_t count = (k == 0) ? root_children : children;
      for (std::uint32_t c = 0; c < count; ++c) {
        const auto child = static_cast<VertexId>(t.parent.size());
        t.parent.push_back(v);
        t.edges.emplace_back(v, child);
        next.push_back(child);
      }
    }
    if (next.empty()) break;
    level = std::move(next);
  }
  t.vertex_count = t.parent.size();
  t.leaves = depth == 0 ? std::vector<VertexId>{} : level;
  return t;
}

}  // namespace

const char* to_string(Family f) {
  switch (f) {
    case Family::two_region: return "two-region";
    case Family::rooted_tree: return "rooted-tree";
    case Family::tree_closed: return "tree-closed";
    case Family::torus: return "torus";
    case Family::cycle: return "cycle";
    case Family::oriented_cycle: return "oriented-cycle";
    case Family::complete: return "complete";
    case Family::random_regular: return "random-regular";
  }
  return "unknown";
}

Family family_from_string(const std::string& name) {
  for (Family f : {Family::two_region, Family::rooted_tree, Family::tree_closed, Family::torus,
                   Family::cycle, Family::oriented_cycle, Family::complete,
                   Family::random_regular}) {
    if (name == to_string(f)) return f;
  }
  throw std::invalid_argument("unknown generator family '" + name + "'");
}

Digraph generate(const GeneratorSpec& s) {
  switch (s.family) {
    case Family::two_region: return two_region(s.L, s.d1, s.d2, s.seed);
    case Family::rooted_tree: return rooted_tree(s.D, s.r);
    case Family::tree_closed: return tree_closed(s.d, s.r, s.variant, s.seed);
    case Family::torus: return torus(s.dims);
    case Family::cycle: return cycle(s.n);
    case Family::oriented_cycle: return oriented_cycle(s.n);
    case Family::complete: return complete(s.n);
    case Family::random_regular: return random_regular(s.n, s.d, s.seed);
  }
  throw std::invalid_argument("unknown generator family");
}

Digraph two_region(std::uint32_t L, std::uint32_t d1, std::uint32_t d2, std::uint64_t seed) {
  if (L < 3) throw std::invalid_argument("two-region: L must be at least 3");
  if (d2 < 2 || d1 < d2) throw std::invalid_argument("two-region: requires d1 >= d2 > 1");
  if (d1 - 1 > L) throw std::invalid_argument("two-region: d1 - 1 must not exceed L");

  const std::uint32_t rings = 2 * L;
  CounterRng rng(seed, kStreamTwoRegion);
  std::vector<Arc> arcs;
  arcs.reserve(static_cast<std::size_t>(rings) * L * (d1 + 1));
  std::vector<std::uint32_t> perm(L);

  for (std::uint32_t i = 0; i < rings; ++i) {
    const std::uint32_t base = i * L;
    for (std::uint32_t k = 0; k < L; ++k) arcs.push_back({base + k, base + (k + 1) % L});

    const std::uint32_t extra = (i < L ? d1 : d2) - 1;
    const std::uint32_t next = ((i + 1) % rings) * L;
    // used[k] holds the targets already drawn for source k of this ring.
    std::vector<std::vector<std::uint32_t>> used(L);
    for (std::uint32_t m = 0; m < extra; ++m) {
      int attempts = 0;
      while (true) {
        if (++attempts > kMaxAttempts) {
          throw std::runtime_error("two-region: could not draw a collision-free matching");
        }
        std::iota(perm.begin(), perm.end(), 0u);
        rng.shuffle(std::span<std::uint32_t>(perm));
        bool clash = false;
        for (std::uint32_t k = 0; k < L && !clash; ++k) {
          clash = std::find(used[k].begin(), used[k].end(), perm[k]) != used[k].end();
        }
        if (!clash) break;
      }
      for (std::uint32_t k = 0; k < L; ++k) {
        used[k].push_back(perm[k]);
        arcs.push_back({base + k, next + perm[k]});
      }
    }
  }
  return Digraph::from_arcs(static_cast<std::size_t>(rings) * L, arcs);
}

Digraph rooted_tree(std::uint32_t D, std::uint32_t r) {
  if (D < 1) throw std::invalid_argument("rooted-tree: D must be at least 1");
  const TreeShape t = build_tree(D, D, r);
  return Digraph::undirected(t.vertex_count, t.edges);
}

Digraph regular_tree(std::uint32_t d, std::uint32_t r) {
  if (d < 2) throw std::invalid_argument("regular tree: d must be at least 2");
  const TreeShape t = build_tree(d, d - 1, r);
  return Digraph::undirected(t.vertex_count, t.edges);
}

Digraph tree_closed(std::uint32_t d, std::uint32_t r, TreeVariant variant, std::uint64_t seed) {
  if (d < 3) throw std::invalid_argument("tree-closed: d must be at least 3");
  if (r < 1) throw std::invalid_argument("tree-closed: r must be at least 1");
  if (variant == TreeVariant::a) return regular_tree(d, r);

  const TreeShape t = build_tree(d, d - 1, r);
  std::vector<VertexId> leaves = t.leaves;

  if (variant == TreeVariant::b) {
    if (leaves.size() % 2 != 0) {
      throw std::invalid_argument("tree-closed b: odd number of leaves (" +
                                  std::to_string(leaves.size()) + "), cannot pair them");
    }
    CounterRng rng(seed, kStreamTreeB);
    int attempts = 0;
    while (true) {
      if (++attempts > kMaxAttempts) {
        throw std::runtime_error("tree-closed b: could not pair leaves without siblings");
      }
      rng.shuffle(std::span<VertexId>(leaves));
      bool siblings = false;
      for (std::size_t k = 0; k < leaves.size() && !siblings; k += 2) {
        siblings = t.parent[leaves[k]] == t.parent[leaves[k + 1]];
      }
      if (!siblings) break;
    }
    // The second leaf of each pair merges into the first; ids are compacted.
    std::vector<VertexId> merged_into(t.vertex_count);
    std::iota(merged_into.begin(), merged_into.end(), 0u);
    std::vector<bool> removed(t.vertex_count, false);
    for (std::size_t k = 0; k < leaves.size(); k += 2) {
      merged_into[leaves[k + 1]] = leaves[k];
      removed[leaves[k + 1]] = true;
    }
    std::vector<VertexId> new_id(t.vertex_count);
    VertexId next = 0;
    for (VertexId v = 0; v < t.vertex_count; ++v) {
      if (!removed[v]) new_id[v] = next++;
    }
    std::vector<Edge> edges;
    edges.reserve(t.edges.size());
    for (const auto& [u, v] : t.edges) {
      edges.emplace_back(new_id[merged_into[u]], new_id[merged_into[v]]);
    }
    return Digraph::undirected(next, edges);
  }

  // Variant c: each leaf carries d-1 free stubs; match them without loops or
  // repeated edges (leaves are never adjacent in the tree itself).
  CounterRng rng(seed, kStreamTreeC);
  std::vector<VertexId> stubs;
  for (VertexId leaf : leaves) stubs.insert(stubs.end(), d - 1, leaf);
  if (stubs.size() % 2 != 0) {
    throw std::invalid_argument("tree-closed c: odd stub count, no d-regular closure exists");
  }
  int attempts = 0;
  while (true) {
    if (++attempts > kMaxAttempts) {
      throw std::runtime_error("tree-closed c: could not find a simple leaf matching");
    }
    rng.shuffle(std::span<VertexId>(stubs));
    std::unordered_set<std::uint64_t> seen;
    bool ok = true;
    for (std::size_t k = 0; k < stubs.size() && ok; k += 2) {
      ok = stubs[k] != stubs[k + 1] && seen.insert(edge_key(stubs[k], stubs[k + 1])).second;
    }
    if (!ok) continue;
    std::vector<Edge> edges = t.edges;
    for (std::size_t k = 0; k < stubs.size(); k += 2) edges.emplace_back(stubs[k], stubs[k + 1]);
    Digraph g = Digraph::undirected(t.vertex_count, edges);
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
      if (g.out_degree(v) != d) throw std::logic_error("tree-closed c: result is not regular");
    }
    return g;
  }
}

Digraph torus(const std::vector<std::uint32_t>& dims) {
  if (dims.empty()) throw std::invalid_argument("torus: at least one dimension required");
  std::size_t n = 1;
  for (std::uint32_t side : dims) {
    if (side < 3) throw std::invalid_argument("torus: every side must be at least 3");
    n *= side;
  }
  std::vector<Edge> edges;
  edges.reserve(n * dims.size());
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t stride = 1;
    for (std::uint32_t side : dims) {
      const std::size_t coord = (v / stride) % side;
      const std::size_t w = v - coord * stride + ((coord + 1) % side) * stride;
      edges.emplace_back(static_cast<VertexId>(v), static_cast<VertexId>(w));
      stride *= side;
    }
  }
  return Digraph::undirected(n, edges);
}

Digraph cycle(std::uint32_t n) {
  if (n < 3) throw std::invalid_argument("cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (VertexId v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Digraph::undirected(n, edges);
}

Digraph oriented_cycle(std::uint32_t n) {
  if (n < 2) throw std::invalid_argument("oriented cycle: n must be at least 2");
  std::vector<Arc> arcs;
  for (VertexId v = 0; v < n; ++v) arcs.push_back({v, (v + 1) % n});
  return Digraph::from_arcs(n, arcs);
}

Digraph complete(std::uint32_t n) {
  if (n < 1) throw std::invalid_argument("complete: n must be at least 1");
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Digraph::undirected(n, edges);
}

Digraph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed) {
  if (d >= n) throw std::invalid_argument("random-regular: requires d < n");
  if ((static_cast<std::uint64_t>(n) * d) % 2 != 0) {
    throw std::invalid_argument("random-regular: n*d must be even");
  }
  CounterRng rng(seed, kStreamRegular);
  std::vector<VertexId> stubs;
  for (VertexId v = 0; v < n; ++v) stubs.insert(stubs.end(), d, v);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    rng.shuffle(std::span<VertexId>(stubs));
    std::unordered_set<std::uint64_t> seen;
    bool ok = true;
    for (std::size_t k = 0; k < stubs.size() && ok; k += 2) {
      ok = stubs[k] != stubs[k + 1] && seen.insert(edge_key(stubs[k], stubs[k + 1])).second;
    }
    if (!ok) continue;
    std::vector<Edge> edges;
    for (std::size_t k = 0; k < stubs.size(); k += 2) edges.emplace_back(stubs[k], stubs[k + 1]);
    return Digraph::undirected(n, edges);
  }
  throw std::runtime_error("random-regular: rejection sampling did not produce a simple graph");
}

}  // namespace hetperc
