#include "hetperc/corpus.hpp"

#include <numeric>

#include "hetperc/generators.hpp"
#include "hetperc/rng.hpp"

namespace hetperc {

namespace {

constexpr std::uint64_t kGraphStream = 0x67726170;  // graph structure draws
constexpr std::uint64_t kProbStream = 0x70726f62;   // probability draws

double uniform_in(CounterRng& rng, double lo, double hi) { return lo + (hi - lo) * rng.uniform(); }

}  // namespace

Digraph random_digraph(const RandomDigraphSpec& spec) {
  if (spec.n < 2) throw GraphError("random digraph needs at least 2 vertices");
  CounterRng rng(spec.seed, kGraphStream);
  const std::size_t n = spec.n;
  // orientation[u*n+v]: 0 = absent, 1 = u->v only, 2 = both directions.
  std::vector<std::uint8_t> orientation(n * n, 0);
  auto link = [&](VertexId u, VertexId v) {
    if (orientation[u * n + v] != 0 || orientation[v * n + u] != 0) return;
    bool both = spec.kind == RandomKind::undirected ||
                (spec.kind == RandomKind::mixed && rng.uniform() < spec.reciprocity);
    if (both) {
      orientation[u * n + v] = 2;
    } else {
      orientation[u * n + v] = 1;
    }
  };

  if (spec.strongly_connected) {
    std::vector<VertexId> perm(n);
    std::iota(perm.begin(), perm.end(), 0u);
    rng.shuffle(std::span<VertexId>(perm));
    for (std::size_t i = 0; i < n; ++i) link(perm[i], perm[(i + 1) % n]);
  }
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (rng.uniform() >= spec.density) continue;
      if (rng.uniform() < 0.5) {
        link(u, v);
      } else {
        link(v, u);
      }
    }
  }

  std::vector<Arc> arcs;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      const std::uint8_t o = orientation[u * n + v];
      if (o >= 1) arcs.push_back({u, v});
      if (o == 2) arcs.push_back({v, u});
    }
  }
  return Digraph::from_arcs(n, arcs);
}

SiteProbabilities random_probabilities(std::size_t n, double lo, double hi, std::uint64_t seed) {
  CounterRng rng(seed, kProbStream);
  std::vector<double> p(n);
  for (double& x : p) x = uniform_in(rng, lo, hi);
  return SiteProbabilities(std::move(p));
}

std::vector<std::pair<std::string, Digraph>> named_small_graphs() {
  std::vector<std::pair<std::string, Digraph>> g;
  g.emplace_back("triangle", complete(3));
  g.emplace_back("oriented-triangle", oriented_cycle(3));
  g.emplace_back("K4", complete(4));
  g.emplace_back("K5", complete(5));
  g.emplace_back("cycle-6", cycle(6));
  g.emplace_back("oriented-cycle-7", oriented_cycle(7));
  g.emplace_back("torus-3x3", torus({3, 3}));
  g.emplace_back("rooted-tree-2-2", rooted_tree(2, 2));
  g.emplace_back("rooted-tree-3-2", rooted_tree(3, 2));
  g.emplace_back("random-regular-10-3", random_regular(10, 3, 5));
  {
    // Bidirected triangle with an oriented 4-cycle hanging off vertex 0.
    const std::vector<EdgeSpec> e{{0, 1, EdgeKind::undirected}, {1, 2, EdgeKind::undirected},
                                  {2, 0, EdgeKind::undirected}, {0, 3, EdgeKind::directed},
                                  {3, 4, EdgeKind::directed},   {4, 5, EdgeKind::directed},
                                  {5, 0, EdgeKind::directed}};
    g.emplace_back("triangle-with-oriented-loop", Digraph::from_edge_list(6, e));
  }
  {
    const std::vector<EdgeSpec> e{{0, 1, EdgeKind::directed}, {1, 2, EdgeKind::directed},
                                  {0, 2, EdgeKind::directed}, {2, 3, EdgeKind::undirected}};
    g.emplace_back("acyclic-with-bond", Digraph::from_edge_list(4, e));
  }
  return g;
}

std::vector<CorpusInstance> oracle_corpus(std::uint64_t seed, std::size_t count,
                                          std::size_t max_n) {
  const auto named = named_small_graphs();
  std::vector<CorpusInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CounterRng rng(seed, i);
    CorpusInstance inst;
    const std::size_t pick = rng.below(named.size());
    if (rng.uniform() < 0.4 && named[pick].second.vertex_count() <= max_n) {
      inst.name = named[pick].first;
      inst.graph = named[pick].second;
    } else {
      RandomDigraphSpec spec;
      spec.n = 3 + rng.below(max_n - 2);
      spec.kind = static_cast<RandomKind>(rng.below(3));
      spec.density = uniform_in(rng, 0.05, 0.35);
      spec.reciprocity = rng.uniform();
      spec.strongly_connected = rng.uniform() < 0.8;
      spec.seed = rng.next_u64();
      inst.graph = random_digraph(spec);
      inst.name = std::string("random-") +
                  (spec.kind == RandomKind::undirected
                       ? "undirected"
                       : (spec.kind == RandomKind::oriented ? "oriented" : "mixed")) +
                  "-n" + std::to_string(spec.n);
    }
    const double hi = uniform_in(rng, 0.05, 0.95);
    const double lo = hi * uniform_in(rng, 0.2, 1.0);
    inst.p = random_probabilities(inst.graph.vertex_count(), lo, hi, rng.next_u64());
    inst.name += "#" + std::to_string(i);
    out.push_back(std::move(inst));
  }
  return out;
}

std::vector<CorpusInstance> spectral_corpus(std::uint64_t seed, std::size_t count,
                                            std::size_t max_n) {
  std::vector<CorpusInstance> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    CounterRng rng(seed, 0x5000000 + i);
    RandomDigraphSpec spec;
    spec.n = 4 + rng.below(max_n - 3);
    spec.kind = static_cast<RandomKind>(i % 3);
    spec.density = uniform_in(rng, 1.0, 5.0) / static_cast<double>(spec.n);
    spec.reciprocity = rng.uniform();
    spec.strongly_connected = rng.uniform() < 0.75;
    spec.seed = rng.next_u64();
    CorpusInstance inst;
    inst.graph = random_digraph(spec);
    inst.p = random_probabilities(spec.n, 0.01, 0.99, rng.next_u64());
    inst.name = "spectral#" + std::to_string(i) + "-n" + std::to_string(spec.n);
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace hetperc
