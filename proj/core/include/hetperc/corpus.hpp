#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "hetperc/digraph.hpp"

namespace hetperc {

/// A labelled (digraph, probabilities) pair used by the verification suites.
struct CorpusInstance {
  std::string name;
  Digraph graph;
  SiteProbabilities p;
};

enum class RandomKind {
  undirected,  ///< every arc has its inverse
  oriented,    ///< no symmetric bonds
  mixed,       ///< each adjacent pair is symmetric with probability `reciprocity`
};

struct RandomDigraphSpec {
  std::size_t n = 8;
  double density = 0.3;  ///< probability that an unordered pair is adjacent
  RandomKind kind = RandomKind::mixed;
  double reciprocity = 0.5;
  /// Overlay a random Hamiltonian cycle (in one orientation for oriented
  /// graphs) so the result is strongly connected.
  bool strongly_connected = true;
  std::uint64_t seed = 1;
};

Digraph random_digraph(const RandomDigraphSpec& spec);

/// Independent p_v drawn uniformly from [lo, hi].
SiteProbabilities random_probabilities(std::size_t n, double lo, double hi, std::uint64_t seed);

/// Small named graphs (at most 12 vertices) with fixed structure.
std::vector<std::pair<std::string, Digraph>> named_small_graphs();

/// Deterministic mix of named and random instances with n <= max_n, probability
/// ranges chosen so that both the sub- and supercritical regimes appear.
std::vector<CorpusInstance> oracle_corpus(std::uint64_t seed, std::size_t count,
                                          std::size_t max_n = 12);

/// Random graphs and digraphs (n <= max_n) with strictly interior random
/// probabilities, for spectral identity checks.
std::vector<CorpusInstance> spectral_corpus(std::uint64_t seed, std::size_t count,
                                            std::size_t max_n = 40);

}  // namespace hetperc
