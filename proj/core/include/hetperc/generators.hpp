#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "hetperc/digraph.hpp"

namespace hetperc {

enum class Family {
  two_region,
  rooted_tree,
  tree_closed,
  torus,
  cycle,
  oriented_cycle,
  complete,
  random_regular,
};

const char* to_string(Family f);
Family family_from_string(const std::string& name);

/// Tree-sequence variants: the plain regular tree (a), leaves identified in
/// pairs (b), leaves joined into a d-regular graph (c).
enum class TreeVariant { a, b, c };

/// Parameters for every generator family; each family reads its own fields.
struct GeneratorSpec {
  Family family = Family::cycle;
  std::uint32_t L = 0, d1 = 0, d2 = 0;  // two_region
  std::uint32_t D = 0, r = 0;           // rooted_tree (D-ary); tree_closed uses d and r
  std::uint32_t d = 0;                  // tree_closed, random_regular
  TreeVariant variant = TreeVariant::a;
  std::vector<std::uint32_t> dims;      // torus
  std::uint32_t n = 0;                  // cycle, oriented_cycle, complete, random_regular
  std::uint64_t seed = 0;
};

Digraph generate(const GeneratorSpec& spec);

/*
  2L directed rings of length L; vertex (ring i, position k) has id i*L + k.
  Ring i sends D_i extra arcs from each vertex to ring i+1 (mod 2L), realized
  as D_i random permutations that are resampled whenever one would repeat an
  arc already drawn. Every ring-(i+1) vertex therefore has in-degree D_i + 1.
  D_i = d1 - 1 for i < L and d2 - 1 otherwise.
*/
Digraph two_region(std::uint32_t L, std::uint32_t d1, std::uint32_t d2, std::uint64_t seed);

/// Undirected D-ary tree of depth r with breadth-first numbering; root is 0.
Digraph rooted_tree(std::uint32_t D, std::uint32_t r);

/// Depth-r tree whose root has d children and every other internal vertex d-1.
Digraph regular_tree(std::uint32_t d, std::uint32_t r);

/// Variant b identifies random pairs of non-sibling leaves; variant c joins
/// the leaves by a random simple matching of their missing d-1 stubs so the
/// result is d-regular. Variant a returns regular_tree unchanged.
Digraph tree_closed(std::uint32_t d, std::uint32_t r, TreeVariant variant, std::uint64_t seed);

/// Periodic hypercubic lattice; every side must be at least 3.
Digraph torus(const std::vector<std::uint32_t>& dims);

Digraph cycle(std::uint32_t n);
Digraph oriented_cycle(std::uint32_t n);
Digraph complete(std::uint32_t n);

/// Uniform simple d-regular graph by the configuration model with rejection.
Digraph random_regular(std::uint32_t n, std::uint32_t d, std::uint64_t seed);

}  // namespace hetperc
