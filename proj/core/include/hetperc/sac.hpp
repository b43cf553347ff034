#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "hetperc/clusters.hpp"
#include "hetperc/digraph.hpp"

namespace hetperc {

inline constexpr std::uint64_t kDefaultSacBudget = 50'000'000;

struct SacCount {
  std::uint64_t total = 0;
  /// by_length[s] = cycles with s arcs (s vertices); index 0..length_cap.
  std::vector<std::uint64_t> by_length;
  std::uint64_t expansions = 0;
};

/*
  Directed self-avoiding cycles through `arc` = i -> j in the open subgraph:
  i -> j -> ... -> i with every vertex visited once. Cycles of length 2
  (an arc and its inverse) are backtracking and are not counted, matching
  the non-backtracking cycle counts they are compared with. Depth-first
  enumeration up to `length_cap` arcs; exact when length_cap >= n. Throws
  BudgetExceeded once more than `expansion_budget` search steps are taken.
*/
SacCount count_sacs(const Digraph& d, const OpenMask& open, ArcId arc, std::size_t length_cap,
                    std::uint64_t expansion_budget = kDefaultSacBudget);

/// Calls `visit(cycle_vertices)` for every cycle counted by count_sacs; the
/// span lists the cycle starting at the tail of `arc`.
void for_each_sac(const Digraph& d, const OpenMask& open, ArcId arc, std::size_t length_cap,
                  const std::function<void(std::span<const VertexId>)>& visit,
                  std::uint64_t expansion_budget = kDefaultSacBudget);

}  // namespace hetperc
