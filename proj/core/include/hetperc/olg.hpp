#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "hetperc/digraph.hpp"

namespace hetperc {

/// Which sufficient condition for a strongly connected oriented line graph
/// holds: (a) no symmetric bonds at all, (b) strong connectivity survives
/// replacing any single symmetric bond by either of its arcs.
enum class OlgCondition { a, b, neither };

const char* to_string(OlgCondition c);

struct OlgReport {
  bool digraph_strongly_connected = false;
  /// Ground truth from an SCC pass over the oriented line graph itself.
  bool olg_strongly_connected = false;
  OlgCondition condition = OlgCondition::neither;
  /// Per arc a: number of non-backtracking transitions on the shortest walk
  /// from a to its inverse, searched up to `return_cap` transitions. Empty
  /// when the inverse does not exist or is not reached within the cap.
  std::vector<std::optional<std::size_t>> return_length;
  std::size_t return_cap = 0;
};

inline constexpr std::size_t kDefaultReturnCap = 64;

OlgReport olg_connectivity_report(const Digraph& d, std::size_t return_cap = kDefaultReturnCap);

/// Strong connectivity of the oriented line graph (false for a digraph
/// without arcs).
bool olg_strongly_connected(const Digraph& d);

}  // namespace hetperc
