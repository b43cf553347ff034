#include "hetperc/olg.hpp"

#include <algorithm>
#include <deque>

#include "hetperc/matrices.hpp"
#include "hetperc/scc.hpp"

namespace hetperc {

const char* to_string(OlgCondition c) {
  switch (c) {
    case OlgCondition::a: return "a";
    case OlgCondition::b: return "b";
    case OlgCondition::neither: return "neither";
  }
  return "neither";
}

bool olg_strongly_connected(const Digraph& d) {
  if (d.arc_count() == 0) return false;
  const SparseNonNegMatrix h = hashimoto_matrix(d);
  return tarjan_scc<std::uint32_t>(h.row_offsets(), h.col_indices()).count() == 1;
}

namespace {

// Strong connectivity of d with one arc masked out, straight from the CSR.
bool strongly_connected_without(const Digraph& d, ArcId removed) {
  const Arc cut = d.arc(removed);
  std::vector<std::size_t> offsets(d.vertex_count() + 1, 0);
  std::vector<VertexId> targets;
  targets.reserve(d.arc_count());
  for (VertexId v = 0; v < d.vertex_count(); ++v) {
    for (VertexId w : d.out_neighbors(v)) {
      if (v == cut.tail && w == cut.head) continue;
      targets.push_back(w);
    }
    offsets[v + 1] = targets.size();
  }
  return tarjan_scc<VertexId>(offsets, targets).count() == 1;
}

}  // namespace

OlgReport olg_connectivity_report(const Digraph& d, std::size_t return_cap) {
  OlgReport report;
  report.return_cap = return_cap;
  report.digraph_strongly_connected = is_strongly_connected(d);
  report.olg_strongly_connected = olg_strongly_connected(d);

  if (report.digraph_strongly_connected) {
    if (!d.has_symmetric_bonds()) {
      report.condition = OlgCondition::a;
    } else {
      bool holds = true;
      for (ArcId a = 0; a < d.arc_count() && holds; ++a) {
        if (d.has_inverse(a)) holds = strongly_connected_without(d, a);
      }
      report.condition = holds ? OlgCondition::b : OlgCondition::neither;
    }
  }

  // Breadth-first search in the oriented line graph from each arc with an inverse.
  const SparseNonNegMatrix h = hashimoto_matrix(d);
  report.return_length.assign(d.arc_count(), std::nullopt);
  std::vector<std::size_t> depth(d.arc_count());
  std::vector<ArcId> touched;
  std::deque<ArcId> queue;
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::fill(depth.begin(), depth.end(), kUnseen);
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    if (!d.has_inverse(a)) continue;
    const ArcId target = d.inverse(a);
    depth[a] = 0;
    touched.push_back(a);
    queue.push_back(a);
    while (!queue.empty()) {
      const ArcId x = queue.front();
      queue.pop_front();
      if (x == target) {
        report.return_length[a] = depth[x];
        break;
      }
      if (depth[x] == return_cap) continue;
      for (std::uint32_t y : h.row_cols(x)) {
        if (depth[y] != kUnseen) continue;
        depth[y] = depth[x] + 1;
        touched.push_back(y);
        queue.push_back(y);
      }
    }
    queue.clear();
    for (ArcId x : touched) depth[x] = kUnseen;
    touched.clear();
  }
  return report;
}

}  // namespace hetperc
