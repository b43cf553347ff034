#include "hetperc/sac.hpp"

#include <string>

#include "hetperc/spectral.hpp"

namespace hetperc {

namespace {

template <class Visit>
std::uint64_t enumerate(const Digraph& d, const OpenMask& open, ArcId arc, std::size_t length_cap,
                        std::uint64_t budget, Visit&& visit) {
  if (arc >= d.arc_count()) throw std::invalid_argument("count_sacs: arc index out of range");
  if (open.size() != d.vertex_count()) throw std::invalid_argument("count_sacs: mask size mismatch");
  const VertexId start = d.arc(arc).tail;
  const VertexId first = d.arc(arc).head;
  if (!open[start] || !open[first] || length_cap < 3) return 0;

  std::vector<std::uint8_t> on_path(d.vertex_count(), 0);
  std::vector<VertexId> path{start, first};
  std::vector<std::size_t> cursor{0};  // next out-neighbour index for path.back()
  on_path[start] = on_path[first] = 1;
  std::uint64_t expansions = 0;

  while (!cursor.empty()) {
    const VertexId v = path.back();
    const auto next = d.out_neighbors(v);
    std::size_t& k = cursor.back();
    if (k == next.size()) {
      on_path[v] = 0;
      path.pop_back();
      cursor.pop_back();
      continue;
    }
    const VertexId w = next[k++];
    if (++expansions > budget) {
      throw BudgetExceeded("count_sacs: more than " + std::to_string(budget) +
                           " search steps; lower the length cap");
    }
    if (!open[w]) continue;
    if (w == start) {
      if (path.size() >= 3) visit(std::span<const VertexId>(path));
      continue;
    }
    if (on_path[w] || path.size() >= length_cap) continue;
    on_path[w] = 1;
    path.push_back(w);
    cursor.push_back(0);
  }
  on_path[start] = 0;
  return expansions;
}

}  // namespace

SacCount count_sacs(const Digraph& d, const OpenMask& open, ArcId arc, std::size_t length_cap,
                    std::uint64_t expansion_budget) {
  SacCount out;
  out.by_length.assign(length_cap + 1, 0);
  out.expansions = enumerate(d, open, arc, length_cap, expansion_budget,
                             [&](std::span<const VertexId> cyc) {
                               ++out.total;
                               ++out.by_length[cyc.size()];
                             });
  return out;
}

void for_each_sac(const Digraph& d, const OpenMask& open, ArcId arc, std::size_t length_cap,
                  const std::function<void(std::span<const VertexId>)>& visit,
                  std::uint64_t expansion_budget) {
  enumerate(d, open, arc, length_cap, expansion_budget, visit);
}

}  // namespace hetperc
