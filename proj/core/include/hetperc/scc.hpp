#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace hetperc {

inline constexpr std::uint32_t kNoComponent = std::numeric_limits<std::uint32_t>::max();

struct SccResult {
  /// Component id per node, kNoComponent for inactive nodes. Ids follow
  /// Tarjan completion order: every component reachable from component c
  /// has an id smaller than c (sinks first).
  std::vector<std::uint32_t> component;
  std::vector<std::uint32_t> sizes;

  std::size_t count() const noexcept { return sizes.size(); }
};

/*
  Iterative Tarjan over a CSR successor structure. `active(v)` selects the
  induced subgraph; edges to inactive nodes are ignored. Linear in the
  number of active nodes plus scanned edges; no recursion, so it is safe
  on long paths.
*/
template <class Index, class Active>
SccResult tarjan_scc(std::span<const std::size_t> offsets, std::span<const Index> targets,
                     Active&& active) {
  const std::size_t n = offsets.size() - 1;
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();

  SccResult result;
  result.component.assign(n, kNoComponent);
  std::vector<std::uint32_t> order(n, kUnvisited);
  std::vector<std::uint32_t> low(n, 0);
  std::vector<std::uint32_t> stack;
  std::vector<std::pair<std::uint32_t, std::size_t>> call;  // (node, next edge)
  std::uint32_t counter = 0;

  for (std::size_t root = 0; root < n; ++root) {
    if (order[root] != kUnvisited || !active(root)) continue;
    call.emplace_back(static_cast<std::uint32_t>(root), offsets[root]);
    order[root] = low[root] = counter++;
    stack.push_back(static_cast<std::uint32_t>(root));

    while (!call.empty()) {
      auto& [v, edge] = call.back();
      if (edge < offsets[v + 1]) {
        const auto w = static_cast<std::uint32_t>(targets[edge++]);
        if (!active(w)) continue;
        if (order[w] == kUnvisited) {
          order[w] = low[w] = counter++;
          stack.push_back(w);
          call.emplace_back(w, offsets[w]);
        } else if (result.component[w] == kNoComponent && order[w] < low[v]) {
          low[v] = order[w];
        }
        continue;
      }
      const std::uint32_t finished = v;
      call.pop_back();
      if (!call.empty()) {
        const std::uint32_t parent = call.back().first;
        if (low[finished] < low[parent]) low[parent] = low[finished];
      }
      if (low[finished] == order[finished]) {
        const auto id = static_cast<std::uint32_t>(result.sizes.size());
        std::uint32_t size = 0;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          result.component[w] = id;
          ++size;
        } while (w != finished);
        result.sizes.push_back(size);
      }
    }
  }
  return result;
}

template <class Index>
SccResult tarjan_scc(std::span<const std::size_t> offsets, std::span<const Index> targets) {
  return tarjan_scc(offsets, targets, [](std::size_t) { return true; });
}

}  // namespace hetperc
