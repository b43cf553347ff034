#include "hetperc/matrices.hpp"

#include <cmath>

namespace hetperc {

namespace {

SparseNonNegMatrix arc_matrix(const Digraph& d, const SiteProbabilities& p, bool backtracking) {
  require_matching_size(d, p);
  std::vector<Triplet> entries;
  entries.reserve(d.arc_count() * 2);
  for (ArcId a = 0; a < d.arc_count(); ++a) {
    const VertexId j = d.arc(a).head;
    const double weight = p[j];
    for (ArcId b : d.out_arcs(j)) {
      if (!backtracking && b == d.inverse(a)) continue;
      entries.push_back({a, b, weight});
    }
  }
  return SparseNonNegMatrix::from_triplets(d.arc_count(), std::move(entries));
}

}  // namespace

SparseNonNegMatrix weighted_adjacency(const Digraph& d, const SiteProbabilities& p) {
  require_matching_size(d, p);
  std::vector<Triplet> entries;
  entries.reserve(d.arc_count());
  for (const Arc& a : d.arcs()) {
    entries.push_back({a.tail, a.head, std::sqrt(p[a.tail] * p[a.head])});
  }
  return SparseNonNegMatrix::from_triplets(d.vertex_count(), std::move(entries));
}

SparseNonNegMatrix weighted_line_adjacency(const Digraph& d, const SiteProbabilities& p) {
  return arc_matrix(d, p, true);
}

SparseNonNegMatrix weighted_hashimoto(const Digraph& d, const SiteProbabilities& p) {
  return arc_matrix(d, p, false);
}

SparseNonNegMatrix adjacency_matrix(const Digraph& d) {
  return weighted_adjacency(d, SiteProbabilities::homogeneous(d.vertex_count(), 1.0));
}

SparseNonNegMatrix hashimoto_matrix(const Digraph& d) {
  return weighted_hashimoto(d, SiteProbabilities::homogeneous(d.vertex_count(), 1.0));
}

}  // namespace hetperc
