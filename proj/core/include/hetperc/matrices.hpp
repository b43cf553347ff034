#pragma once

#include "hetperc/digraph.hpp"
#include "hetperc/sparse_matrix.hpp"

namespace hetperc {

/// n x n matrix with entry (i, j) = sqrt(p_i p_j) when the arc i->j exists.
SparseNonNegMatrix weighted_adjacency(const Digraph& d, const SiteProbabilities& p);

/// Arc-indexed line-digraph matrix: entry (a, b) = p_j for a = i->j, b = j->l.
SparseNonNegMatrix weighted_line_adjacency(const Digraph& d, const SiteProbabilities& p);

/// Non-backtracking (Hashimoto) matrix: the line-digraph matrix with the
/// transitions a -> inverse(a) removed.
SparseNonNegMatrix weighted_hashimoto(const Digraph& d, const SiteProbabilities& p);

/// Unweighted versions (every p_v = 1).
SparseNonNegMatrix adjacency_matrix(const Digraph& d);
SparseNonNegMatrix hashimoto_matrix(const Digraph& d);

}  // namespace hetperc
