#pragma once

#include <Eigen/Dense>

#include "hetperc/digraph.hpp"
#include "hetperc/sparse_matrix.hpp"

namespace hetperc::test {

inline Eigen::MatrixXd dense(const SparseNonNegMatrix& m) {
  const auto n = static_cast<Eigen::Index>(m.dimension());
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(n, n);
  for (std::size_t r = 0; r < m.dimension(); ++r) {
    const auto cols = m.row_cols(r);
    const auto vals = m.row_values(r);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(cols[k])) = vals[k];
    }
  }
  return out;
}

/// Largest eigenvalue modulus from a dense general eigensolver.
inline double dense_spectral_radius(const SparseNonNegMatrix& m) {
  if (m.dimension() == 0) return 0.0;
  Eigen::EigenSolver<Eigen::MatrixXd> es(dense(m), false);
  return es.eigenvalues().cwiseAbs().maxCoeff();
}

inline Digraph arcs_graph(std::size_t n, std::vector<Arc> arcs) {
  return Digraph::from_arcs(n, arcs);
}

}  // namespace hetperc::test
