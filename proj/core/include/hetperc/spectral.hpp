#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "hetperc/sparse_matrix.hpp"

namespace hetperc {

/// A numerical precondition failed (for example an unconverged iteration
/// whose value a caller needs).
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A requested computation exceeds its configured work budget.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct SpectralOptions {
  double tol = 1e-10;
  /// 0 selects max(100 * dimension, 10000).
  std::size_t max_iter = 0;
  bool compute_left = true;
};

struct HeightRatio {
  double value = 1.0;       ///< +inf when zero_support is set
  bool zero_support = false;
};

struct PerronResult {
  /// Point estimate, midpoint of the certified bracket [rho_lower, rho_upper].
  double rho = 0.0;
  double rho_lower = 0.0;
  double rho_upper = 0.0;
  std::vector<double> right_vec;  ///< 1-normalized
  std::vector<double> left_vec;   ///< 1-normalized, empty unless requested
  HeightRatio gamma_R;
  HeightRatio gamma_L;
  /// Sparsity pattern is strongly connected. When false the vectors are a
  /// best-effort iterate and both height ratios are reported as +inf.
  bool irreducible = false;
  std::size_t iterations = 0;
  /// Max-norm of M x - rho x for the returned right vector.
  double residual = 0.0;
  bool converged = false;
};

/*
  Perron root of a non-negative matrix.

  The pattern is split into strongly connected classes; rho is the largest
  class radius, and an acyclic pattern (nilpotent matrix) gives exactly 0.
  Each class is iterated as K + sI with s the mean row sum of K. The shift
  makes the iteration primitive, so periodic patterns such as bipartite
  graphs converge without special handling. Convergence is certified by
  the Collatz-Wielandt bracket min_i (Kx)_i/x_i <= rho <= max_i (Kx)_i/x_i;
  the iteration stops when the bracket width is below tol * rho.
*/
PerronResult spectral_radius(const SparseNonNegMatrix& m, const SpectralOptions& options = {});

/// max_i v_i / min_j v_j over the strictly positive entries; zero_support
/// and value +inf when any entry is exactly zero. Throws on an all-zero or
/// empty vector.
HeightRatio height_ratio(std::span<const double> v);

enum class NormKind { one, two, inf };

/// 1: max column sum; inf: max row sum; 2: sqrt of the Perron root of
/// M^T M (upper end of its bracket). Throws NumericalError if the 2-norm
/// iteration does not converge.
double induced_norm(const SparseNonNegMatrix& m, NormKind which,
                    const SpectralOptions& options = {});

struct WalkProfileOptions {
  /// Rows to report individually; empty means every row.
  std::vector<std::uint32_t> starts;
  /// Also report t_m(u) = sum_v [M^{m-1}]_{vu} for the selected rows.
  bool transpose_term = false;
  /// Indices a for which [M^m]_{aa} is reported.
  std::vector<std::uint32_t> diagonal;
  /// Upper limit on (number of sweeps) x (non-zeros).
  double cost_budget = 2e9;
};

struct WalkProfile {
  std::size_t m_max = 0;
  std::vector<std::uint32_t> starts;
  /// row_sums[m-1][k] = sum_v [M^m]_{starts[k], v}
  std::vector<std::vector<double>> row_sums;
  /// sup_u over all rows of sum_v [M^m]_{uv}
  std::vector<double> sup_row_sum;
  /// growth[m-1] = sup_row_sum[m-1]^(1/m)
  std::vector<double> growth;
  /// transposed[m-1][k] = sum_v [M^{m-1}]_{v, starts[k]}
  std::vector<std::vector<double>> transposed;
  /// diagonal[k][m-1] = [M^m]_{a_k a_k}
  std::vector<std::vector<double>> diagonal;
};

WalkProfile walk_profile(const SparseNonNegMatrix& m, std::size_t m_max,
                         const WalkProfileOptions& options = {});

}  // namespace hetperc
