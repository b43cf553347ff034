#include "hetperc/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "hetperc/scc.hpp"

namespace hetperc {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Iterate {
  double lower = 0.0;
  double upper = 0.0;
  std::vector<double> x;
  std::size_t iterations = 0;
  bool converged = false;
};

void normalize_1(std::vector<double>& x) {
  const double sum = std::accumulate(x.begin(), x.end(), 0.0);
  if (sum > 0.0) {
    for (double& v : x) v /= sum;
  }
}

// Shifted power iteration on an irreducible matrix with at least one entry.
Iterate iterate_irreducible(const SparseNonNegMatrix& k, double tol, std::size_t max_iter) {
  const std::size_t n = k.dimension();
  Iterate out;
  out.x.assign(n, 1.0 / static_cast<double>(n));
  const auto vals = k.values();
  const double shift = std::accumulate(vals.begin(), vals.end(), 0.0) / static_cast<double>(n);
  std::vector<double> y(n);

  for (std::size_t it = 1; it <= max_iter; ++it) {
    k.multiply(out.x, y);
    double lo = kInf;
    double hi = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      const double ratio = y[i] / out.x[i];
      lo = std::min(lo, ratio);
      hi = std::max(hi, ratio);
    }
    out.lower = lo;
    out.upper = hi;
    out.iterations = it;
    if (hi - lo <= tol * hi) {
      out.converged = true;
      break;
    }
    for (std::size_t i = 0; i < n; ++i) y[i] += shift * out.x[i];
    normalize_1(y);
    // Guard against underflow to exact zero, which would break the ratio test.
    for (std::size_t i = 0; i < n; ++i) out.x[i] = std::max(y[i], std::numeric_limits<double>::min());
  }
  return out;
}

SparseNonNegMatrix restrict_to(const SparseNonNegMatrix& m, const std::vector<std::uint32_t>& members,
                               const std::vector<std::uint32_t>& local) {
  std::vector<Triplet> entries;
  for (std::uint32_t g : members) {
    const auto cols = m.row_cols(g);
    const auto vals = m.row_values(g);
    for (std::size_t k = 0; k < cols.size(); ++k) {
      if (local[cols[k]] != kNoComponent) entries.push_back({local[g], local[cols[k]], vals[k]});
    }
  }
  return SparseNonNegMatrix::from_triplets(members.size(), std::move(entries));
}

double residual_of(const SparseNonNegMatrix& m, const std::vector<double>& x, double rho) {
  std::vector<double> y(x.size());
  m.multiply(x, y);
  double r = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) r = std::max(r, std::abs(y[i] - rho * x[i]));
  return r;
}

}  // namespace

HeightRatio height_ratio(std::span<const double> v) {
  if (v.empty()) throw std::invalid_argument("height ratio of an empty vector");
  double lo = kInf;
  double hi = 0.0;
  bool zero = false;
  for (double x : v) {
    if (x < 0.0) throw std::invalid_argument("height ratio of a vector with negative entries");
    if (x == 0.0) {
      zero = true;
      continue;
    }
    lo = std::min(lo, x);
    hi = std::max(hi, x);
  }
  if (hi == 0.0) throw std::invalid_argument("height ratio of the zero vector");
  if (zero) return {kInf, true};
  return {hi / lo, false};
}

PerronResult spectral_radius(const SparseNonNegMatrix& m, const SpectralOptions& options) {
  const std::size_t n = m.dimension();
  PerronResult result;
  if (n == 0) {
    result.converged = true;
    return result;
  }
  const std::size_t max_iter =
      options.max_iter != 0 ? options.max_iter : std::max<std::size_t>(100 * n, 10000);

  const SccResult scc = tarjan_scc<std::uint32_t>(m.row_offsets(), m.col_indices());
  std::vector<std::vector<std::uint32_t>> members(scc.count());
  for (std::uint32_t i = 0; i < n; ++i) members[scc.component[i]].push_back(i);

  // A class carries cycles if it has more than one node or a self-loop.
  std::vector<bool> cyclic(scc.count(), false);
  for (std::size_t c = 0; c < scc.count(); ++c) {
    cyclic[c] = members[c].size() > 1 || m.at(members[c][0], members[c][0]) > 0.0;
  }
  result.irreducible = scc.count() == 1;

  if (std::none_of(cyclic.begin(), cyclic.end(), [](bool b) { return b; })) {
    // Nilpotent: rho = 0 exactly. e_v for a zero column is a right null
    // vector, e_v for a zero row a left one.
    result.converged = true;
    const std::vector<double> cols = m.column_sums();
    const std::vector<double> rows = m.row_sums();
    result.right_vec.assign(n, 0.0);
    result.right_vec[static_cast<std::size_t>(
        std::find(cols.begin(), cols.end(), 0.0) - cols.begin())] = 1.0;
    if (options.compute_left) {
      result.left_vec.assign(n, 0.0);
      result.left_vec[static_cast<std::size_t>(
          std::find(rows.begin(), rows.end(), 0.0) - rows.begin())] = 1.0;
    }
    result.gamma_R = height_ratio(result.right_vec);
    result.gamma_L = options.compute_left ? height_ratio(result.left_vec) : HeightRatio{kInf, true};
    return result;
  }

  result.converged = true;
  std::vector<std::uint32_t> local(n, kNoComponent);
  for (std::size_t c = 0; c < scc.count(); ++c) {
    if (!cyclic[c]) continue;
    double lower = 0.0;
    double upper = 0.0;
    std::size_t iterations = 0;
    bool converged = true;
    if (members[c].size() == 1) {
      lower = upper = m.at(members[c][0], members[c][0]);
    } else {
      for (std::size_t k = 0; k < members[c].size(); ++k) local[members[c][k]] = static_cast<std::uint32_t>(k);
      const SparseNonNegMatrix block = restrict_to(m, members[c], local);
      for (std::uint32_t g : members[c]) local[g] = kNoComponent;
      Iterate it = iterate_irreducible(block, options.tol, max_iter);
      lower = it.lower;
      upper = it.upper;
      iterations = it.iterations;
      converged = it.converged;
      if (result.irreducible) result.right_vec = std::move(it.x);
    }
    result.iterations = std::max(result.iterations, iterations);
    result.converged = result.converged && converged;
    result.rho_lower = std::max(result.rho_lower, lower);
    result.rho_upper = std::max(result.rho_upper, upper);
  }
  result.rho = 0.5 * (result.rho_lower + result.rho_upper);

  if (result.irreducible) {
    if (n == 1) result.right_vec = {1.0};
    normalize_1(result.right_vec);
    result.gamma_R = height_ratio(result.right_vec);
    if (options.compute_left) {
      if (n == 1) {
        result.left_vec = {1.0};
      } else {
        Iterate left = iterate_irreducible(m.transpose(), options.tol, max_iter);
        result.converged = result.converged && left.converged;
        result.iterations = std::max(result.iterations, left.iterations);
        result.left_vec = std::move(left.x);
        normalize_1(result.left_vec);
      }
      result.gamma_L = height_ratio(result.left_vec);
    }
  } else {
    // Best-effort vectors for reducible patterns: a bounded number of shifted
    // sweeps on the whole matrix. Consumers must not rely on their heights.
    const std::size_t sweeps = std::min<std::size_t>(max_iter, 2000);
    const auto vals = m.values();
    const double shift = std::accumulate(vals.begin(), vals.end(), 0.0) / static_cast<double>(n);
    auto sweep = [&](const SparseNonNegMatrix& mat) {
      std::vector<double> x(n, 1.0 / static_cast<double>(n));
      std::vector<double> y(n);
      for (std::size_t s = 0; s < sweeps; ++s) {
        mat.multiply(x, y);
        for (std::size_t i = 0; i < n; ++i) y[i] += shift * x[i];
        normalize_1(y);
        x.swap(y);
      }
      return x;
    };
    result.right_vec = sweep(m);
    if (options.compute_left) result.left_vec = sweep(m.transpose());
    result.gamma_R = {kInf, true};
    result.gamma_L = {kInf, true};
  }
  result.residual = residual_of(m, result.right_vec, result.rho);
  return result;
}

double induced_norm(const SparseNonNegMatrix& m, NormKind which, const SpectralOptions& options) {
  if (m.dimension() == 0) return 0.0;
  switch (which) {
    case NormKind::one: {
      const auto s = m.column_sums();
      return *std::max_element(s.begin(), s.end());
    }
    case NormKind::inf: {
      const auto s = m.row_sums();
      return *std::max_element(s.begin(), s.end());
    }
    case NormKind::two: {
      SpectralOptions opts = options;
      opts.compute_left = false;
      const PerronResult r = spectral_radius(m.gram(), opts);
      if (!r.converged) throw NumericalError("2-norm: power iteration on M^T M did not converge");
      return std::sqrt(r.rho_upper);
    }
  }
  return 0.0;
}

WalkProfile walk_profile(const SparseNonNegMatrix& m, std::size_t m_max,
                         const WalkProfileOptions& options) {
  if (m_max < 1) throw std::invalid_argument("walk profile: m_max must be at least 1");
  const std::size_t n = m.dimension();
  const double sweeps = static_cast<double>(m_max) *
                        (1.0 + (options.transpose_term ? 1.0 : 0.0) +
                         static_cast<double>(options.diagonal.size()));
  const double cost = sweeps * static_cast<double>(std::max<std::size_t>(m.nonzeros(), 1));
  if (cost > options.cost_budget) {
    throw BudgetExceeded("walk profile: " + std::to_string(m_max) + " steps on " +
                         std::to_string(m.nonzeros()) + " non-zeros exceeds the cost budget");
  }

  WalkProfile out;
  out.m_max = m_max;
  if (options.starts.empty()) {
    out.starts.resize(n);
    std::iota(out.starts.begin(), out.starts.end(), 0u);
  } else {
    out.starts = options.starts;
    for (std::uint32_t s : out.starts) {
      if (s >= n) throw std::invalid_argument("walk profile: start index out of range");
    }
  }

  // s_m = M^m 1, one product per step.
  std::vector<double> s(n, 1.0);
  std::vector<double> next(n);
  std::vector<double> t(n, 1.0);  // 1^T M^{m-1}, kept as a column vector
  for (std::size_t step = 1; step <= m_max; ++step) {
    if (options.transpose_term) {
      std::vector<double> row;
      row.reserve(out.starts.size());
      for (std::uint32_t u : out.starts) row.push_back(t[u]);
      out.transposed.push_back(std::move(row));
      m.multiply_transpose(t, next);
      t.swap(next);
    }
    m.multiply(s, next);
    s.swap(next);
    std::vector<double> row;
    row.reserve(out.starts.size());
    for (std::uint32_t u : out.starts) row.push_back(s[u]);
    out.row_sums.push_back(std::move(row));
    const double sup = n == 0 ? 0.0 : *std::max_element(s.begin(), s.end());
    out.sup_row_sum.push_back(sup);
    out.growth.push_back(std::pow(sup, 1.0 / static_cast<double>(step)));
  }

  for (std::uint32_t a : options.diagonal) {
    if (a >= n) throw std::invalid_argument("walk profile: diagonal index out of range");
    std::vector<double> x(n, 0.0);
    x[a] = 1.0;
    std::vector<double> values;
    values.reserve(m_max);
    for (std::size_t step = 1; step <= m_max; ++step) {
      m.multiply_transpose(x, next);  // e_a^T M^step
      x.swap(next);
      values.push_back(x[a]);
    }
    out.diagonal.push_back(std::move(values));
  }
  return out;
}

}  // namespace hetperc
