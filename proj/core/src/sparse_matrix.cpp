#include "hetperc/sparse_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hetperc {

SparseNonNegMatrix::SparseNonNegMatrix(std::size_t dimension)
    : dimension_(dimension), offsets_(dimension + 1, 0) {}

SparseNonNegMatrix SparseNonNegMatrix::from_triplets(std::size_t dimension,
                                                     std::vector<Triplet> triplets) {
  for (const Triplet& t : triplets) {
    if (t.row >= dimension || t.col >= dimension) {
      throw std::invalid_argument("matrix entry (" + std::to_string(t.row) + "," +
                                  std::to_string(t.col) + ") outside dimension " +
                                  std::to_string(dimension));
    }
    if (!(t.value >= 0.0) || !std::isfinite(t.value)) {
      throw std::invalid_argument("matrix entry (" + std::to_string(t.row) + "," +
                                  std::to_string(t.col) + ") is negative or not finite");
    }
  }
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });

  SparseNonNegMatrix m(dimension);
  m.cols_.reserve(triplets.size());
  m.values_.reserve(triplets.size());
  std::size_t i = 0;
  while (i < triplets.size()) {
    const std::uint32_t r = triplets[i].row;
    const std::uint32_t c = triplets[i].col;
    double sum = 0.0;
    for (; i < triplets.size() && triplets[i].row == r && triplets[i].col == c; ++i) {
      sum += triplets[i].value;
    }
    if (sum == 0.0) continue;
    m.cols_.push_back(c);
    m.values_.push_back(sum);
    ++m.offsets_[r + 1];
  }
  for (std::size_t r = 0; r < dimension; ++r) m.offsets_[r + 1] += m.offsets_[r];
  return m;
}

double SparseNonNegMatrix::at(std::size_t row, std::size_t col) const {
  const auto cols = row_cols(row);
  const auto it = std::lower_bound(cols.begin(), cols.end(), col);
  if (it == cols.end() || *it != col) return 0.0;
  return values_[offsets_[row] + static_cast<std::size_t>(it - cols.begin())];
}

void SparseNonNegMatrix::multiply(std::span<const double> x, std::span<double> y) const {
  for (std::size_t r = 0; r < dimension_; ++r) {
    double sum = 0.0;
    for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) sum += values_[k] * x[cols_[k]];
    y[r] = sum;
  }
}

void SparseNonNegMatrix::multiply_transpose(std::span<const double> x, std::span<double> y) const {
  std::fill(y.begin(), y.end(), 0.0);
  for (std::size_t r = 0; r < dimension_; ++r) {
    const double xr = x[r];
    if (xr == 0.0) continue;
    for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) y[cols_[k]] += values_[k] * xr;
  }
}

SparseNonNegMatrix SparseNonNegMatrix::transpose() const {
  SparseNonNegMatrix t(dimension_);
  t.cols_.resize(cols_.size());
  t.values_.resize(values_.size());
  for (std::uint32_t c : cols_) ++t.offsets_[c + 1];
  for (std::size_t r = 0; r < dimension_; ++r) t.offsets_[r + 1] += t.offsets_[r];
  std::vector<std::size_t> fill(t.offsets_.begin(), t.offsets_.end() - 1);
  // Rows are visited in increasing order, so each transposed row comes out sorted.
  for (std::size_t r = 0; r < dimension_; ++r) {
    for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) {
      const std::size_t slot = fill[cols_[k]]++;
      t.cols_[slot] = static_cast<std::uint32_t>(r);
      t.values_[slot] = values_[k];
    }
  }
  return t;
}

SparseNonNegMatrix SparseNonNegMatrix::gram() const {
  // (M^T M)_{ij} = sum_k M_{ki} M_{kj}: accumulate outer products of rows.
  std::vector<Triplet> entries;
  for (std::size_t r = 0; r < dimension_; ++r) {
    for (std::size_t a = offsets_[r]; a < offsets_[r + 1]; ++a) {
      for (std::size_t b = offsets_[r]; b < offsets_[r + 1]; ++b) {
        entries.push_back({cols_[a], cols_[b], values_[a] * values_[b]});
      }
    }
  }
  return from_triplets(dimension_, std::move(entries));
}

std::vector<double> SparseNonNegMatrix::row_sums() const {
  std::vector<double> sums(dimension_, 0.0);
  for (std::size_t r = 0; r < dimension_; ++r) {
    for (std::size_t k = offsets_[r]; k < offsets_[r + 1]; ++k) sums[r] += values_[k];
  }
  return sums;
}

std::vector<double> SparseNonNegMatrix::column_sums() const {
  std::vector<double> sums(dimension_, 0.0);
  for (std::size_t k = 0; k < cols_.size(); ++k) sums[cols_[k]] += values_[k];
  return sums;
}

bool SparseNonNegMatrix::is_symmetric(double tol) const {
  const SparseNonNegMatrix t = transpose();
  if (t.cols_ != cols_ || t.offsets_ != offsets_) return false;
  for (std::size_t k = 0; k < values_.size(); ++k) {
    if (std::abs(values_[k] - t.values_[k]) > tol) return false;
  }
  return true;
}

}  // namespace hetperc
