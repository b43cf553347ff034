#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

namespace hetperc {

struct Triplet {
  std::uint32_t row;
  std::uint32_t col;
  double value;
};

/*
  Square non-negative matrix in compressed-row form.

  Column indices within a row are strictly increasing and explicit zeros
  are never stored. Products use a fixed summation order, so results do
  not depend on how callers schedule work.
*/
class SparseNonNegMatrix {
 public:
  SparseNonNegMatrix() = default;
  explicit SparseNonNegMatrix(std::size_t dimension);

  /// Duplicate (row, col) entries are summed; zeros are dropped; negative
  /// or non-finite values are rejected.
  static SparseNonNegMatrix from_triplets(std::size_t dimension, std::vector<Triplet> triplets);

  std::size_t dimension() const noexcept { return dimension_; }
  std::size_t nonzeros() const noexcept { return cols_.size(); }

  std::span<const std::size_t> row_offsets() const noexcept { return offsets_; }
  std::span<const std::uint32_t> col_indices() const noexcept { return cols_; }
  std::span<const double> values() const noexcept { return values_; }

  std::span<const std::uint32_t> row_cols(std::size_t r) const {
    return {cols_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
  }
  std::span<const double> row_values(std::size_t r) const {
    return {values_.data() + offsets_[r], offsets_[r + 1] - offsets_[r]};
  }

  /// Entry lookup by binary search within the row.
  double at(std::size_t row, std::size_t col) const;

  /// y = M x
  void multiply(std::span<const double> x, std::span<double> y) const;
  /// y = M^T x
  void multiply_transpose(std::span<const double> x, std::span<double> y) const;

  SparseNonNegMatrix transpose() const;
  /// M^T M, used for the spectral 2-norm.
  SparseNonNegMatrix gram() const;

  std::vector<double> row_sums() const;
  std::vector<double> column_sums() const;

  bool is_symmetric(double tol = 0.0) const;

  friend bool operator==(const SparseNonNegMatrix&, const SparseNonNegMatrix&) = default;

 private:
  std::size_t dimension_ = 0;
  std::vector<std::size_t> offsets_{0};
  std::vector<std::uint32_t> cols_;
  std::vector<double> values_;
};

}  // namespace hetperc
