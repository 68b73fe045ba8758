#pragma once

#include <cstddef>
#include <vector>

namespace islog {

/// Dense row-major matrix; just enough for joints and payoff tables.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  /// Builds from nested rows; throws DimensionMismatch if ragged.
  static Matrix from_rows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  const double* row_ptr(std::size_t r) const { return data_.data() + r * cols_; }
  const std::vector<double>& data() const { return data_; }

  double sum() const;
  std::vector<double> row_sums() const;
  std::vector<double> col_sums() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

}  // namespace islog
