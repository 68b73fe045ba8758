#include "islog/matrix.hpp"

#include "islog/errors.hpp"

namespace islog {

Matrix Matrix::from_rows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) return Matrix();
  const std::size_t cols = rows.front().size();
  for (const auto& r : rows) {
    if (r.size() != cols) fail(Errc::DimensionMismatch, "matrix rows have unequal lengths");
  }
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = rows[r][c];
  return m;
}

double Matrix::sum() const {
  double s = 0.0;
  for (double v : data_) s += v;
  return s;
}

std::vector<double> Matrix::row_sums() const {
  std::vector<double> out(rows_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[r] += (*this)(r, c);
  return out;
}

std::vector<double> Matrix::col_sums() const {
  std::vector<double> out(cols_, 0.0);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out[c] += (*this)(r, c);
  return out;
}

}  // namespace islog
