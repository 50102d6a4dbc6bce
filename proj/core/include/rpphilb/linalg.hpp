#pragma once

// Exact linear algebra over the integers: fraction-free reduction, rank and primitive kernels.

#include <cstddef>
#include <vector>

#include "rpphilb/error.hpp"

namespace rpphilb {

using IntVector = std::vector<Integer>;

// Dense row-major integer matrix.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<Integer> data_;
};

// Reduced echelon form with integer entries: every pivot column is zero outside its pivot row,
// and every row is primitive with a positive pivot.
struct Echelon {
  IntMatrix matrix;
  std::vector<std::size_t> pivot_cols;  // one per nonzero row, increasing
  std::vector<std::size_t> free_cols;
};

Echelon echelon(const IntMatrix& m);
std::size_t rank(const IntMatrix& m);

// One primitive vector per free column, first nonzero entry positive.
std::vector<IntVector> kernel_basis(const IntMatrix& m);

Integer content(const IntVector& v);
// Divide by the content and make the first nonzero entry positive. Zero stays zero.
IntVector normalize(IntVector v);
IntVector multiply(const IntMatrix& m, const IntVector& v);
bool is_zero(const IntVector& v);

}  // namespace rpphilb
