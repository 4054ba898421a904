#include "pke/poly_matrix.hpp"

#include <stdexcept>

namespace pke {

PolyMatrix::PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars)
    : rows_(rows), cols_(cols), nvars_(nvars), entries_(rows * cols, MultiPoly(nvars)) {
  if (rows == 0 || cols == 0) throw std::invalid_argument("PolyMatrix: empty shape");
}

PolyMatrix PolyMatrix::identity(std::size_t size, std::size_t nvars) {
  PolyMatrix m(size, size, nvars);
  for (std::size_t i = 0; i < size; ++i) m.at(i, i) = MultiPoly::constant(nvars, Rational(1));
  return m;
}

MultiPoly& PolyMatrix::at(std::size_t row, std::size_t col) {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("PolyMatrix index out of range");
  return entries_[row * cols_ + col];
}

const MultiPoly& PolyMatrix::at(std::size_t row, std::size_t col) const {
  if (row >= rows_ || col >= cols_) throw std::out_of_range("PolyMatrix index out of range");
  return entries_[row * cols_ + col];
}

void PolyMatrix::set(std::size_t row, std::size_t col, MultiPoly value) {
  if (value.nvars() != nvars_) throw std::invalid_argument("PolyMatrix::set: nvars mismatch");
  at(row, col) = std::move(value);
}

}  // namespace pke
