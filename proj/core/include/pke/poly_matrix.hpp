#pragma once

#include <cstddef>
#include <vector>

#include "pke/multipoly.hpp"

namespace pke {

/// Dense row-major matrix of polynomials sharing one variable count.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars);

  static PolyMatrix identity(std::size_t size, std::size_t nvars);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  MultiPoly& at(std::size_t row, std::size_t col);
  const MultiPoly& at(std::size_t row, std::size_t col) const;

  /// Replaces an entry; throws if the variable count differs.
  void set(std::size_t row, std::size_t col, MultiPoly value);

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::size_t nvars_;
  std::vector<MultiPoly> entries_;
};

}  // namespace pke
