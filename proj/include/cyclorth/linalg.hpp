#pragma once

// Small dense exact matrices: fraction-free (Bareiss) elimination over the
// integers for rank and determinant, rational row reduction for kernels.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "cyclorth/poly.hpp"

namespace cyclorth {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Row-major storage.
  [[nodiscard]] const std::vector<T>& data() const noexcept { return data_; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  [[nodiscard]] bool is_symmetric() const {
    if (rows_ != cols_) return false;
    for (std::size_t i = 0; i < rows_; ++i) {
      for (std::size_t j = i + 1; j < cols_; ++j) {
        if ((*this)(i, j) != (*this)(j, i)) return false;
      }
    }
    return true;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<Integer>;
using RatMatrix = Matrix<Rational>;

/// Builds a matrix whose rows are the coefficient vectors of `polys`, padded
/// with zeros to `cols` columns. Throws std::invalid_argument if a polynomial
/// does not fit.
[[nodiscard]] IntMatrix rows_from_polys(const std::vector<IntPoly>& polys, std::size_t cols);

struct EliminationResult {
  std::size_t rank = 0;
  /// For square input: the determinant (zero when singular).
  Integer determinant;
};

/// Fraction-free Gaussian elimination with row pivoting; every intermediate
/// division is exact over the integers.
[[nodiscard]] EliminationResult bareiss(IntMatrix m);

[[nodiscard]] Integer determinant(const IntMatrix& m);
[[nodiscard]] std::size_t rank(const IntMatrix& m);

/// Basis of { x : m x = 0 } from the reduced row echelon form over Q.
[[nodiscard]] std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& m);

[[nodiscard]] RatMatrix to_rational(const IntMatrix& m);

}  // namespace cyclorth
