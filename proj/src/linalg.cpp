#include "cyclorth/linalg.hpp"

namespace cyclorth {

IntMatrix rows_from_polys(const std::vector<IntPoly>& polys, std::size_t cols) {
  IntMatrix m(polys.size(), cols);
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (polys[i].size() > cols) throw std::invalid_argument("polynomial does not fit the row width");
    for (std::size_t j = 0; j < polys[i].size(); ++j) m(i, j) = polys[i].coeffs()[j];
  }
  return m;
}

EliminationResult bareiss(IntMatrix m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer previous = 1;
  Integer scratch;
  std::size_t pivot_row = 0;
  bool negate = false;

  for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
    std::size_t found = pivot_row;
    while (found < rows && m(found, col) == 0) ++found;
    if (found == rows) continue;
    if (found != pivot_row) {
      m.swap_rows(found, pivot_row);
      negate = !negate;
    }

    const Integer pivot = m(pivot_row, col);
    for (std::size_t i = pivot_row + 1; i < rows; ++i) {
      const Integer factor = m(i, col);
      for (std::size_t j = col + 1; j < cols; ++j) {
        // m(i,j) = (m(i,j) * pivot - factor * m(pivot_row,j)) / previous
        Integer& target = m(i, j);
        target *= pivot;
        mpz_submul(target.get_mpz_t(), factor.get_mpz_t(), m(pivot_row, j).get_mpz_t());
        mpz_divexact(target.get_mpz_t(), target.get_mpz_t(), previous.get_mpz_t());
      }
      m(i, col) = 0;
    }
    previous = pivot;
    ++pivot_row;
  }

  EliminationResult result;
  result.rank = pivot_row;
  if (rows == cols) {
    if (pivot_row == rows && rows > 0) {
      result.determinant = negate ? Integer(-previous) : previous;
    } else {
      result.determinant = rows == 0 ? 1 : 0;
    }
  }
  return result;
}

Integer determinant(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
  return bareiss(m).determinant;
}

std::size_t rank(const IntMatrix& m) { return bareiss(m).rank; }

std::vector<std::vector<Rational>> kernel_basis(const RatMatrix& input) {
  RatMatrix m = input;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t col = 0; col < cols && r < rows; ++col) {
    std::size_t found = r;
    while (found < rows && m(found, col) == 0) ++found;
    if (found == rows) continue;
    m.swap_rows(found, r);
    const Rational inv = 1 / m(r, col);
    for (std::size_t j = col; j < cols; ++j) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m(i, col) == 0) continue;
      const Rational factor = m(i, col);
      for (std::size_t j = col; j < cols; ++j) m(i, j) -= factor * m(r, j);
    }
    pivot_cols.push_back(col);
    ++r;
  }

  std::vector<bool> is_pivot(cols, false);
  for (auto c : pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rational>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> v(cols);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) v[pivot_cols[i]] = -m(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = m(i, j);
  }
  return out;
}

}  // namespace cyclorth
