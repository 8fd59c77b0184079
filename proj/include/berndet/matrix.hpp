// Dense matrices of exact rationals and the exact linear-algebra kernels:
// fraction-free Bareiss determinant (serial and OpenMP variants), cofactor
// determinant kept as an independent reference, Gaussian solve, Cramer.
#pragma once

#include <cstddef>
#include <vector>

#include "berndet/errors.hpp"
#include "berndet/rational.hpp"

namespace berndet {

class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), e_(rows * cols) {}

  static RationalMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& at(std::size_t i, std::size_t j);
  const Rational& at(std::size_t i, std::size_t j) const;

  RationalMatrix transpose() const;
  RationalMatrix with_column_replaced(std::size_t col, const std::vector<Rational>& column) const;
  void swap_rows(std::size_t i, std::size_t j);

  RationalMatrix operator*(const RationalMatrix& o) const;
  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> e_;  // row-major
};

enum class ExecMode { Auto, Serial, Parallel };

// Exact determinant: denominators cleared column-wise, fraction-free Bareiss
// over the integer matrix, denominator product divided back out.
Rational det(const RationalMatrix& m, ExecMode mode = ExecMode::Auto);

// Plain cofactor expansion. O(n!); reference implementation for small orders.
Rational det_cofactor(const RationalMatrix& m);

// Unique solution of m x = rhs; throws SingularMatrixError when det = 0.
std::vector<Rational> solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs);

// det of m with column col_index replaced by rhs (the Cramer numerator).
Rational cramer_column_replace(const RationalMatrix& m, std::size_t col_index,
                               const std::vector<Rational>& rhs);

}  // namespace berndet
