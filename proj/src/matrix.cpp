#include "berndet/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace berndet {

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
  return m;
}

Rational& RationalMatrix::at(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= cols_) throw std::invalid_argument("RationalMatrix: index out of range");
  return e_[i * cols_ + j];
}

const Rational& RationalMatrix::at(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) throw std::invalid_argument("RationalMatrix: index out of range");
  return e_[i * cols_ + j];
}

RationalMatrix RationalMatrix::transpose() const {
  RationalMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
  return t;
}

RationalMatrix RationalMatrix::with_column_replaced(std::size_t col,
                                                    const std::vector<Rational>& column) const {
  if (col >= cols_) throw std::invalid_argument("with_column_replaced: index out of range");
  if (column.size() != rows_)
    throw std::invalid_argument("with_column_replaced: column length mismatch");
  RationalMatrix m = *this;
  for (std::size_t i = 0; i < rows_; ++i) m.at(i, col) = column[i];
  return m;
}

void RationalMatrix::swap_rows(std::size_t i, std::size_t j) {
  if (i >= rows_ || j >= rows_) throw std::invalid_argument("swap_rows: index out of range");
  for (std::size_t c = 0; c < cols_; ++c) std::swap(e_[i * cols_ + c], e_[j * cols_ + c]);
}

RationalMatrix RationalMatrix::operator*(const RationalMatrix& o) const {
  if (cols_ != o.rows_) throw std::invalid_argument("matrix product: dimension mismatch");
  RationalMatrix p(rows_, o.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) p.at(i, j) += a * o.at(k, j);
    }
  return p;
}

namespace {

// Fraction-free Bareiss over an integer copy. `parallel` toggles the OpenMP
// row-update loop; both paths compute entry-for-entry identical values.
Rational det_bareiss(const RationalMatrix& m, bool parallel) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  std::vector<std::vector<Integer>> a(n, std::vector<Integer>(n));
  Integer scale(1);
  for (std::size_t j = 0; j < n; ++j) {
    Integer l(1);
    for (std::size_t i = 0; i < n; ++i)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m.at(i, j).denominator().get_mpz_t());
    for (std::size_t i = 0; i < n; ++i)
      a[i][j] = m.at(i, j).numerator() * (l / m.at(i, j).denominator());
    scale *= l;
  }

  int sign = 1;
  Integer prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a[pivot][k] == 0) ++pivot;
    if (pivot == n) return Rational(0);
    if (pivot != k) {
      std::swap(a[pivot], a[k]);
      sign = -sign;
    }
    const long nk = static_cast<long>(n);
#pragma omp parallel for schedule(static) if (parallel && n - k > 8)
    for (long i = static_cast<long>(k) + 1; i < nk; ++i) {
      for (long j = static_cast<long>(k) + 1; j < nk; ++j) {
        Integer t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }

  Integer d = a[n - 1][n - 1];
  if (sign < 0) d = -d;
  return Rational(d, scale);
}

Rational det_cofactor_rec(const RationalMatrix& m, std::vector<std::size_t>& rows,
                          std::vector<std::size_t>& cols) {
  const std::size_t n = rows.size();
  if (n == 1) return m.at(rows[0], cols[0]);
  Rational acc(0);
  std::size_t top = rows.front();
  std::vector<std::size_t> sub_rows(rows.begin() + 1, rows.end());
  for (std::size_t j = 0; j < n; ++j) {
    const Rational& e = m.at(top, cols[j]);
    if (e.is_zero()) continue;
    std::vector<std::size_t> sub_cols;
    sub_cols.reserve(n - 1);
    for (std::size_t t = 0; t < n; ++t)
      if (t != j) sub_cols.push_back(cols[t]);
    Rational minor = det_cofactor_rec(m, sub_rows, sub_cols);
    if (j % 2 == 0)
      acc += e * minor;
    else
      acc -= e * minor;
  }
  return acc;
}

}  // namespace

Rational det(const RationalMatrix& m, ExecMode mode) {
  if (!m.square()) throw std::invalid_argument("det: matrix is not square");
  bool parallel = mode == ExecMode::Parallel || (mode == ExecMode::Auto && m.rows() >= 24);
  return det_bareiss(m, parallel);
}

Rational det_cofactor(const RationalMatrix& m) {
  if (!m.square()) throw std::invalid_argument("det_cofactor: matrix is not square");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n > 10) throw std::invalid_argument("det_cofactor: order too large for O(n!) expansion");
  std::vector<std::size_t> rows(n), cols(n);
  for (std::size_t i = 0; i < n; ++i) rows[i] = cols[i] = i;
  return det_cofactor_rec(m, rows, cols);
}

std::vector<Rational> solve_linear(const RationalMatrix& m, const std::vector<Rational>& rhs) {
  if (!m.square()) throw std::invalid_argument("solve_linear: matrix is not square");
  const std::size_t n = m.rows();
  if (rhs.size() != n) throw std::invalid_argument("solve_linear: rhs length mismatch");

  RationalMatrix a = m;
  std::vector<Rational> b = rhs;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
    if (pivot == n)
      throw SingularMatrixError("solve_linear: determinant vanishes; system route unavailable");
    if (pivot != k) {
      a.swap_rows(pivot, k);
      std::swap(b[pivot], b[k]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a.at(i, k).is_zero()) continue;
      Rational f = a.at(i, k) / a.at(k, k);
      for (std::size_t j = k; j < n; ++j) a.at(i, j) -= f * a.at(k, j);
      b[i] -= f * b[k];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a.at(i, j) * x[j];
    x[i] = s / a.at(i, i);
  }
  return x;
}

Rational cramer_column_replace(const RationalMatrix& m, std::size_t col_index,
                               const std::vector<Rational>& rhs) {
  if (!m.square()) throw std::invalid_argument("cramer_column_replace: matrix is not square");
  return det(m.with_column_replaced(col_index, rhs));
}

}  // namespace berndet
