#pragma once

#include <vector>

#include "fanostab/rational.hpp"

namespace fanostab {

// Small dense integer matrix, row-major. Used for basis transitions only, so
// sizes stay in the single digits and exact elimination is cheap.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols)
      : rows_(rows), cols_(cols), a_(static_cast<std::size_t>(rows) * cols, Integer(0)) {
    if (rows < 0 || cols < 0) throw input_error("negative matrix dimension");
  }

  static IntMatrix identity(int n) {
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1;
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Integer& at(int i, int j) { return a_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Integer& at(int i, int j) const {
    return a_[static_cast<std::size_t>(i) * cols_ + j];
  }

 private:
  int rows_, cols_;
  std::vector<Integer> a_;
};

// Bareiss fraction-free elimination: exact determinant without rationals.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw input_error("determinant of non-square matrix");
  const int n = m.rows();
  if (n == 0) return 1;
  Integer sign = 1, prev = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (m.at(k, k) == 0) {
      int pivot = -1;
      for (int i = k + 1; i < n; ++i)
        if (m.at(i, k) != 0) {
          pivot = i;
          break;
        }
      if (pivot < 0) return 0;
      for (int j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i)
      for (int j = k + 1; j < n; ++j)
        m.at(i, j) = (m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j)) / prev;
    prev = m.at(k, k);
  }
  return sign * m.at(n - 1, n - 1);
}

// Inverse of a unimodular matrix; integral by construction. Throws input_error
// when |det| != 1 (callers use this to reject non-lattice-isomorphisms).
inline IntMatrix inverse_unimodular(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw input_error("inverse of non-square matrix");
  const Integer det = determinant(m);
  if (det != 1 && det != -1)
    throw input_error("transition matrix is not unimodular (det = " + det.str() + ")");
  const int n = m.rows();
  // Gauss-Jordan over exact rationals on [m | I].
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) aug[i][j] = Rational(m.at(i, j));
    aug[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int i = col; i < n; ++i)
      if (aug[i][col] != 0) {
        pivot = i;
        break;
      }
    std::swap(aug[col], aug[pivot]);  // pivot exists: matrix is invertible
    const Rational p = aug[col][col];
    for (int j = 0; j < 2 * n; ++j) aug[col][j] /= p;
    for (int i = 0; i < n; ++i) {
      if (i == col || aug[i][col] == 0) continue;
      const Rational f = aug[i][col];
      for (int j = 0; j < 2 * n; ++j) aug[i][j] -= f * aug[col][j];
    }
  }
  IntMatrix inv(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv.at(i, j) = numerator(aug[i][n + j]);  // den == 1
  return inv;
}

inline std::vector<Integer> multiply(const IntMatrix& m, const std::vector<Integer>& v) {
  if (static_cast<int>(v.size()) != m.cols())
    throw input_error("matrix-vector dimension mismatch");
  std::vector<Integer> out(m.rows(), Integer(0));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) out[i] += m.at(i, j) * v[j];
  return out;
}

}  // namespace fanostab
