#ifndef ZETAKIRCH_MATRIX_HPP
#define ZETAKIRCH_MATRIX_HPP

#include <vector>

#include "zetakirch/errors.hpp"
#include "zetakirch/poly.hpp"
#include "zetakirch/rational.hpp"

namespace zetakirch {

template <typename T>
class Matrix {
 public:
  Matrix() : rows_(0), cols_(0) {}
  Matrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols) {}
  Matrix(int rows, int cols, const T& fill)
      : rows_(rows), cols_(cols), data_(static_cast<size_t>(rows) * cols, fill) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  T& at(int i, int j) { return data_[static_cast<size_t>(i) * cols_ + j]; }
  const T& at(int i, int j) const { return data_[static_cast<size_t>(i) * cols_ + j]; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  int rows_, cols_;
  std::vector<T> data_;
};

inline bool elem_is_zero(const Rational& x) { return x.is_zero(); }
inline bool elem_is_zero(const BiPoly& x) { return x.is_zero(); }
inline Rational elem_exact_div(const Rational& a, const Rational& b) { return a / b; }
inline BiPoly elem_exact_div(const BiPoly& a, const BiPoly& b) { return poly_exact_div(a, b); }

/// Determinant by cofactor expansion along the first row.
template <typename T>
T det_cofactor(const Matrix<T>& m) {
  const int n = m.rows();
  if (n != m.cols() || n < 1) throw InternalError("det of non-square or empty matrix");
  if (n == 1) return m.at(0, 0);
  T acc{};
  for (int j = 0; j < n; ++j) {
    if (elem_is_zero(m.at(0, j))) continue;
    Matrix<T> sub(n - 1, n - 1);
    for (int i = 1; i < n; ++i) {
      int cc = 0;
      for (int c = 0; c < n; ++c) {
        if (c == j) continue;
        sub.at(i - 1, cc++) = m.at(i, c);
      }
    }
    T term = m.at(0, j) * det_cofactor(sub);
    if (j & 1) {
      acc -= term;
    } else {
      acc += term;
    }
  }
  return acc;
}

/// Fraction-free Bareiss elimination; every pivot division is exact in the
/// coefficient ring (Sylvester identity), so a remainder means a bug.
template <typename T>
T det_bareiss(Matrix<T> m) {
  const int n = m.rows();
  if (n != m.cols() || n < 1) throw InternalError("det of non-square or empty matrix");
  if (n == 1) return m.at(0, 0);
  bool negate = false;
  T prev = T(1);
  for (int k = 0; k + 1 < n; ++k) {
    int pivot = -1;
    for (int i = k; i < n; ++i) {
      if (!elem_is_zero(m.at(i, k))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return T{};  // a zero column in the remaining minor
    if (pivot != k) {
      for (int j = k; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
      negate = !negate;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) {
        T num = m.at(k, k) * m.at(i, j) - m.at(i, k) * m.at(k, j);
        try {
          m.at(i, j) = elem_exact_div(num, prev);
        } catch (const DivisibilityError&) {
          throw InternalError("Bareiss pivot division left a remainder");
        }
      }
      m.at(i, k) = T{};
    }
    prev = m.at(k, k);
  }
  T det = m.at(n - 1, n - 1);
  if (negate) det = -det;
  return det;
}

inline Rational rational_det(const Matrix<Rational>& m) { return det_bareiss(m); }

/// Exact determinant of a polynomial matrix. Cofactor expansion for side <= 3,
/// fraction-free Bareiss above that; large matrices with u-dependence are
/// evaluated at enough u points and interpolated back (still exact).
BiPoly polymatrix_det(const Matrix<BiPoly>& m);

/// The interpolating route, exposed so tests can cross-check it against the
/// direct elimination on the same matrix.
BiPoly polymatrix_det_interpolated(const Matrix<BiPoly>& m);

Matrix<BiPoly> to_poly_matrix(const Matrix<Rational>& m);

}  // namespace zetakirch

#endif
