#ifndef DRINFELD_MATRIX_HPP
#define DRINFELD_MATRIX_HPP

// Dense matrices over a field T and exact elimination.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "unipoly.hpp"

namespace drinfeld {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(int rows, int cols, const T& zero = T()) : r_(rows), c_(cols), a_(static_cast<std::size_t>(rows) * cols, zero) {}

  static Matrix identity(int n, const T& one) {
    Matrix m(n, n, zero_like(one));
    for (int i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix from_columns(const std::vector<std::vector<T>>& cols, int rows) {
    Matrix m(rows, static_cast<int>(cols.size()));
    for (int j = 0; j < m.c_; ++j)
      for (int i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    return m;
  }

  int rows() const { return r_; }
  int cols() const { return c_; }
  T& operator()(int i, int j) { return a_[static_cast<std::size_t>(i) * c_ + j]; }
  const T& operator()(int i, int j) const { return a_[static_cast<std::size_t>(i) * c_ + j]; }

  std::vector<T> row(int i) const { return std::vector<T>(a_.begin() + static_cast<std::ptrdiff_t>(i) * c_, a_.begin() + static_cast<std::ptrdiff_t>(i + 1) * c_); }
  std::vector<T> column(int j) const {
    std::vector<T> v(r_);
    for (int i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
  }
  void set_column(int j, const std::vector<T>& v) {
    for (int i = 0; i < r_; ++i) (*this)(i, j) = v[i];
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    Matrix m(c_, r_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix m(a.r_, b.c_);
    for (int i = 0; i < a.r_; ++i)
      for (int l = 0; l < a.c_; ++l) {
        const T& x = a(i, l);
        if (x.is_zero()) continue;
        for (int j = 0; j < b.c_; ++j) {
          const T& y = b(l, j);
          if (!y.is_zero()) m(i, j) += x * y;
        }
      }
    return m;
  }
  friend std::vector<T> operator*(const Matrix& a, const std::vector<T>& v) {
    if (a.c_ != static_cast<int>(v.size())) throw std::invalid_argument("matrix-vector shape mismatch");
    std::vector<T> out(a.r_);
    for (int i = 0; i < a.r_; ++i)
      for (int j = 0; j < a.c_; ++j)
        if (!a(i, j).is_zero() && !v[j].is_zero()) out[i] += a(i, j) * v[j];
    return out;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] += b.a_[i];
    return m;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix m = a;
    for (std::size_t i = 0; i < m.a_.size(); ++i) m.a_[i] -= b.a_[i];
    return m;
  }
  friend Matrix operator*(const T& s, const Matrix& a) {
    Matrix m = a;
    for (auto& x : m.a_) x = s * x;
    return m;
  }
  Matrix operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_) x = -x;
    return m;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) return false;
    for (std::size_t i = 0; i < a.a_.size(); ++i)
      if (!(a.a_[i] == b.a_[i])) return false;
    return true;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  /// In-place reduced row echelon form; returns pivot columns.
  std::vector<int> rref_in_place() {
    std::vector<int> pivots;
    int row = 0;
    for (int col = 0; col < c_ && row < r_; ++col) {
      int p = -1;
      for (int i = row; i < r_; ++i)
        if (!(*this)(i, col).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      swap_rows(p, row);
      const T inv = one_like((*this)(row, col)) / (*this)(row, col);
      for (int j = col; j < c_; ++j) (*this)(row, j) = inv * (*this)(row, j);
      for (int i = 0; i < r_; ++i) {
        if (i == row || (*this)(i, col).is_zero()) continue;
        const T f = (*this)(i, col);
        for (int j = col; j < c_; ++j)
          if (!(*this)(row, j).is_zero()) (*this)(i, j) -= f * (*this)(row, j);
      }
      pivots.push_back(col);
      ++row;
    }
    return pivots;
  }

  int rank() const {
    Matrix m = *this;
    return static_cast<int>(m.rref_in_place().size());
  }

  /// Columns form a basis of the right kernel.
  Matrix kernel(const T& one) const {
    Matrix m = *this;
    const auto pivots = m.rref_in_place();
    std::vector<bool> is_pivot(c_, false);
    for (int p : pivots) is_pivot[p] = true;
    std::vector<std::vector<T>> basis;
    for (int f = 0; f < c_; ++f) {
      if (is_pivot[f]) continue;
      std::vector<T> v(c_, zero_like(one));
      v[f] = one;
      for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -m(static_cast<int>(i), f);
      basis.push_back(std::move(v));
    }
    return from_columns(basis, c_);
  }

  /// Columns form a basis of the column space (a subset of the columns).
  Matrix image() const {
    Matrix m = *this;
    const auto pivots = m.rref_in_place();
    std::vector<std::vector<T>> cols;
    for (int p : pivots) cols.push_back(column(p));
    return from_columns(cols, r_);
  }

  std::optional<Matrix> inverse(const T& one) const {
    if (r_ != c_) throw std::invalid_argument("inverse of non-square matrix");
    Matrix aug(r_, 2 * c_, zero_like(one));
    for (int i = 0; i < r_; ++i) {
      for (int j = 0; j < c_; ++j) aug(i, j) = (*this)(i, j);
      aug(i, c_ + i) = one;
    }
    const auto pivots = aug.rref_in_place();
    if (static_cast<int>(pivots.size()) < r_ || pivots[r_ - 1] >= c_) return std::nullopt;
    Matrix inv(r_, c_);
    for (int i = 0; i < r_; ++i)
      for (int j = 0; j < c_; ++j) inv(i, j) = aug(i, c_ + j);
    return inv;
  }

  /// Characteristic polynomial det(X - M) via reduction to Hessenberg form.
  UniPoly<T> charpoly(const T& one) const {
    if (r_ != c_) throw std::invalid_argument("charpoly of non-square matrix");
    const int n = r_;
    Matrix h = *this;
    for (int m = 1; m + 1 < n; ++m) {
      int p = -1;
      for (int i = m; i < n; ++i)
        if (!h(i, m - 1).is_zero()) {
          p = i;
          break;
        }
      if (p < 0) continue;
      if (p != m) {
        h.swap_rows(p, m);
        h.swap_cols(p, m);
      }
      const T inv = one / h(m, m - 1);
      for (int j = m + 1; j < n; ++j) {
        if (h(j, m - 1).is_zero()) continue;
        const T u = h(j, m - 1) * inv;
        for (int l = 0; l < n; ++l) h(j, l) -= u * h(m, l);
        for (int l = 0; l < n; ++l) h(l, m) += u * h(l, j);
      }
    }
    std::vector<UniPoly<T>> p(n + 1);
    p[0] = UniPoly<T>::constant(one);
    for (int m = 0; m < n; ++m) {
      p[m + 1] = UniPoly<T>::linear(h(m, m), one) * p[m];
      T prod = one;
      for (int i = m - 1; i >= 0; --i) {
        prod = prod * h(i + 1, i);
        if (prod.is_zero()) break;
        const T coef = h(i, m) * prod;
        if (!coef.is_zero()) p[m + 1] = p[m + 1] - coef * p[i];
      }
    }
    return p[n];
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < r_; ++i) {
      s += "[";
      for (int j = 0; j < c_; ++j) s += (j ? ", " : "") + (*this)(i, j).to_string();
      s += "]\n";
    }
    return s;
  }

  void swap_rows(int i, int j) {
    if (i == j) return;
    for (int l = 0; l < c_; ++l) std::swap((*this)(i, l), (*this)(j, l));
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int l = 0; l < r_; ++l) std::swap((*this)(l, i), (*this)(l, j));
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw std::invalid_argument("matrix shape mismatch");
  }

  int r_ = 0;
  int c_ = 0;
  std::vector<T> a_;
};

/// p(M) by Horner's rule.
template <class T>
Matrix<T> evalPoly(const UniPoly<T>& p, const Matrix<T>& m, const T& one) {
  const int n = m.rows();
  Matrix<T> r(n, n, zero_like(one));
  for (int i = p.degree(); i >= 0; --i) r = r * m + p.coeff(i) * Matrix<T>::identity(n, one);
  return r;
}

/// Row space kept in reduced echelon form, fed one row at a time.
template <class T>
class RowEchelon {
 public:
  explicit RowEchelon(int cols) : cols_(cols) {}

  /// Reduces v against the stored rows; stores it if independent.
  bool add(std::vector<T> v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const T& f = v[pivots_[r]];
      if (f.is_zero()) continue;
      const T factor = f;
      for (int j = 0; j < cols_; ++j)
        if (!rows_[r][j].is_zero()) v[j] -= factor * rows_[r][j];
    }
    int p = -1;
    for (int j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) {
        p = j;
        break;
      }
    if (p < 0) return false;
    const T inv = one_like(v[p]) / v[p];
    for (int j = 0; j < cols_; ++j)
      if (!v[j].is_zero()) v[j] = inv * v[j];
    for (auto& row : rows_) {
      if (row[p].is_zero()) continue;
      const T factor = row[p];
      for (int j = 0; j < cols_; ++j)
        if (!v[j].is_zero()) row[j] -= factor * v[j];
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  int cols() const { return cols_; }

  /// Basis of the orthogonal complement (right kernel), as columns.
  Matrix<T> kernel(const T& one) const {
    std::vector<int> pivot_row(cols_, -1);
    for (std::size_t r = 0; r < pivots_.size(); ++r) pivot_row[pivots_[r]] = static_cast<int>(r);
    std::vector<std::vector<T>> basis;
    for (int f = 0; f < cols_; ++f) {
      if (pivot_row[f] >= 0) continue;
      std::vector<T> v(cols_, zero_like(one));
      v[f] = one;
      for (std::size_t r = 0; r < rows_.size(); ++r) v[pivots_[r]] = -rows_[r][f];
      basis.push_back(std::move(v));
    }
    return Matrix<T>::from_columns(basis, cols_);
  }

 private:
  int cols_;
  std::vector<std::vector<T>> rows_;
  std::vector<int> pivots_;
};

}  // namespace drinfeld

#endif  // DRINFELD_MATRIX_HPP
