#ifndef RANK2_MATRIX_HPP
#define RANK2_MATRIX_HPP

#include <cassert>
#include <initializer_list>
#include <utility>
#include <vector>

#include "rank2/scalar.hpp"

namespace rank2 {

/// Dense matrix over an exact field (Rational or QuadExt).  Row-major.
template <class K>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<K>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      assert(r.size() == cols_);
      for (const auto& x : r) data_.push_back(x);
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = K(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  K& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const K& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<K> row(std::size_t i) const {
    return std::vector<K>(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  }
  void set_row(std::size_t i, const std::vector<K>& v) {
    assert(v.size() == cols_);
    std::copy(v.begin(), v.end(), data_.begin() + i * cols_);
  }
  void append_row(const std::vector<K>& v) {
    assert(cols_ == 0 || v.size() == cols_);
    if (cols_ == 0) cols_ = v.size();
    data_.insert(data_.end(), v.begin(), v.end());
    ++rows_;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    assert(a.cols_ == b.rows_);
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const K& aik = a(i, k);
        if (is_zero(aik)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) {
          if (!is_zero(b(k, j))) c(i, j) += aik * b(k, j);
        }
      }
    return c;
  }
  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] += b.data_[i];
    return c;
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    assert(a.rows_ == b.rows_ && a.cols_ == b.cols_);
    Matrix c = a;
    for (std::size_t i = 0; i < c.data_.size(); ++i) c.data_[i] -= b.data_[i];
    return c;
  }
  friend Matrix operator*(const K& s, const Matrix& a) {
    Matrix c = a;
    for (auto& x : c.data_) x = s * x;
    return c;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  bool is_zero_matrix() const {
    for (const auto& x : data_)
      if (!is_zero(x)) return false;
    return true;
  }

  std::vector<K> apply(const std::vector<K>& v) const {  // matrix * column vector
    assert(v.size() == cols_);
    std::vector<K> out(rows_, K(0));
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) out[i] += (*this)(i, j) * v[j];
    return out;
  }
  std::vector<K> apply_left(const std::vector<K>& v) const {  // row vector * matrix
    assert(v.size() == rows_);
    std::vector<K> out(cols_, K(0));
    for (std::size_t i = 0; i < rows_; ++i) {
      if (is_zero(v[i])) continue;
      for (std::size_t j = 0; j < cols_; ++j)
        if (!is_zero((*this)(i, j))) out[j] += v[i] * (*this)(i, j);
    }
    return out;
  }

  /// In-place reduced row echelon form; returns pivot column indices.
  std::vector<std::size_t> rref_in_place();

  std::size_t rank() const;

  /// Basis of {x : M x^T = 0} as rows, in canonical (RREF-derived) form.
  Matrix right_kernel() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<K> data_;
};

template <class K>
std::vector<std::size_t> Matrix<K>::rref_in_place() {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t p = r;
    while (p < rows_ && is_zero((*this)(p, c))) ++p;
    if (p == rows_) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(p, j), (*this)(r, j));
    const K inv = K(1) / (*this)(r, c);
    for (std::size_t j = c; j < cols_; ++j) (*this)(r, j) = (*this)(r, j) * inv;
    for (std::size_t i = 0; i < rows_; ++i) {
      if (i == r || is_zero((*this)(i, c))) continue;
      const K f = (*this)(i, c);
      for (std::size_t j = c; j < cols_; ++j) (*this)(i, j) -= f * (*this)(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

template <class K>
std::size_t Matrix<K>::rank() const {
  Matrix m = *this;
  return m.rref_in_place().size();
}

template <class K>
Matrix<K> Matrix<K>::right_kernel() const {
  Matrix m = *this;
  const std::vector<std::size_t> piv = m.rref_in_place();
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t c : piv) is_pivot[c] = true;
  Matrix ker(cols_ - piv.size(), cols_);
  std::size_t kr = 0;
  for (std::size_t c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    ker(kr, c) = K(1);
    for (std::size_t i = 0; i < piv.size(); ++i) ker(kr, piv[i]) = -m(i, c);
    ++kr;
  }
  return ker;
}

using MatQ = Matrix<Rational>;
using VecQ = std::vector<Rational>;

/// Fraction-free (Bareiss) rank over the integers after clearing row
/// denominators.  Used as the independent rank route in soundness checks.
std::size_t bareiss_rank(const MatQ& m);

}  // namespace rank2

#endif
