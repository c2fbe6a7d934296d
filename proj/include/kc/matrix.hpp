#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kc/rational.hpp"

namespace kc {

// Ring hooks for the builtin coefficient types. Other coefficient types
// provide the same functions in namespace kc.
inline Int ring_one_like(const Int&) { return Int(1); }
inline Rat ring_one_like(const Rat&) { return Rat(1); }
inline LaurentPoly ring_one_like(const LaurentPoly&) { return LaurentPoly(1); }
inline RationalFunction ring_one_like(const RationalFunction&) { return RationalFunction(LaurentPoly(1)); }
inline Int ring_zero_like(const Int&) { return Int(0); }
inline Rat ring_zero_like(const Rat&) { return Rat(0); }
inline LaurentPoly ring_zero_like(const LaurentPoly&) { return LaurentPoly(); }
inline RationalFunction ring_zero_like(const RationalFunction&) { return RationalFunction(); }
inline bool ring_is_zero(const Int& a) { return a == 0; }
inline bool ring_is_zero(const Rat& a) { return a == 0; }
inline bool ring_is_zero(const LaurentPoly& a) { return a.is_zero(); }
inline bool ring_is_zero(const RationalFunction& a) { return a.is_zero(); }
inline Int ring_conj(const Int& a) { return a; }
inline Rat ring_conj(const Rat& a) { return a; }
inline LaurentPoly ring_conj(const LaurentPoly& a) { return a.involute(); }
inline RationalFunction ring_conj(const RationalFunction& a) { return a.involute(); }
inline std::string ring_str(const Int& a) { return a.get_str(); }
inline std::string ring_str(const Rat& a) { return a.get_str(); }
inline std::string ring_str(const LaurentPoly& a) { return a.str(); }
inline std::string ring_str(const RationalFunction& a) { return a.str(); }

// Dense matrix. Maps act on row vectors: a map A^m -> A^n is an m x n matrix
// and "f then g" has matrix M_f * M_g.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const R& zero)
      : rows_(rows), cols_(cols), zero_(ring_zero_like(zero)), a_(rows * cols, zero_) {}

  static Matrix identity(std::size_t n, const R& zero) {
    Matrix m(n, n, zero);
    const R one = ring_one_like(zero);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = one;
    return m;
  }
  static Matrix diagonal(const std::vector<R>& d, const R& zero) {
    Matrix m(d.size(), d.size(), zero);
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static Matrix row_vector(const std::vector<R>& v, const R& zero) {
    Matrix m(1, v.size(), zero);
    for (std::size_t j = 0; j < v.size(); ++j) m(0, j) = v[j];
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const R& zero() const { return zero_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  std::vector<R> row(std::size_t i) const {
    return std::vector<R>(a_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          a_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }

  bool is_zero() const {
    for (const auto& x : a_)
      if (!ring_is_zero(x)) return false;
    return true;
  }

  Matrix operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix product: shape mismatch");
    Matrix p(rows_, o.cols_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const R& x = (*this)(i, k);
        if (ring_is_zero(x)) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
          const R& y = o(k, j);
          if (ring_is_zero(y)) continue;
          p(i, j) += x * y;
        }
      }
    return p;
  }
  Matrix operator+(const Matrix& o) const {
    check_same(o);
    Matrix p = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) p.a_[i] += o.a_[i];
    return p;
  }
  Matrix operator-(const Matrix& o) const {
    check_same(o);
    Matrix p = *this;
    for (std::size_t i = 0; i < a_.size(); ++i) p.a_[i] -= o.a_[i];
    return p;
  }
  Matrix operator-() const {
    Matrix p = *this;
    for (auto& x : p.a_)
      if (!ring_is_zero(x)) x = -x;
    return p;
  }
  Matrix& operator+=(const Matrix& o) { return *this = *this + o; }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  // c * M entrywise (scalar on the left)
  Matrix scaled(const R& c) const {
    Matrix p = *this;
    for (auto& x : p.a_)
      if (!ring_is_zero(x)) x = c * x;
    return p;
  }
  Matrix signed_by(int s) const { return s >= 0 ? *this : -*this; }

  Matrix transpose() const {
    Matrix p(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) p(j, i) = (*this)(i, j);
    return p;
  }
  // Involution entrywise, then transpose: the matrix of the dual map.
  Matrix adjoint() const {
    Matrix p(cols_, rows_, zero_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) p(j, i) = ring_conj((*this)(i, j));
    return p;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix p(nr, nc, zero_);
    for (std::size_t i = 0; i < nr; ++i)
      for (std::size_t j = 0; j < nc; ++j) p(i, j) = (*this)(r0 + i, c0 + j);
    return p;
  }
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::invalid_argument("set_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) = b(i, j);
  }
  void add_block(std::size_t r0, std::size_t c0, const Matrix& b) {
    if (r0 + b.rows_ > rows_ || c0 + b.cols_ > cols_) throw std::invalid_argument("add_block out of range");
    for (std::size_t i = 0; i < b.rows_; ++i)
      for (std::size_t j = 0; j < b.cols_; ++j) (*this)(r0 + i, c0 + j) += b(i, j);
  }

  static Matrix hcat(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_) throw std::invalid_argument("hcat: row mismatch");
    Matrix p(a.rows_, a.cols_ + b.cols_, a.zero_);
    p.set_block(0, 0, a);
    p.set_block(0, a.cols_, b);
    return p;
  }
  static Matrix vcat(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.cols_) throw std::invalid_argument("vcat: column mismatch");
    Matrix p(a.rows_ + b.rows_, a.cols_, a.zero_);
    p.set_block(0, 0, a);
    p.set_block(a.rows_, 0, b);
    return p;
  }
  static Matrix direct_sum(const Matrix& a, const Matrix& b) {
    Matrix p(a.rows_ + b.rows_, a.cols_ + b.cols_, a.zero_);
    p.set_block(0, 0, a);
    p.set_block(a.rows_, a.cols_, b);
    return p;
  }

  void swap_rows(std::size_t i, std::size_t k) {
    if (i == k) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(i, j), (*this)(k, j));
  }
  void swap_cols(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, j), (*this)(i, k));
  }
  // row_i += c * row_k
  void add_row_multiple(std::size_t i, std::size_t k, const R& c) {
    if (ring_is_zero(c)) return;
    for (std::size_t j = 0; j < cols_; ++j)
      if (!ring_is_zero((*this)(k, j))) (*this)(i, j) += c * (*this)(k, j);
  }
  // col_j += col_k * c
  void add_col_multiple(std::size_t j, std::size_t k, const R& c) {
    if (ring_is_zero(c)) return;
    for (std::size_t i = 0; i < rows_; ++i)
      if (!ring_is_zero((*this)(i, k))) (*this)(i, j) += (*this)(i, k) * c;
  }
  void scale_row(std::size_t i, const R& c) {
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = c * (*this)(i, j);
  }
  void scale_col(std::size_t j, const R& c) {
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = (*this)(i, j) * c;
  }

  const std::vector<R>& data() const { return a_; }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  }
  std::size_t rows_ = 0, cols_ = 0;
  R zero_{};
  std::vector<R> a_;
};

template <class S, class R, class F>
Matrix<S> map_entries(const Matrix<R>& m, const S& zero, F f) {
  Matrix<S> out(m.rows(), m.cols(), zero);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!ring_is_zero(m(i, j))) out(i, j) = f(m(i, j));
  return out;
}

template <class R>
std::vector<R> vec_mat(const std::vector<R>& v, const Matrix<R>& m) {
  if (v.size() != m.rows()) throw std::invalid_argument("vector-matrix product: shape mismatch");
  std::vector<R> out(m.cols(), m.zero());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (ring_is_zero(v[i])) continue;
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (!ring_is_zero(m(i, j))) out[j] += v[i] * m(i, j);
  }
  return out;
}

template <class R>
bool vec_is_zero(const std::vector<R>& v) {
  for (const auto& x : v)
    if (!ring_is_zero(x)) return false;
  return true;
}

template <class R>
std::vector<R> vec_sub(std::vector<R> a, const std::vector<R>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class R>
std::vector<R> vec_add(std::vector<R> a, const std::vector<R>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class R>
std::vector<R> vec_scale(const R& c, std::vector<R> a) {
  for (auto& x : a)
    if (!ring_is_zero(x)) x = c * x;
  return a;
}

}  // namespace kc
