#pragma once

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "lubanski/scalar.hpp"

namespace lubanski {

// Dense row-major matrix of Scalars. Values are immutable once built; every
// operation returns a fresh matrix.
class Matrix {
public:
  Matrix() = default;

  Matrix(std::size_t rows, std::size_t cols, std::vector<Scalar> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_)
      throw DimensionMismatch("entry count " + std::to_string(data_.size()) + " does not match " + shape_of(rows_, cols_));
  }

  Matrix(std::initializer_list<std::initializer_list<Scalar>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged initializer rows");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix zeros(std::size_t rows, std::size_t cols) { return Matrix(rows, cols, std::vector<Scalar>(rows * cols)); }

  static Matrix identity(std::size_t n) {
    return generate(n, n, [](std::size_t r, std::size_t c) { return Scalar(r == c ? 1 : 0); });
  }

  static Matrix generate(std::size_t rows, std::size_t cols, const std::function<Scalar(std::size_t, std::size_t)>& f) {
    std::vector<Scalar> d;
    d.reserve(rows * cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) d.push_back(f(r, c));
    return Matrix(rows, cols, std::move(d));
  }

  static Matrix column(std::vector<Scalar> entries) {
    std::size_t n = entries.size();
    return Matrix(n, 1, std::move(entries));
  }

  static Matrix diagonal(const std::vector<Scalar>& d) {
    return generate(d.size(), d.size(), [&](std::size_t r, std::size_t c) { return r == c ? d[r] : Scalar(0); });
  }

  static Matrix unit_vector(std::size_t n, std::size_t k) {
    return generate(n, 1, [&](std::size_t r, std::size_t) { return Scalar(r == k ? 1 : 0); });
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }
  const std::vector<Scalar>& entries() const { return data_; }

  const Scalar& operator()(std::size_t r, std::size_t c) const {
    if (r >= rows_ || c >= cols_)
      throw DomainError("index (" + std::to_string(r) + "," + std::to_string(c) + ") outside " + shape());
    return data_[r * cols_ + c];
  }

  std::string shape() const { return shape_of(rows_, cols_); }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  Matrix transpose() const {
    return generate(cols_, rows_, [&](std::size_t r, std::size_t c) { return at(c, r); });
  }
  Matrix conj() const {
    return generate(rows_, cols_, [&](std::size_t r, std::size_t c) { return at(r, c).conj(); });
  }
  Matrix conj_transpose() const {
    return generate(cols_, rows_, [&](std::size_t r, std::size_t c) { return at(c, r).conj(); });
  }

  Scalar trace() const {
    require_square("trace");
    Scalar t;
    for (std::size_t k = 0; k < rows_; ++k) t += at(k, k);
    return t;
  }

  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    if (r0 + nr > rows_ || c0 + nc > cols_)
      throw DimensionMismatch("block " + shape_of(nr, nc) + " at (" + std::to_string(r0) + "," + std::to_string(c0) +
                              ") exceeds " + shape());
    return generate(nr, nc, [&](std::size_t r, std::size_t c) { return at(r0 + r, c0 + c); });
  }

  Matrix col(std::size_t c) const { return block(0, c, rows_, 1); }
  Matrix row(std::size_t r) const { return block(r, 0, 1, cols_); }

  // Sum of |re| + |im| over all entries; an exact residual size.
  Rational l1_norm() const {
    Rational n = 0;
    for (const auto& x : data_) n += abs(x.re()) + abs(x.im());
    return n;
  }

  Matrix operator-() const {
    return generate(rows_, cols_, [&](std::size_t r, std::size_t c) { return -at(r, c); });
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "add");
    return generate(a.rows_, a.cols_, [&](std::size_t r, std::size_t c) { return a.at(r, c) + b.at(r, c); });
  }
  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    a.require_same_shape(b, "sub");
    return generate(a.rows_, a.cols_, [&](std::size_t r, std::size_t c) { return a.at(r, c) - b.at(r, c); });
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("mul: " + a.shape() + " times " + b.shape());
    std::vector<Scalar> d(a.rows_ * b.cols_);
    for (std::size_t r = 0; r < a.rows_; ++r)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const Scalar& x = a.at(r, k);
        if (x.is_zero()) continue;
        for (std::size_t c = 0; c < b.cols_; ++c) {
          const Scalar& y = b.at(k, c);
          if (!y.is_zero()) d[r * b.cols_ + c] += x * y;
        }
      }
    return Matrix(a.rows_, b.cols_, std::move(d));
  }
  friend Matrix operator*(const Scalar& s, const Matrix& m) {
    return generate(m.rows_, m.cols_, [&](std::size_t r, std::size_t c) { return s * m.at(r, c); });
  }
  friend Matrix operator*(const Matrix& m, const Scalar& s) { return s * m; }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  static std::string shape_of(std::size_t r, std::size_t c) { return std::to_string(r) + "x" + std::to_string(c); }

private:
  const Scalar& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  void require_same_shape(const Matrix& o, const char* op) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DimensionMismatch(std::string(op) + ": " + shape() + " vs " + o.shape());
  }
  void require_square(const char* op) const {
    if (rows_ != cols_) throw DimensionMismatch(std::string(op) + " needs a square matrix, got " + shape());
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

// (A kron B)[(i*rB + k), (j*cB + l)] = A[i,j] B[k,l].
inline Matrix kron(const Matrix& a, const Matrix& b) {
  return Matrix::generate(a.rows() * b.rows(), a.cols() * b.cols(), [&](std::size_t r, std::size_t c) {
    return a(r / b.rows(), c / b.cols()) * b(r % b.rows(), c % b.cols());
  });
}

inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }
inline Matrix anticommutator(const Matrix& a, const Matrix& b) { return a * b + b * a; }

inline Matrix vstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw DimensionMismatch("vstack of nothing");
  std::size_t cols = parts.front().cols();
  std::vector<Scalar> d;
  std::size_t rows = 0;
  for (const auto& p : parts) {
    if (p.cols() != cols) throw DimensionMismatch("vstack: " + p.shape() + " has " + std::to_string(p.cols()) +
                                                  " columns, expected " + std::to_string(cols));
    d.insert(d.end(), p.entries().begin(), p.entries().end());
    rows += p.rows();
  }
  return Matrix(rows, cols, std::move(d));
}

inline Matrix hstack(const std::vector<Matrix>& parts) {
  if (parts.empty()) throw DimensionMismatch("hstack of nothing");
  std::size_t rows = parts.front().rows();
  std::size_t cols = 0;
  for (const auto& p : parts) {
    if (p.rows() != rows) throw DimensionMismatch("hstack: " + p.shape() + " has " + std::to_string(p.rows()) +
                                                  " rows, expected " + std::to_string(rows));
    cols += p.cols();
  }
  return Matrix::generate(rows, cols, [&](std::size_t r, std::size_t c) -> Scalar {
    for (const auto& p : parts) {
      if (c < p.cols()) return p(r, c);
      c -= p.cols();
    }
    return Scalar();
  });
}

// Column-major vectorization: vec(A)[c*rows + r] = A[r,c]. vec(AXB) = (B^T kron A) vec(X).
inline Matrix vectorize(const Matrix& a) {
  return Matrix::generate(a.rows() * a.cols(), 1, [&](std::size_t k, std::size_t) { return a(k % a.rows(), k / a.rows()); });
}

inline Matrix unvectorize(const Matrix& v, std::size_t rows, std::size_t cols) {
  if (v.cols() != 1 || v.rows() != rows * cols)
    throw DimensionMismatch("unvectorize " + v.shape() + " into " + Matrix::shape_of(rows, cols));
  return Matrix::generate(rows, cols, [&](std::size_t r, std::size_t c) { return v(c * rows + r, 0); });
}

inline std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << "[";
  for (std::size_t r = 0; r < m.rows(); ++r) {
    os << (r ? "; " : "");
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? ", " : "") << m(r, c);
  }
  return os << "]";
}

} // namespace lubanski
