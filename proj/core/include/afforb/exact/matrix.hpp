#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "afforb/error.hpp"
#include "afforb/exact/rational.hpp"

namespace afforb {

using IntVector = std::vector<BigInt>;
using RationalVector = std::vector<Rational>;

// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ == 0 ? 0 : rows.begin()->size();
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DimensionMismatch("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  // Builds a matrix whose rows (or columns) are the given vectors.
  static Matrix from_rows(std::span<const std::vector<T>> rows) {
    Matrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
      if (rows[i].size() != m.cols_) throw DimensionMismatch("rows of unequal length");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }
  static Matrix from_columns(std::span<const std::vector<T>> cols) {
    return from_rows(cols).transposed();
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }
  std::vector<T> column(std::size_t c) const {
    std::vector<T> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r) out[r] = (*this)(r, c);
    return out;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += a(i, k) * b(k, j);
      }
    return c;
  }

  friend std::vector<T> operator*(const Matrix& a, std::span<const T> v) {
    if (a.cols_ != v.size()) throw DimensionMismatch("matrix-vector shape mismatch");
    std::vector<T> out(a.rows_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t j = 0; j < a.cols_; ++j) out[i] += a(i, j) * v[j];
    return out;
  }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMatrix = Matrix<BigInt>;
using RationalMatrix = Matrix<Rational>;

RationalMatrix to_rational(const IntMatrix& m);
// Throws BadParameters when an entry is not an integer.
IntMatrix to_integer(const RationalMatrix& m);

BigInt det(const IntMatrix& m);
Rational det(const RationalMatrix& m);
bool is_unimodular(const IntMatrix& m);
std::size_t rank(const RationalMatrix& m);
inline std::size_t rank(const IntMatrix& m) { return rank(to_rational(m)); }

// Throws Singular.
RationalMatrix inverse(const RationalMatrix& m);
inline RationalMatrix inverse(const IntMatrix& m) { return inverse(to_rational(m)); }

// gcd of all t x t minors of an m x t matrix (t <= m); 0 when rank < t.
BigInt maximal_minor_gcd(const IntMatrix& m);

// m = U * D * V with U, V unimodular and D diagonal (d_i >= 0, d_i | d_{i+1}).
struct SmithForm {
  IntMatrix U;
  IntMatrix D;
  IntMatrix V;
};
SmithForm smith_normal_form(const IntMatrix& m);

// Row-style Hermite normal form: H = K * m with K unimodular, H in echelon
// form with positive pivots, entries above each pivot reduced into
// [0, pivot), and the rank() nonzero rows first.
struct HermiteForm {
  IntMatrix H;
  IntMatrix K;
  std::size_t rank = 0;
};
HermiteForm hermite_normal_form(const IntMatrix& m);

std::string to_string(const IntMatrix& m);

}  // namespace afforb
