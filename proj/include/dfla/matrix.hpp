#pragma once

// Dense matrices over a ring. Storage is row-major and 0-based internally;
// at(i, j) offers the 1-based view used by file formats and the CLI.
//
// Sum and product are strict by default. Padding::zero reproduces the
// padded semantics where mismatched operands are embedded into the larger
// shape with zeros in the new lower/right positions.

#include <algorithm>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "dfla/error.hpp"
#include "dfla/field.hpp"

namespace dfla {

template <class E>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const E& fill) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<E> data) : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw DimensionMismatch("matrix data size does not match its shape");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  E& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const E& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  /// 1-based checked access.
  const E& at(std::size_t i, std::size_t j) const {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
      throw IndexOutOfRange("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
    return (*this)(i - 1, j - 1);
  }

  std::span<const E> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  const std::vector<E>& data() const { return data_; }

  bool operator==(const Matrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<E> data_;
};

template <Ring R>
using MatrixOf = Matrix<ElementOf<R>>;

enum class Padding { strict, zero };

template <Ring R>
MatrixOf<R> zero_matrix(const R& r, std::size_t rows, std::size_t cols) {
  return MatrixOf<R>(rows, cols, r.zero());
}

template <Ring R>
MatrixOf<R> identity(const R& r, std::size_t n) {
  auto m = zero_matrix(r, n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = r.one();
  return m;
}

/// Builds a rows x cols matrix from a function of 0-based (i, j).
template <class E, class Fn>
Matrix<E> tabulate(std::size_t rows, std::size_t cols, Fn&& fn) {
  std::vector<E> data;
  data.reserve(rows * cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) data.push_back(fn(i, j));
  return Matrix<E>(rows, cols, std::move(data));
}

/// Applies fn to each entry, possibly changing the element type.
template <class E, class Fn>
auto map_entries(const Matrix<E>& a, Fn&& fn) {
  using Out = std::decay_t<decltype(fn(std::declval<const E&>()))>;
  std::vector<Out> data;
  data.reserve(a.data().size());
  for (const auto& x : a.data()) data.push_back(fn(x));
  return Matrix<Out>(a.rows(), a.cols(), std::move(data));
}

template <class E>
Matrix<E> transpose(const Matrix<E>& a) {
  return tabulate<E>(a.cols(), a.rows(), [&](std::size_t i, std::size_t j) { return a(j, i); });
}

/// Zero-pads a to rows x cols (rows >= a.rows(), cols >= a.cols()).
template <Ring R>
MatrixOf<R> pad(const R& r, const MatrixOf<R>& a, std::size_t rows, std::size_t cols) {
  return tabulate<ElementOf<R>>(rows, cols, [&](std::size_t i, std::size_t j) {
    return i < a.rows() && j < a.cols() ? a(i, j) : r.zero();
  });
}

template <Ring R>
MatrixOf<R> add(const R& r, const MatrixOf<R>& a, const MatrixOf<R>& b, Padding mode = Padding::strict) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    if (mode == Padding::strict) throw DimensionMismatch("matrix sum of mismatched shapes");
    std::size_t rows = std::max(a.rows(), b.rows());
    std::size_t cols = std::max(a.cols(), b.cols());
    return add(r, pad(r, a, rows, cols), pad(r, b, rows, cols));
  }
  std::vector<ElementOf<R>> data;
  data.reserve(a.data().size());
  for (std::size_t k = 0; k < a.data().size(); ++k) data.push_back(r.add(a.data()[k], b.data()[k]));
  return MatrixOf<R>(a.rows(), a.cols(), std::move(data));
}

template <Ring R>
MatrixOf<R> neg(const R& r, const MatrixOf<R>& a) {
  return map_entries(a, [&](const ElementOf<R>& x) { return r.neg(x); });
}

template <Ring R>
MatrixOf<R> sub(const R& r, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  return add(r, a, neg(r, b));
}

template <Ring R>
MatrixOf<R> scale(const R& r, const ElementOf<R>& c, const MatrixOf<R>& a) {
  return map_entries(a, [&](const ElementOf<R>& x) { return r.mul(c, x); });
}

template <Ring R>
MatrixOf<R> mul(const R& r, const MatrixOf<R>& a, const MatrixOf<R>& b, Padding mode = Padding::strict) {
  if (a.cols() != b.rows()) {
    if (mode == Padding::strict)
      throw DimensionMismatch("matrix product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                              " by " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    std::size_t inner = std::max(a.cols(), b.rows());
    return mul(r, pad(r, a, a.rows(), inner), pad(r, b, inner, b.cols()));
  }
  auto out = zero_matrix(r, a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const auto& aik = a(i, k);
      if (r.is_zero(aik)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = r.add(out(i, j), r.mul(aik, b(k, j)));
    }
  return out;
}

/// A * v for a column given as a plain vector.
template <Ring R>
std::vector<ElementOf<R>> apply(const R& r, const MatrixOf<R>& a, std::span<const ElementOf<R>> v) {
  if (a.cols() != v.size()) throw DimensionMismatch("matrix-vector product of mismatched shapes");
  std::vector<ElementOf<R>> out(a.rows(), r.zero());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (r.is_zero(a(i, k)) || r.is_zero(v[k])) continue;
      out[i] = r.add(out[i], r.mul(a(i, k), v[k]));
    }
  return out;
}

/// P(k, A) = A^k with A^0 = I.
template <Ring R>
MatrixOf<R> matrix_power(const R& r, const MatrixOf<R>& a, unsigned long long k) {
  if (!a.is_square()) throw NonSquare();
  auto acc = identity(r, a.rows());
  auto base = a;
  while (k != 0) {
    if (k & 1ULL) acc = mul(r, acc, base);
    k >>= 1;
    if (k != 0) base = mul(r, base, base);
  }
  return acc;
}

template <Ring R>
bool equal(const R& r, const MatrixOf<R>& a, const MatrixOf<R>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    if (!r.equal(a.data()[k], b.data()[k])) return false;
  return true;
}

template <Ring R>
bool is_zero_matrix(const R& r, const MatrixOf<R>& a) {
  return std::all_of(a.data().begin(), a.data().end(), [&](const ElementOf<R>& x) { return r.is_zero(x); });
}

template <Ring R>
bool is_zero_vector(const R& r, std::span<const ElementOf<R>> v) {
  return std::all_of(v.begin(), v.end(), [&](const ElementOf<R>& x) { return r.is_zero(x); });
}

/// Sum of all entries.
template <Ring R>
ElementOf<R> entry_sum(const R& r, const MatrixOf<R>& a) {
  ElementOf<R> acc = r.zero();
  for (const auto& x : a.data()) acc = r.add(acc, x);
  return acc;
}

template <class E>
std::vector<E> column(const Matrix<E>& a, std::size_t c) {
  std::vector<E> out;
  out.reserve(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) out.push_back(a(i, c));
  return out;
}

template <class E>
Matrix<E> column_matrix(std::vector<E> v) {
  std::size_t n = v.size();
  return Matrix<E>(n, 1, std::move(v));
}

/// Submatrix on 0-based row and column index lists, in the given order.
template <class E>
Matrix<E> select(const Matrix<E>& a, std::span<const std::size_t> rows, std::span<const std::size_t> cols) {
  return tabulate<E>(rows.size(), cols.size(), [&](std::size_t i, std::size_t j) { return a(rows[i], cols[j]); });
}

/// Columns [0, count) of a.
template <class E>
Matrix<E> leading_columns(const Matrix<E>& a, std::size_t count) {
  return tabulate<E>(a.rows(), count, [&](std::size_t i, std::size_t j) { return a(i, j); });
}

/// Horizontal concatenation [a | b].
template <class E>
Matrix<E> hstack(const Matrix<E>& a, const Matrix<E>& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("hstack of matrices with different row counts");
  return tabulate<E>(a.rows(), a.cols() + b.cols(),
                     [&](std::size_t i, std::size_t j) { return j < a.cols() ? a(i, j) : b(i, j - a.cols()); });
}

/// Vertical concatenation [a ; b].
template <class E>
Matrix<E> vstack(const Matrix<E>& a, const Matrix<E>& b) {
  if (a.cols() != b.cols()) throw DimensionMismatch("vstack of matrices with different column counts");
  return tabulate<E>(a.rows() + b.rows(), a.cols(),
                     [&](std::size_t i, std::size_t j) { return i < a.rows() ? a(i, j) : b(i - a.rows(), j); });
}

}  // namespace dfla
