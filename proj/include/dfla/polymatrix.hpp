#pragma once

// Matrices over F[X] in block coding: (A, d) stores A_0, ..., A_d with
// A~ = A_0 + A_1 X + ... + A_d X^d. Products run through the block-Toeplitz
// convolution matrix pconv, powers through iterated pconv products.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "dfla/error.hpp"
#include "dfla/field.hpp"
#include "dfla/matrix.hpp"
#include "dfla/poly.hpp"

namespace dfla {

template <class E>
struct PolyMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  /// Degree bound d; blocks.size() == d + 1.
  std::size_t degree = 0;
  std::vector<Matrix<E>> blocks;
};

template <Ring R>
using PolyMatrixOf = PolyMatrix<ElementOf<R>>;

/// mcoeff(A, k): coefficient block of X^k, zero beyond the bound.
template <Ring R>
MatrixOf<R> mcoeff(const R& r, const PolyMatrixOf<R>& a, std::size_t k) {
  if (k <= a.degree) return a.blocks[k];
  return zero_matrix(r, a.rows, a.cols);
}

template <Ring R>
PolyMatrixOf<R> pm_constant(const R&, const MatrixOf<R>& a) {
  return {a.rows(), a.cols(), 0, {a}};
}

template <Ring R>
PolyMatrixOf<R> pm_identity(const R& r, std::size_t n) {
  return pm_constant(r, identity(r, n));
}

/// Largest degree actually present among the entries (-1 for the zero matrix).
template <Ring R>
long pm_true_degree(const R& r, const PolyMatrixOf<R>& a) {
  for (std::size_t k = a.blocks.size(); k-- > 0;)
    if (!is_zero_matrix(r, a.blocks[k])) return static_cast<long>(k);
  return -1;
}

/// Pads or truncates the block list to bound d. Truncation requires the
/// dropped blocks to be zero.
template <Ring R>
PolyMatrixOf<R> pm_with_degree(const R& r, PolyMatrixOf<R> a, std::size_t d) {
  if (pm_true_degree(r, a) > static_cast<long>(d)) throw InvalidInput("degree bound below the true degree");
  a.blocks.resize(d + 1, zero_matrix(r, a.rows, a.cols));
  a.degree = d;
  return a;
}

/// The blocks stacked vertically: a ((d+1) rows) x cols matrix.
template <Ring R>
MatrixOf<R> stacked(const R& r, const PolyMatrixOf<R>& a) {
  auto out = zero_matrix(r, (a.degree + 1) * a.rows, a.cols);
  for (std::size_t k = 0; k <= a.degree; ++k)
    for (std::size_t i = 0; i < a.rows; ++i)
      for (std::size_t j = 0; j < a.cols; ++j) out(k * a.rows + i, j) = a.blocks[k](i, j);
  return out;
}

template <Ring R>
PolyMatrixOf<R> unstack(const MatrixOf<R>& s, std::size_t block_rows, std::size_t degree) {
  if (s.rows() != block_rows * (degree + 1)) throw DimensionMismatch("stacked matrix has the wrong height");
  PolyMatrixOf<R> out{block_rows, s.cols(), degree, {}};
  for (std::size_t k = 0; k <= degree; ++k)
    out.blocks.push_back(tabulate<ElementOf<R>>(block_rows, s.cols(),
                                                [&](std::size_t i, std::size_t j) { return s(k * block_rows + i, j); }));
  return out;
}

/// pconv(A, d, l): block-Toeplitz matrix of (d+1+l) x (1+l) blocks whose
/// first block column is A_0, ..., A_d followed by zero blocks. Applied to
/// the stacked coding of a degree-l matrix B it yields the stacked coding of
/// A~ * B~ at bound d+l.
template <Ring R>
MatrixOf<R> pconv(const R& r, const PolyMatrixOf<R>& a, std::size_t l) {
  std::size_t m = a.rows, n = a.cols, d = a.degree;
  auto out = zero_matrix(r, m * (d + 1 + l), n * (1 + l));
  for (std::size_t bi = 0; bi < d + 1 + l; ++bi)
    for (std::size_t bj = 0; bj <= l && bj <= bi; ++bj) {
      std::size_t k = bi - bj;
      if (k > d) continue;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < n; ++j) out(bi * m + i, bj * n + j) = a.blocks[k](i, j);
    }
  return out;
}

template <Ring R>
PolyMatrixOf<R> pm_add(const R& r, const PolyMatrixOf<R>& a, const PolyMatrixOf<R>& b) {
  if (a.rows != b.rows || a.cols != b.cols) throw DimensionMismatch("polynomial matrix sum of mismatched shapes");
  std::size_t d = std::max(a.degree, b.degree);
  PolyMatrixOf<R> out{a.rows, a.cols, d, {}};
  for (std::size_t k = 0; k <= d; ++k) out.blocks.push_back(add(r, mcoeff(r, a, k), mcoeff(r, b, k)));
  return out;
}

/// (A, d_A) * (B, d_B) at bound d_A + d_B via pconv(A, d_A, d_B).
template <Ring R>
PolyMatrixOf<R> pm_mul(const R& r, const PolyMatrixOf<R>& a, const PolyMatrixOf<R>& b) {
  if (a.cols != b.rows) throw DimensionMismatch("polynomial matrix product of mismatched shapes");
  auto product = mul(r, pconv(r, a, b.degree), stacked(r, b));
  return unstack<R>(product, a.rows, a.degree + b.degree);
}

/// P_pol(k, A, d) = (pconv(A,d,(k-1)d) ... pconv(A,d,d) pconv(A,d,0) I, kd).
template <Ring R>
PolyMatrixOf<R> pm_pow(const R& r, unsigned long long k, const PolyMatrixOf<R>& a) {
  if (a.rows != a.cols) throw NonSquare();
  auto acc = stacked(r, pm_identity(r, a.rows));
  for (unsigned long long step = 0; step < k; ++step) acc = mul(r, pconv(r, a, step * a.degree), acc);
  return unstack<R>(acc, a.rows, k * a.degree);
}

/// Generic view: an m x n matrix whose entries are Polynomial values.
template <Ring R>
Matrix<PolyOf<R>> to_entries(const R& r, const PolyMatrixOf<R>& a) {
  return tabulate<PolyOf<R>>(a.rows, a.cols, [&](std::size_t i, std::size_t j) {
    std::vector<ElementOf<R>> c;
    c.reserve(a.degree + 1);
    for (std::size_t k = 0; k <= a.degree; ++k) c.push_back(a.blocks[k](i, j));
    return trimmed(r, std::move(c));
  });
}

/// Block coding of a polynomial-entry matrix. Uses the smallest bound
/// unless `bound` is given, which must dominate every entry degree.
template <Ring R>
PolyMatrixOf<R> from_entries(const R& r, const Matrix<PolyOf<R>>& a, std::optional<std::size_t> bound = std::nullopt) {
  long top = 0;
  for (const auto& f : a.data()) top = std::max(top, degree(f));
  std::size_t d = bound.value_or(static_cast<std::size_t>(top));
  if (static_cast<long>(d) < top) throw InvalidInput("degree bound below an entry degree");
  PolyMatrixOf<R> out{a.rows(), a.cols(), d, {}};
  for (std::size_t k = 0; k <= d; ++k)
    out.blocks.push_back(tabulate<ElementOf<R>>(a.rows(), a.cols(),
                                                [&](std::size_t i, std::size_t j) { return coeff(r, a(i, j), k); }));
  return out;
}

/// Structural equality up to zero padding of the block lists.
template <Ring R>
bool pm_equal(const R& r, const PolyMatrixOf<R>& a, const PolyMatrixOf<R>& b) {
  if (a.rows != b.rows || a.cols != b.cols) return false;
  std::size_t d = std::max(a.degree, b.degree);
  for (std::size_t k = 0; k <= d; ++k)
    if (!equal(r, mcoeff(r, a, k), mcoeff(r, b, k))) return false;
  return true;
}

}  // namespace dfla
