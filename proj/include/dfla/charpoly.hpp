#pragma once

// Berkowitz's division-free characteristic polynomial and what follows from
// it: determinant, adjugate, inverse, and the Cayley-Hamilton quasi-inverse.
//
// Col(k, A) is the (n-k+2) x (n-k+1) lower-triangular Toeplitz matrix whose
// first column is [1, -a_kk, -R_k S_k, -R_k M S_k, ..., -R_k M^{n-k-1} S_k],
// where M is the trailing principal submatrix below row/column k and R_k,
// S_k are its borders in A_k. ch(A) = Col(1, A) ... Col(n, A) is a
// leading-first vector [p_n, ..., p_0] with p_n = 1.
//
// Everything here needs only ring operations (except inverse), so it runs
// over polynomial entries as well as over fields.

#include <cstddef>
#include <span>
#include <vector>

#include "dfla/error.hpp"
#include "dfla/field.hpp"
#include "dfla/matrix.hpp"
#include "dfla/poly.hpp"
#include "dfla/subst.hpp"

namespace dfla {

/// First column of Col(k, A) for 1-based k; it determines the Toeplitz matrix.
template <Ring R>
std::vector<ElementOf<R>> berkowitz_first_column(const R& r, const MatrixOf<R>& a, std::size_t k) {
  if (!a.is_square()) throw NonSquare();
  const std::size_t n = a.rows();
  if (k < 1 || k > n) throw IndexOutOfRange("Berkowitz column index " + std::to_string(k) + " outside [1, " + std::to_string(n) + "]");
  const std::size_t top = k - 1;          // 0-based position of a_kk
  const std::size_t tail = n - k;         // size of the trailing block M
  std::vector<ElementOf<R>> col;
  col.reserve(tail + 2);
  col.push_back(r.one());
  col.push_back(r.neg(a(top, top)));
  // w runs through S, M S, M^2 S, ...; M is a(top+1.., top+1..).
  std::vector<ElementOf<R>> w(tail, r.zero());
  for (std::size_t i = 0; i < tail; ++i) w[i] = a(top + 1 + i, top);
  for (std::size_t p = 0; p < tail; ++p) {
    ElementOf<R> dot = r.zero();
    for (std::size_t j = 0; j < tail; ++j)
      if (!r.is_zero(w[j])) dot = r.add(dot, r.mul(a(top, top + 1 + j), w[j]));
    col.push_back(r.neg(dot));
    if (p + 1 == tail) break;
    std::vector<ElementOf<R>> next(tail, r.zero());
    for (std::size_t i = 0; i < tail; ++i)
      for (std::size_t j = 0; j < tail; ++j) {
        const auto& mij = a(top + 1 + i, top + 1 + j);
        if (r.is_zero(mij) || r.is_zero(w[j])) continue;
        next[i] = r.add(next[i], r.mul(mij, w[j]));
      }
    w = std::move(next);
  }
  return col;
}

/// Col(k, A) as an explicit (n-k+2) x (n-k+1) matrix.
template <Ring R>
MatrixOf<R> berkowitz_col(const R& r, const MatrixOf<R>& a, std::size_t k) {
  auto first = berkowitz_first_column(r, a, k);
  const std::size_t rows = first.size();
  return tabulate<ElementOf<R>>(rows, rows - 1,
                                [&](std::size_t i, std::size_t j) { return i >= j ? first[i - j] : r.zero(); });
}

/// ch(A) leading-first: [p_n, ..., p_0], p_n = 1. The column product is
/// evaluated right to left so each step is a Toeplitz matrix-vector product.
template <Ring R>
std::vector<ElementOf<R>> charpoly(const R& r, const MatrixOf<R>& a) {
  if (!a.is_square()) throw NonSquare();
  const std::size_t n = a.rows();
  std::vector<ElementOf<R>> v{r.one()};
  for (std::size_t k = n; k >= 1; --k) {
    auto t = berkowitz_first_column(r, a, k);
    std::vector<ElementOf<R>> next(v.size() + 1, r.zero());
    for (std::size_t i = 0; i < next.size(); ++i)
      for (std::size_t j = 0; j < v.size() && j <= i; ++j) {
        if (r.is_zero(t[i - j]) || r.is_zero(v[j])) continue;
        next[i] = r.add(next[i], r.mul(t[i - j], v[j]));
      }
    v = std::move(next);
  }
  return v;
}

/// ch(A) as a constant-first Polynomial. This is the single place where the
/// leading-first Berkowitz vector is reversed.
template <Ring R>
PolyOf<R> charpoly_polynomial(const R& r, const MatrixOf<R>& a) {
  auto lf = charpoly(r, a);
  return from_leading_first(r, std::span<const ElementOf<R>>(lf));
}

/// det(A) = (-1)^n p_0.
template <Ring R>
ElementOf<R> det(const R& r, const MatrixOf<R>& a) {
  auto lf = charpoly(r, a);
  const auto& p0 = lf.back();
  return a.rows() % 2 == 0 ? p0 : r.neg(p0);
}

/// Coefficients C_0, ..., C_{n-1} (constant first) of adj(Y I - A) as a
/// polynomial in Y: C_{n-1-i} = q_n A^i + q_{n-1} A^{i-1} + ... + q_{n-i} I
/// with ch(A) = sum q_j Y^j.
template <Ring R>
std::vector<MatrixOf<R>> adjugate_series(const R& r, const MatrixOf<R>& a) {
  if (!a.is_square()) throw NonSquare();
  const std::size_t n = a.rows();
  auto lf = charpoly(r, a);  // lf[t] = q_{n-t}
  std::vector<MatrixOf<R>> out(n);
  if (n == 0) return out;
  auto acc = identity(r, n);  // q_n I
  out[n - 1] = acc;
  for (std::size_t i = 1; i < n; ++i) {
    acc = mul(r, acc, a);
    for (std::size_t d = 0; d < n; ++d) acc(d, d) = r.add(acc(d, d), lf[i]);
    out[n - 1 - i] = acc;
  }
  return out;
}

/// adj(A) = (-1)^{n-1} C_0, since C_0 = adj(-A). Satisfies
/// A adj(A) = adj(A) A = det(A) I.
template <Ring R>
MatrixOf<R> adjugate(const R& r, const MatrixOf<R>& a) {
  if (!a.is_square()) throw NonSquare();
  if (a.rows() == 0) return a;
  auto c0 = adjugate_series(r, a).front();
  return a.rows() % 2 == 1 ? c0 : neg(r, c0);
}

template <Field F>
MatrixOf<F> inverse(const F& f, const MatrixOf<F>& a) {
  if (!a.is_square()) throw NonSquare();
  auto d = det(f, a);
  if (f.is_zero(d)) throw SingularMatrix();
  return scale(f, f.inv(d), adjugate(f, a));
}

/// A nonzero B with A B = det(A) I. For det(A) != 0 this is adj(A).
/// Otherwise ch(A) = Y^m g(Y) with g(0) != 0, and B = A^i g(A) for the least
/// i with A^{i+1} g(A) = 0.
template <Ring R>
MatrixOf<R> quasi_inverse(const R& r, const MatrixOf<R>& a) {
  if (!a.is_square()) throw NonSquare();
  if (a.rows() == 0) throw InvalidInput("quasi-inverse of an empty matrix");
  auto f = charpoly_polynomial(r, a);
  auto [m, g] = split_zero_root(r, f);
  if (m == 0) return adjugate(r, a);
  auto b = subst(r, g, a);
  for (std::size_t i = 0; i <= m; ++i) {
    auto next = mul(r, a, b);
    if (is_zero_matrix(r, next)) return b;
    b = std::move(next);
  }
  throw InternalError("A^m g(A) did not vanish; Cayley-Hamilton violated");
}

/// For n x (n+1) A, a nonzero b with A b = 0: border A with a zero first row,
/// take a column of its quasi-inverse.
template <Ring R>
std::vector<ElementOf<R>> dependent_vector(const R& r, const MatrixOf<R>& a) {
  if (a.cols() != a.rows() + 1) throw DimensionMismatch("dependent_vector needs an n x (n+1) matrix");
  auto c = vstack(zero_matrix(r, 1, a.cols()), a);
  auto b = quasi_inverse(r, c);
  for (std::size_t j = 0; j < b.cols(); ++j) {
    auto col = column(b, j);
    if (!is_zero_vector(r, std::span<const ElementOf<R>>(col))) return col;
  }
  throw InternalError("quasi-inverse is zero");
}

}  // namespace dfla
