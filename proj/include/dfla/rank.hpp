#pragma once

// Mulmuley's rank algorithm and the constructions built on it.
//
// For A in F^{m x n}, polize(A) = chi_{m+n} symm(A) lives over F(X), where
// symm(A) = [[0, A], [A^t, 0]] and chi_N = diag(1, X, ..., X^{N-1}). If ch of
// polize(A) is Y^mul * p~(Y) with p~(0) != 0, then rank(A) = (m + n - mul) / 2.
// The same p~ decides solvability (p~(C) chi b~ = 0), produces solutions, and
// splits F(X)^{m+n} into ker C + im C. Greedy image bases, maximal nonsingular
// minors and kernel bases are then assembled from solvability tests.

#include <algorithm>
#include <cstddef>
#include <span>
#include <thread>
#include <utility>
#include <vector>

#include "dfla/charpoly.hpp"
#include "dfla/error.hpp"
#include "dfla/field.hpp"
#include "dfla/matrix.hpp"
#include "dfla/poly.hpp"
#include "dfla/ratfunc.hpp"
#include "dfla/subst.hpp"

namespace dfla {

// ---------------------------------------------------------------------------
// Index vectors and the counting gadget

/// The position (1-based) of the single 1 in an index vector.
template <Ring R>
std::size_t denoted_index(const R& r, std::span<const ElementOf<R>> v) {
  std::size_t found = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (r.is_zero(v[i])) continue;
    if (!r.equal(v[i], r.one()) || found != 0) throw InvalidInput("not an index vector");
    found = i + 1;
  }
  if (found == 0) throw InvalidInput("not an index vector");
  return found;
}

template <Ring R>
std::vector<ElementOf<R>> index_vector(const R& r, std::size_t length, std::size_t index) {
  if (index < 1 || index > length) throw IndexOutOfRange("index vector position out of range");
  std::vector<ElementOf<R>> v(length, r.zero());
  v[index - 1] = r.one();
  return v;
}

/// ct(v, k): index vector of length n+1 whose position minus one counts the
/// nonzero entries among v_1..v_k. Computed as T_k ... T_1 e_1 with the shift
/// S_{n+1} and T_j = (1 - chi(v_j)) I + chi(v_j) S, chi(a) = a a^{-1}.
template <Field F>
std::vector<ElementOf<F>> count_nonzero(const F& f, std::span<const ElementOf<F>> v, std::size_t k) {
  const std::size_t n = v.size();
  if (k > n) throw IndexOutOfRange("ct: k = " + std::to_string(k) + " exceeds vector length " + std::to_string(n));
  auto shift = zero_matrix(f, n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) shift(i + 1, i) = f.one();
  auto y = index_vector(f, n + 1, 1);
  for (std::size_t j = 0; j < k; ++j) {
    auto chi = f.mul(v[j], f.inv(v[j]));
    auto t = add(f, scale(f, f.sub(f.one(), chi), identity(f, n + 1)), scale(f, chi, shift));
    y = apply(f, t, std::span<const ElementOf<F>>(y));
  }
  return y;
}

/// Number of nonzero entries of v, read off ct(v, |v|).
template <Field F>
std::size_t count_nonzero_total(const F& f, std::span<const ElementOf<F>> v) {
  auto ct = count_nonzero(f, v, v.size());
  return denoted_index(f, std::span<const ElementOf<F>>(ct)) - 1;
}

// ---------------------------------------------------------------------------
// symm, chi, polize

template <Ring R>
MatrixOf<R> symm(const R& r, const MatrixOf<R>& a) {
  const std::size_t m = a.rows(), n = a.cols();
  return tabulate<ElementOf<R>>(m + n, m + n, [&](std::size_t i, std::size_t j) {
    if (i < m && j >= m) return a(i, j - m);
    if (j < m && i >= m) return a(j, i - m);
    return r.zero();
  });
}

/// chi(N) = diag(X^0, ..., X^{N-1}) over F(X).
template <Field F>
MatrixOf<RationalFunctionField<F>> chi(const RationalFunctionField<F>& k, std::size_t size) {
  auto out = zero_matrix(k, size, size);
  for (std::size_t i = 0; i < size; ++i) out(i, i) = k.from_poly(poly_monomial(k.base(), k.base().one(), i));
  return out;
}

/// chi_{m+n} symm(A): row i of symm(A) scaled by X^{i-1}.
template <Field F>
MatrixOf<RationalFunctionField<F>> polize(const RationalFunctionField<F>& k, const MatrixOf<F>& a) {
  auto s = symm(k.base(), a);
  return tabulate<ElementOf<RationalFunctionField<F>>>(s.rows(), s.cols(), [&](std::size_t i, std::size_t j) {
    return k.from_poly(poly_monomial(k.base(), s(i, j), i));
  });
}

/// chi_N v: entry i multiplied by X^{i-1}.
template <Field F>
std::vector<ElementOf<RationalFunctionField<F>>> chi_apply(const RationalFunctionField<F>& k,
                                                           std::span<const ElementOf<F>> v) {
  std::vector<ElementOf<RationalFunctionField<F>>> out;
  out.reserve(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out.push_back(k.from_poly(poly_monomial(k.base(), v[i], i)));
  return out;
}

// ---------------------------------------------------------------------------
// Mulmuley rank

template <Field F>
struct RankReport {
  std::size_t m = 0;
  std::size_t n = 0;
  /// ch(polize(A)) over F(X), constant term first.
  PolyOf<RationalFunctionField<F>> charpoly_of_polize;
  /// Multiplicity of the root 0 of that polynomial.
  std::size_t mul = 0;
  std::size_t rank = 0;
};

/// Everything the rank-based constructions share for one matrix.
template <Field F>
struct MulmuleyData {
  RationalFunctionField<F> field;
  MatrixOf<RationalFunctionField<F>> polized;
  PolyOf<RationalFunctionField<F>> charpoly;
  std::size_t mul = 0;
  /// p~ with ch = Y^mul p~(Y), p~(0) != 0.
  PolyOf<RationalFunctionField<F>> reduced;
};

template <Field F>
MulmuleyData<F> mulmuley_data(const F& f, const MatrixOf<F>& a) {
  RationalFunctionField<F> k(f);
  auto c = polize(k, a);
  auto ch = charpoly_polynomial(k, c);
  for (const auto& coef : ch.coeffs)
    if (!k.is_polynomial(coef)) throw InternalError("non-polynomial coefficient in ch(polize(A))");
  auto [mul, reduced] = split_zero_root(k, ch);
  return {k, std::move(c), std::move(ch), mul, std::move(reduced)};
}

template <Field F>
RankReport<F> mulmuley_rank(const F& f, const MatrixOf<F>& a) {
  auto data = mulmuley_data(f, a);
  const std::size_t total = a.rows() + a.cols();
  if (data.mul > total || (total - data.mul) % 2 != 0)
    throw InternalError("m + n - mul is negative or odd");
  RankReport<F> report{a.rows(), a.cols(), std::move(data.charpoly), data.mul, (total - data.mul) / 2};
  if (report.rank > std::min(a.rows(), a.cols())) throw InternalError("rank exceeds min(m, n)");
  return report;
}

template <Field F>
std::size_t rank(const F& f, const MatrixOf<F>& a) {
  return mulmuley_rank(f, a).rank;
}

// ---------------------------------------------------------------------------
// Decomposition F(X)^N = ker C + im C

template <class E>
struct Decomposition {
  std::vector<E> kernel_part;
  std::vector<E> image_part;
  /// R(C) v scaled by p~(0)^{-1}: image_part = C * image_preimage.
  std::vector<E> image_preimage;
};

/// v = u1 + u2 with u1 = p~(0)^{-1} p~(C) v in ker C and
/// u2 = p~(0)^{-1} (p~(0) - p~(C)) v = C (p~(0)^{-1} R(C) v) in im C, where
/// p~(0) - p~(Y) = Y R(Y). Meaningful for C = polize(A).
template <Field K>
Decomposition<ElementOf<K>> decompose(const K& k, const MatrixOf<K>& c, std::span<const ElementOf<K>> v) {
  if (!c.is_square()) throw InvalidInput("decompose needs a square matrix");
  if (c.rows() != v.size()) throw DimensionMismatch("decompose: vector length differs from matrix size");
  auto ch = charpoly_polynomial(k, c);
  auto [mul, reduced] = split_zero_root(k, ch);
  auto c0_inv = k.inv(reduced.coeffs.front());
  auto u1 = subst_apply(k, reduced, c, v);
  for (auto& x : u1) x = k.mul(c0_inv, x);
  std::vector<ElementOf<K>> u2(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) u2[i] = k.sub(v[i], u1[i]);
  std::vector<ElementOf<K>> r_coeffs;
  for (std::size_t i = 1; i < reduced.coeffs.size(); ++i) r_coeffs.push_back(k.neg(reduced.coeffs[i]));
  auto pre = subst_apply(k, trimmed(k, std::move(r_coeffs)), c, v);
  for (auto& x : pre) x = k.mul(c0_inv, x);
  return {std::move(u1), std::move(u2), std::move(pre)};
}

// ---------------------------------------------------------------------------
// Solvability and solutions

namespace detail {

template <Field F>
std::vector<ElementOf<RationalFunctionField<F>>> chi_b_tilde(const MulmuleyData<F>& data, const MatrixOf<F>& a,
                                                             std::span<const ElementOf<F>> b) {
  const auto& f = data.field.base();
  std::vector<ElementOf<F>> bt(a.rows() + a.cols(), f.zero());
  std::copy(b.begin(), b.end(), bt.begin());
  return chi_apply(data.field, std::span<const ElementOf<F>>(bt));
}

template <Field F>
bool solvable_with(const MulmuleyData<F>& data, const MatrixOf<F>& a, std::span<const ElementOf<F>> b) {
  auto w = chi_b_tilde(data, a, b);
  auto image = subst_apply(data.field, data.reduced, data.polized, std::span<const ElementOf<RationalFunctionField<F>>>(w));
  return is_zero_vector(data.field, std::span<const ElementOf<RationalFunctionField<F>>>(image));
}

}  // namespace detail

/// True iff A x = b has a solution, decided by p~_C(C) (chi b~) = 0 with
/// b~ = [b; 0] and C = polize(A).
template <Field F>
bool solvable(const F& f, const MatrixOf<F>& a, std::span<const ElementOf<F>> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solvable: right-hand side length differs from row count");
  return detail::solvable_with(mulmuley_data(f, a), a, b);
}

/// A solution of A x = b. With v = R(C) chi b~ one has symm(A) v = p~(0) b~
/// as polynomials in X. Taking the coefficient of X^e on both sides, e the
/// order of p~(0) at X = 0, gives symm(A) v_e = c_e b~ with c_e != 0; the
/// lower n entries of v_e / c_e solve the system. When p~(0)(0) != 0 this is
/// evaluation at X = 0.
template <Field F>
std::vector<ElementOf<F>> solve(const F& f, const MatrixOf<F>& a, std::span<const ElementOf<F>> b) {
  if (b.size() != a.rows()) throw DimensionMismatch("solve: right-hand side length differs from row count");
  auto data = mulmuley_data(f, a);
  if (!detail::solvable_with(data, a, b)) throw Unsolvable();
  const auto& k = data.field;
  std::vector<ElementOf<RationalFunctionField<F>>> r_coeffs;
  for (std::size_t i = 1; i < data.reduced.coeffs.size(); ++i) r_coeffs.push_back(k.neg(data.reduced.coeffs[i]));
  auto w = detail::chi_b_tilde(data, a, b);
  auto v = subst_apply(k, trimmed(k, std::move(r_coeffs)), data.polized,
                       std::span<const ElementOf<RationalFunctionField<F>>>(w));
  const auto& c0 = data.reduced.coeffs.front();
  if (!k.is_polynomial(c0)) throw InternalError("p~(0) is not a polynomial");
  auto [order, unit] = split_zero_root(f, c0.num);
  auto scale_by = f.inv(unit.coeffs.front());
  std::vector<ElementOf<F>> x;
  x.reserve(a.cols());
  for (std::size_t i = a.rows(); i < v.size(); ++i) {
    if (!k.is_polynomial(v[i])) throw InternalError("R(C) chi b~ has a non-polynomial entry");
    x.push_back(f.mul(coeff(f, v[i].num, order), scale_by));
  }
  auto check = apply(f, a, std::span<const ElementOf<F>>(x));
  for (std::size_t i = 0; i < b.size(); ++i)
    if (!f.equal(check[i], b[i])) throw InternalError("extracted solution does not satisfy A x = b");
  return x;
}

// ---------------------------------------------------------------------------
// Image basis, maximal nonsingular minor, kernel basis

template <class E>
struct BasisSelection {
  std::vector<bool> selected;
  /// A with unselected columns zeroed.
  Matrix<E> basis;
  std::size_t count = 0;
  /// basis * coeffs = A.
  Matrix<E> coeffs;
};

/// Runs fn(j) for j in [0, count) on up to `threads` workers. Results are
/// written by index, so the outcome does not depend on scheduling.
template <class Fn>
void for_each_index(std::size_t count, unsigned threads, Fn&& fn) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t j = 0; j < count; ++j) fn(j);
    return;
  }
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t)
    pool.emplace_back([&, t] {
      for (std::size_t j = t; j < count; j += threads) fn(j);
    });
}

/// Column j is selected iff it is not a combination of columns 1..j-1
/// (for j = 1: iff it is nonzero). Scan order is strictly left to right.
template <Field F>
BasisSelection<ElementOf<F>> greedy_basis(const F& f, const MatrixOf<F>& a, unsigned threads = 1) {
  const std::size_t n = a.cols();
  std::vector<char> selected(n, 0);
  std::vector<std::vector<ElementOf<F>>> b_cols(n);
  for_each_index(n, threads, [&](std::size_t j) {
    auto target = column(a, j);
    std::span<const ElementOf<F>> target_view(target);
    std::vector<ElementOf<F>> b(n, f.zero());
    if (j == 0) {
      selected[j] = !is_zero_vector(f, target_view);
    } else {
      auto prefix = leading_columns(a, j);
      auto data = mulmuley_data(f, prefix);
      selected[j] = !detail::solvable_with(data, prefix, target_view);
      if (!selected[j]) {
        auto x = solve(f, prefix, target_view);
        std::copy(x.begin(), x.end(), b.begin());
      }
    }
    if (selected[j]) b[j] = f.one();
    b_cols[j] = std::move(b);
  });

  BasisSelection<ElementOf<F>> out;
  out.selected.assign(selected.begin(), selected.end());
  std::vector<ElementOf<F>> indicator_vec;
  for (std::size_t j = 0; j < n; ++j) indicator_vec.push_back(indicator(f, out.selected[j]));
  out.count = count_nonzero_total(f, std::span<const ElementOf<F>>(indicator_vec));
  out.basis = tabulate<ElementOf<F>>(a.rows(), n, [&](std::size_t i, std::size_t j) {
    return out.selected[j] ? a(i, j) : f.zero();
  });
  auto step = tabulate<ElementOf<F>>(n, n, [&](std::size_t i, std::size_t j) { return b_cols[j][i]; });
  // basis * step^i agrees with A on columns 1..i, so step^n reconstructs A.
  out.coeffs = matrix_power(f, step, n);
  return out;
}

/// Row indices U and column indices V (1-based, increasing) of a maximal
/// nonsingular minor A[U:V].
struct MinorSelection {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
};

namespace detail {

/// Positions of the nonzero columns of basis(A), read through ct: the j-th
/// index is the least k with ct(w, k) = j.
template <Field F>
std::vector<std::size_t> selected_positions(const F& f, const std::vector<bool>& selected) {
  std::vector<ElementOf<F>> w;
  for (bool s : selected) w.push_back(indicator(f, s));
  std::vector<std::size_t> out;
  std::size_t previous = 0;
  for (std::size_t k = 1; k <= w.size(); ++k) {
    auto ct = count_nonzero(f, std::span<const ElementOf<F>>(w), k);
    std::size_t c = denoted_index(f, std::span<const ElementOf<F>>(ct)) - 1;
    if (c != previous) out.push_back(k);
    previous = c;
  }
  return out;
}

}  // namespace detail

/// The index matrix [e_{u_1}, ..., e_{u_s}] of size length x s.
template <Ring R>
MatrixOf<R> index_matrix(const R& r, std::size_t length, std::span<const std::size_t> indices) {
  auto out = zero_matrix(r, length, indices.size());
  for (std::size_t j = 0; j < indices.size(); ++j) out(indices[j] - 1, j) = r.one();
  return out;
}

/// A[U:V] = U^t A V.
template <Ring R>
MatrixOf<R> minor_matrix(const R& r, const MatrixOf<R>& a, const MinorSelection& sel) {
  auto u = index_matrix(r, a.rows(), std::span<const std::size_t>(sel.rows));
  auto v = index_matrix(r, a.cols(), std::span<const std::size_t>(sel.cols));
  return mul(r, mul(r, transpose(u), a), v);
}

/// U from the selected columns of basis(A^t), V from those of basis(A).
template <Field F>
MinorSelection max_nonsingular_minor(const F& f, const MatrixOf<F>& a, unsigned threads = 1) {
  auto by_cols = greedy_basis(f, a, threads);
  auto by_rows = greedy_basis(f, transpose(a), threads);
  MinorSelection sel{detail::selected_positions(f, by_rows.selected), detail::selected_positions(f, by_cols.selected)};
  if (sel.cols.empty()) throw ZeroMatrix();
  if (sel.rows.size() != sel.cols.size()) throw InternalError("row rank differs from column rank");
  if (f.is_zero(det(f, minor_matrix(f, a, sel)))) throw InternalError("selected minor is singular");
  return sel;
}

/// Basis of ker A as the columns of an n x (n - r) matrix. With M = A[U:V]
/// and a non-pivot column c, the column has M^{-1} A[U, c] on V and -1 at c.
template <Field F>
MatrixOf<F> kernel_basis(const F& f, const MatrixOf<F>& a, unsigned threads = 1) {
  const std::size_t n = a.cols();
  MinorSelection sel;
  if (!is_zero_matrix(f, a)) sel = max_nonsingular_minor(f, a, threads);
  std::vector<bool> pivot(n, false);
  for (auto v : sel.cols) pivot[v - 1] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0; j < n; ++j)
    if (!pivot[j]) free_cols.push_back(j);

  MatrixOf<F> m_inv;
  if (!sel.cols.empty()) m_inv = inverse(f, minor_matrix(f, a, sel));
  auto out = zero_matrix(f, n, free_cols.size());
  for (std::size_t t = 0; t < free_cols.size(); ++t) {
    const std::size_t c = free_cols[t];
    std::vector<ElementOf<F>> y;
    for (auto u : sel.rows) y.push_back(a(u - 1, c));
    if (!sel.cols.empty()) {
      auto top = apply(f, m_inv, std::span<const ElementOf<F>>(y));
      for (std::size_t i = 0; i < sel.cols.size(); ++i) out(sel.cols[i] - 1, t) = top[i];
    }
    out(c, t) = f.neg(f.one());
  }
  return out;
}

}  // namespace dfla
