#pragma once

// Substitution f(t) = sum_i coeff(f, i) t^i into a field element, a
// polynomial, or a square matrix. All three use Horner's scheme.

#include "dfla/error.hpp"
#include "dfla/matrix.hpp"
#include "dfla/poly.hpp"

namespace dfla {

template <Ring R>
ElementOf<R> subst(const R& r, const PolyOf<R>& f, const ElementOf<R>& a) {
  return poly_eval(r, f, a);
}

/// Composition f(g).
template <Ring R>
PolyOf<R> subst(const R& r, const PolyOf<R>& f, const PolyOf<R>& g) {
  PolyOf<R> acc;
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it)
    acc = poly_add(r, poly_mul(r, acc, g), poly_constant(r, *it));
  return acc;
}

/// f(A) with A^0 = I.
template <Ring R>
MatrixOf<R> subst(const R& r, const PolyOf<R>& f, const MatrixOf<R>& a) {
  if (!a.is_square()) throw NonSquare();
  std::size_t n = a.rows();
  auto acc = zero_matrix(r, n, n);
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    acc = mul(r, acc, a);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = r.add(acc(i, i), *it);
  }
  return acc;
}

/// f(A) v without forming f(A).
template <Ring R>
std::vector<ElementOf<R>> subst_apply(const R& r, const PolyOf<R>& f, const MatrixOf<R>& a,
                                      std::span<const ElementOf<R>> v) {
  if (!a.is_square()) throw NonSquare();
  std::vector<ElementOf<R>> acc(v.size(), r.zero());
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) {
    acc = apply(r, a, std::span<const ElementOf<R>>(acc));
    if (r.is_zero(*it)) continue;
    for (std::size_t i = 0; i < v.size(); ++i) acc[i] = r.add(acc[i], r.mul(*it, v[i]));
  }
  return acc;
}

}  // namespace dfla
