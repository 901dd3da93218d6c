#pragma once

// Univariate polynomials as coefficient vectors, constant term first:
// coeffs[k] is the coefficient of X^k. Values are kept trimmed (no trailing
// zeros) so structural equality coincides with padding-insensitive equality.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfla/error.hpp"
#include "dfla/field.hpp"
#include "dfla/matrix.hpp"
#include "dfla/text.hpp"

namespace dfla {

template <class E>
struct Polynomial {
  std::vector<E> coeffs;

  bool operator==(const Polynomial&) const = default;
};

/// Degree of the zero polynomial.
inline constexpr long kMinusInfinity = -1;

template <Ring R>
using PolyOf = Polynomial<ElementOf<R>>;

template <Ring R>
PolyOf<R> trimmed(const R& r, std::vector<ElementOf<R>> coeffs) {
  while (!coeffs.empty() && r.is_zero(coeffs.back())) coeffs.pop_back();
  return PolyOf<R>{std::move(coeffs)};
}

template <Ring R>
PolyOf<R> poly_zero(const R&) {
  return {};
}

template <Ring R>
PolyOf<R> poly_one(const R& r) {
  return PolyOf<R>{{r.one()}};
}

template <Ring R>
PolyOf<R> poly_constant(const R& r, const ElementOf<R>& c) {
  return trimmed(r, {c});
}

/// c * X^k.
template <Ring R>
PolyOf<R> poly_monomial(const R& r, const ElementOf<R>& c, std::size_t k) {
  if (r.is_zero(c)) return {};
  std::vector<ElementOf<R>> v(k + 1, r.zero());
  v[k] = c;
  return PolyOf<R>{std::move(v)};
}

/// The polynomial X.
template <Ring R>
PolyOf<R> poly_x(const R& r) {
  return poly_monomial(r, r.one(), 1);
}

/// Index of the last nonzero coefficient; kMinusInfinity for zero.
template <class E>
long degree(const Polynomial<E>& f) {
  return static_cast<long>(f.coeffs.size()) - 1;
}

template <class E>
bool is_zero(const Polynomial<E>& f) {
  return f.coeffs.empty();
}

/// coeff(f, k), zero beyond the stored range.
template <Ring R>
ElementOf<R> coeff(const R& r, const PolyOf<R>& f, std::size_t k) {
  return k < f.coeffs.size() ? f.coeffs[k] : r.zero();
}

template <Ring R>
PolyOf<R> poly_add(const R& r, const PolyOf<R>& f, const PolyOf<R>& g) {
  const auto& longer = f.coeffs.size() >= g.coeffs.size() ? f : g;
  const auto& shorter = f.coeffs.size() >= g.coeffs.size() ? g : f;
  std::vector<ElementOf<R>> out = longer.coeffs;
  for (std::size_t k = 0; k < shorter.coeffs.size(); ++k) out[k] = r.add(out[k], shorter.coeffs[k]);
  return trimmed(r, std::move(out));
}

template <Ring R>
PolyOf<R> poly_neg(const R& r, const PolyOf<R>& f) {
  std::vector<ElementOf<R>> out;
  out.reserve(f.coeffs.size());
  for (const auto& c : f.coeffs) out.push_back(r.neg(c));
  return PolyOf<R>{std::move(out)};
}

template <Ring R>
PolyOf<R> poly_sub(const R& r, const PolyOf<R>& f, const PolyOf<R>& g) {
  std::size_t n = std::max(f.coeffs.size(), g.coeffs.size());
  std::vector<ElementOf<R>> out(n, r.zero());
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) out[k] = f.coeffs[k];
  for (std::size_t k = 0; k < g.coeffs.size(); ++k) out[k] = r.sub(out[k], g.coeffs[k]);
  return trimmed(r, std::move(out));
}

template <Ring R>
PolyOf<R> poly_scale(const R& r, const ElementOf<R>& c, const PolyOf<R>& f) {
  if (r.is_zero(c)) return {};
  std::vector<ElementOf<R>> out;
  out.reserve(f.coeffs.size());
  for (const auto& a : f.coeffs) out.push_back(r.mul(c, a));
  return trimmed(r, std::move(out));
}

/// f * X^k.
template <Ring R>
PolyOf<R> poly_shift(const R& r, const PolyOf<R>& f, std::size_t k) {
  if (is_zero(f)) return {};
  std::vector<ElementOf<R>> out(k, r.zero());
  out.insert(out.end(), f.coeffs.begin(), f.coeffs.end());
  return PolyOf<R>{std::move(out)};
}

/// Product by the coefficient sum  coeff(fg, k) = sum_{j<=k} coeff(f, k-j) coeff(g, j).
/// Zero coefficients of f are skipped, so monomial factors cost O(deg g).
template <Ring R>
PolyOf<R> poly_mul_direct(const R& r, const PolyOf<R>& f, const PolyOf<R>& g) {
  if (is_zero(f) || is_zero(g)) return {};
  std::vector<ElementOf<R>> out(f.coeffs.size() + g.coeffs.size() - 1, r.zero());
  for (std::size_t i = 0; i < f.coeffs.size(); ++i) {
    if (r.is_zero(f.coeffs[i])) continue;
    for (std::size_t j = 0; j < g.coeffs.size(); ++j)
      out[i + j] = r.add(out[i + j], r.mul(f.coeffs[i], g.coeffs[j]));
  }
  return trimmed(r, std::move(out));
}

/// conv(f, l): the (len(f)+l) x (1+l) Toeplitz matrix whose first column is
/// f padded with zeros. Multiplying it by the coefficient column of a
/// degree-l polynomial g yields the coefficients of f*g.
template <Ring R>
Matrix<ElementOf<R>> conv_matrix(const R& r, const PolyOf<R>& f, std::size_t l) {
  std::size_t len = f.coeffs.size();
  Matrix<ElementOf<R>> t(len + l, 1 + l, r.zero());
  for (std::size_t i = 0; i < len + l; ++i)
    for (std::size_t j = 0; j <= l && j <= i; ++j)
      if (i - j < len) t(i, j) = f.coeffs[i - j];
  return t;
}

/// Product through the Toeplitz convolution matrix conv(f, deg g).
template <Ring R>
PolyOf<R> poly_mul_toeplitz(const R& r, const PolyOf<R>& f, const PolyOf<R>& g) {
  if (is_zero(f) || is_zero(g)) return {};
  auto t = conv_matrix(r, f, g.coeffs.size() - 1);
  std::vector<ElementOf<R>> out(t.rows(), r.zero());
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (!r.is_zero(t(i, j))) out[i] = r.add(out[i], r.mul(t(i, j), g.coeffs[j]));
  return trimmed(r, std::move(out));
}

/// Polynomial product. In checked builds (DFLA_CHECK_CONVOLUTION defined) the
/// direct sum is compared against the Toeplitz route on every call.
template <Ring R>
PolyOf<R> poly_mul(const R& r, const PolyOf<R>& f, const PolyOf<R>& g) {
  auto out = poly_mul_direct(r, f, g);
#ifdef DFLA_CHECK_CONVOLUTION
  if (!(out == poly_mul_toeplitz(r, f, g))) throw InternalError("convolution routes disagree");
#endif
  return out;
}

template <Ring R>
PolyOf<R> poly_pow(const R& r, PolyOf<R> f, unsigned long long k) {
  PolyOf<R> acc = poly_one(r);
  while (k != 0) {
    if (k & 1ULL) acc = poly_mul(r, acc, f);
    k >>= 1;
    if (k != 0) f = poly_mul(r, f, f);
  }
  return acc;
}

/// Horner evaluation at a point of the coefficient ring.
template <Ring R>
ElementOf<R> poly_eval(const R& r, const PolyOf<R>& f, const ElementOf<R>& x) {
  ElementOf<R> acc = r.zero();
  for (auto it = f.coeffs.rbegin(); it != f.coeffs.rend(); ++it) acc = r.add(r.mul(acc, x), *it);
  return acc;
}

/// f = X^m * g with g(0) != 0; returns (m, g).
template <Ring R>
std::pair<std::size_t, PolyOf<R>> split_zero_root(const R& r, const PolyOf<R>& f) {
  if (is_zero(f)) throw InvalidInput("cannot factor X^m out of the zero polynomial");
  std::size_t m = 0;
  while (r.is_zero(f.coeffs[m])) ++m;
  return {m, PolyOf<R>{std::vector<ElementOf<R>>(f.coeffs.begin() + static_cast<long>(m), f.coeffs.end())}};
}

/// Reverses a leading-first coefficient vector into a Polynomial.
template <Ring R>
PolyOf<R> from_leading_first(const R& r, std::span<const ElementOf<R>> leading_first) {
  return trimmed(r, std::vector<ElementOf<R>>(leading_first.rbegin(), leading_first.rend()));
}

/// Division with remainder by a polynomial with invertible leading coefficient.
template <Field F>
std::pair<PolyOf<F>, PolyOf<F>> poly_divmod(const F& f, const PolyOf<F>& a, const PolyOf<F>& b) {
  if (is_zero(b)) throw DivisionByZero("polynomial division by zero");
  if (a.coeffs.size() < b.coeffs.size()) return {{}, a};
  std::vector<ElementOf<F>> rem = a.coeffs;
  std::vector<ElementOf<F>> quo(a.coeffs.size() - b.coeffs.size() + 1, f.zero());
  ElementOf<F> lead_inv = f.inv(b.coeffs.back());
  std::size_t db = b.coeffs.size() - 1;
  for (std::size_t k = quo.size(); k-- > 0;) {
    ElementOf<F> c = f.mul(rem[k + db], lead_inv);
    quo[k] = c;
    if (f.is_zero(c)) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[k + j] = f.sub(rem[k + j], f.mul(c, b.coeffs[j]));
  }
  return {trimmed(f, std::move(quo)), trimmed(f, std::move(rem))};
}

/// Scales f to have leading coefficient 1 (zero stays zero).
template <Field F>
PolyOf<F> monic(const F& f, const PolyOf<F>& a) {
  if (is_zero(a)) return a;
  return poly_scale(f, f.inv(a.coeffs.back()), a);
}

/// Monic gcd by the Euclidean algorithm; gcd(0, 0) = 0. Remainders are made
/// monic as they appear, which keeps rational coefficients small.
template <Field F>
PolyOf<F> poly_gcd(const F& f, PolyOf<F> a, PolyOf<F> b) {
  if (is_zero(b)) return monic(f, a);
  if (is_zero(a)) return monic(f, b);
  if (degree(a) == 0 || degree(b) == 0) return poly_one(f);
  a = monic(f, a);
  b = monic(f, b);
  while (!is_zero(b)) {
    auto rem = monic(f, poly_divmod(f, a, b).second);
    a = std::move(b);
    b = std::move(rem);
  }
  return a;
}

/// Returns an index i with f(points[i]) != 0. Requires f nonzero of degree d
/// and exactly d+1 pairwise distinct points, in which case such an index
/// always exists.
template <Field F>
std::size_t distinct_point_witness(const F& f, const PolyOf<F>& poly, std::span<const ElementOf<F>> points) {
  if (is_zero(poly)) throw InvalidInput("distinct_point_witness needs a nonzero polynomial");
  if (points.size() != static_cast<std::size_t>(degree(poly)) + 1)
    throw InvalidInput("distinct_point_witness needs exactly deg(f)+1 points");
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (f.equal(points[i], points[j])) throw InvalidInput("distinct_point_witness points must be pairwise distinct");
  for (std::size_t i = 0; i < points.size(); ++i)
    if (!f.is_zero(poly_eval(f, poly, points[i]))) return i;
  throw InternalError("nonzero polynomial vanished on deg+1 distinct points");
}

// ---------------------------------------------------------------------------
// Text form: space-separated coefficients, constant term first. Zero is "0".

template <Ring R>
std::string poly_to_string(const R& r, const PolyOf<R>& f) {
  if (is_zero(f)) return "0";
  std::string out;
  for (std::size_t k = 0; k < f.coeffs.size(); ++k) {
    if (k) out += ' ';
    out += text::group(r.to_string(f.coeffs[k]));
  }
  return out;
}

template <Ring R>
PolyOf<R> poly_parse(const R& r, std::string_view s) {
  auto tokens = text::split_tokens(text::strip_parens(s));
  if (tokens.empty()) throw ParseError("empty polynomial");
  std::vector<ElementOf<R>> coeffs;
  coeffs.reserve(tokens.size());
  for (auto t : tokens) coeffs.push_back(r.parse(t));
  return trimmed(r, std::move(coeffs));
}

// ---------------------------------------------------------------------------

/// F[X] viewed as a ring, so division-free matrix algorithms run over
/// polynomial entries directly.
template <Ring R>
class PolynomialRing {
 public:
  using Element = PolyOf<R>;

  explicit PolynomialRing(R base) : base_(std::move(base)) {}
  const R& base() const { return base_; }

  Element zero() const { return {}; }
  Element one() const { return poly_one(base_); }
  Element add(const Element& a, const Element& b) const { return poly_add(base_, a, b); }
  Element sub(const Element& a, const Element& b) const { return poly_sub(base_, a, b); }
  Element neg(const Element& a) const { return poly_neg(base_, a); }
  Element mul(const Element& a, const Element& b) const { return poly_mul(base_, a, b); }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.coeffs.empty(); }
  Element from_int(long long n) const { return poly_constant(base_, embed_integer(base_, n)); }
  std::string to_string(const Element& a) const { return poly_to_string(base_, a); }
  Element parse(std::string_view s) const { return poly_parse(base_, s); }
  std::string name() const { return base_.name() + "[X]"; }

 private:
  R base_;
};

}  // namespace dfla
