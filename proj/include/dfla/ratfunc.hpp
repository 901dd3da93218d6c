#pragma once

// The rational-function field F(X). Values are pairs (num, den) kept in
// canonical form: gcd(num, den) = 1, den monic, zero is (0, 1). Canonical
// equality therefore agrees with cross-multiplication num1*den2 = num2*den1.
//
// RationalFunctionField<F> satisfies Field, so every generic algorithm in the
// library (Berkowitz, rank, solvers) runs unchanged over F(X), and towers
// such as F(X)(Y) = RationalFunctionField<RationalFunctionField<F>> work too.

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfla/error.hpp"
#include "dfla/field.hpp"
#include "dfla/matrix.hpp"
#include "dfla/poly.hpp"
#include "dfla/polymatrix.hpp"
#include "dfla/text.hpp"

namespace dfla {

template <class E>
struct RationalFunction {
  Polynomial<E> num;
  Polynomial<E> den;

  bool operator==(const RationalFunction&) const = default;
};

template <Field F>
class RationalFunctionField {
 public:
  using Base = F;
  using Element = RationalFunction<ElementOf<F>>;
  using Poly = PolyOf<F>;

  explicit RationalFunctionField(F base) : base_(std::move(base)) {}
  const F& base() const { return base_; }

  Element zero() const { return {{}, poly_one(base_)}; }
  Element one() const { return {poly_one(base_), poly_one(base_)}; }

  /// (f, g) in canonical form. Throws DivisionByZero when g = 0.
  Element make(Poly num, Poly den) const {
    if (dfla::is_zero(den)) throw DivisionByZero("rational function with zero denominator");
    if (dfla::is_zero(num)) return zero();
    if (is_one(den)) return {std::move(num), std::move(den)};
    auto g = poly_gcd(base_, num, den);
    if (!is_one(g)) {
      num = poly_divmod(base_, num, g).first;
      den = poly_divmod(base_, den, g).first;
    }
    auto lead = den.coeffs.back();
    if (!base_.equal(lead, base_.one())) {
      auto s = base_.inv(lead);
      num = poly_scale(base_, s, num);
      den = poly_scale(base_, s, den);
    }
    return {std::move(num), std::move(den)};
  }

  /// f |-> (f, 1).
  Element from_poly(Poly f) const { return {std::move(f), poly_one(base_)}; }
  Element from_base(const ElementOf<F>& c) const { return from_poly(poly_constant(base_, c)); }
  Element x() const { return from_poly(poly_x(base_)); }

  /// (f1 g2 + f2 g1, g1 g2), reduced by gcds of the denominators first so
  /// that only the small factor gcd(g1, g2) is tested against the numerator.
  Element add(const Element& a, const Element& b) const {
    if (is_zero(a)) return b;
    if (is_zero(b)) return a;
    if (is_one(a.den) && is_one(b.den)) return from_poly(poly_add(base_, a.num, b.num));
    auto g = poly_gcd(base_, a.den, b.den);
    auto ga = exact_quotient(a.den, g), gb = exact_quotient(b.den, g);
    auto t = poly_add(base_, poly_mul(base_, a.num, gb), poly_mul(base_, b.num, ga));
    if (dfla::is_zero(t)) return zero();
    auto h = poly_gcd(base_, t, g);
    return {exact_quotient(t, h), poly_mul(base_, ga, exact_quotient(b.den, h))};
  }
  Element neg(const Element& a) const { return {poly_neg(base_, a.num), a.den}; }
  Element sub(const Element& a, const Element& b) const { return add(a, neg(b)); }

  /// (f1 f2, g1 g2) with the cross gcds cancelled beforehand.
  Element mul(const Element& a, const Element& b) const {
    if (is_zero(a) || is_zero(b)) return zero();
    if (is_one(a.den) && is_one(b.den)) return from_poly(poly_mul(base_, a.num, b.num));
    auto g1 = poly_gcd(base_, a.num, b.den), g2 = poly_gcd(base_, b.num, a.den);
    auto num = poly_mul(base_, exact_quotient(a.num, g1), exact_quotient(b.num, g2));
    auto den = poly_mul(base_, exact_quotient(a.den, g2), exact_quotient(b.den, g1));
    auto lead = den.coeffs.back();
    if (!base_.equal(lead, base_.one())) {
      auto s = base_.inv(lead);
      num = poly_scale(base_, s, num);
      den = poly_scale(base_, s, den);
    }
    return {std::move(num), std::move(den)};
  }

  /// (g, f) for f != 0 and (0, 1) for the zero element.
  Element inv(const Element& a) const {
    if (is_zero(a)) return zero();
    return make(a.den, a.num);
  }

  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return a.num.coeffs.empty(); }
  bool is_polynomial(const Element& a) const { return is_one(a.den); }
  Element from_int(long long n) const { return from_base(embed_integer(base_, n)); }

  /// Evaluation at a point of the base field where the denominator is nonzero.
  ElementOf<F> eval(const Element& a, const ElementOf<F>& t) const {
    auto d = poly_eval(base_, a.den, t);
    if (base_.is_zero(d)) throw DivisionByZero("rational function pole at evaluation point");
    return base_.mul(poly_eval(base_, a.num, t), base_.inv(d));
  }

  std::string to_string(const Element& a) const {
    if (is_one(a.den)) return poly_to_string(base_, a.num);
    return poly_to_string(base_, a.num) + " / " + poly_to_string(base_, a.den);
  }

  /// "num / den" with coefficient lists on each side; den may be omitted.
  Element parse(std::string_view s) const {
    auto tokens = text::split_tokens(text::strip_parens(s));
    std::size_t slash = tokens.size();
    for (std::size_t i = 0; i < tokens.size(); ++i)
      if (tokens[i] == "/") {
        if (slash != tokens.size()) throw ParseError("more than one '/' in rational function");
        slash = i;
      }
    auto side = [&](std::size_t from, std::size_t to) {
      if (from >= to) throw ParseError("missing polynomial in rational function");
      std::vector<ElementOf<F>> c;
      for (std::size_t i = from; i < to; ++i) c.push_back(base_.parse(tokens[i]));
      return trimmed(base_, std::move(c));
    };
    Poly num = side(0, slash);
    Poly den = slash == tokens.size() ? poly_one(base_) : side(slash + 1, tokens.size());
    if (dfla::is_zero(den)) throw ParseError("zero denominator in rational function");
    return make(std::move(num), std::move(den));
  }

  std::string name() const { return base_.name() + "(X)"; }

 private:
  Poly exact_quotient(const Poly& a, const Poly& d) const {
    if (is_one(d)) return a;
    return poly_divmod(base_, a, d).first;
  }

  bool is_one(const Poly& p) const { return p.coeffs.size() == 1 && base_.equal(p.coeffs[0], base_.one()); }

  F base_;
};

/// Cross-multiplication equality, independent of canonical form.
template <Field F>
bool cross_equal(const RationalFunctionField<F>& k, const ElementOf<RationalFunctionField<F>>& a,
                 const ElementOf<RationalFunctionField<F>>& b) {
  const auto& base = k.base();
  return poly_mul(base, a.num, b.den) == poly_mul(base, b.num, a.den);
}

/// X |-> Y: sends f(X)/g(X) in F(X) to f(Y)/g(Y) in F(X)(Y), whose
/// coefficients are constants of F(X).
template <Field F>
ElementOf<RationalFunctionField<RationalFunctionField<F>>> rename_to_outer(
    const RationalFunctionField<RationalFunctionField<F>>& tower, const ElementOf<RationalFunctionField<F>>& a) {
  const auto& inner = tower.base();
  auto lift = [&](const PolyOf<F>& p) {
    std::vector<ElementOf<RationalFunctionField<F>>> c;
    for (const auto& x : p.coeffs) c.push_back(inner.from_base(x));
    return trimmed(inner, std::move(c));
  };
  return tower.make(lift(a.num), lift(a.den));
}

/// Natural embedding F(X) -> F(X)(Y) as constants.
template <Field F>
ElementOf<RationalFunctionField<RationalFunctionField<F>>> embed_constant(
    const RationalFunctionField<RationalFunctionField<F>>& tower, const ElementOf<RationalFunctionField<F>>& a) {
  return tower.from_base(a);
}

// ---------------------------------------------------------------------------
// Common-denominator coding (g, A, d) of a matrix over F(X): it stands for
// (1/g) (A_0 + A_1 X + ... + A_d X^d).

template <class E>
struct RatMatrixCode {
  Polynomial<E> denominator;
  PolyMatrix<E> numerators;
};

/// g is the product of all entry denominators; entry (i,j) is num(M_ij)
/// times the product of every other entry's denominator.
template <Field F>
RatMatrixCode<ElementOf<F>> to_common_denominator(const RationalFunctionField<F>& k,
                                                  const MatrixOf<RationalFunctionField<F>>& m) {
  const auto& base = k.base();
  const std::size_t count = m.data().size();
  // prefix[i] * suffix[i+1] is the product of all denominators except entry i.
  std::vector<PolyOf<F>> prefix(count + 1, poly_one(base));
  std::vector<PolyOf<F>> suffix(count + 1, poly_one(base));
  for (std::size_t i = 0; i < count; ++i) prefix[i + 1] = poly_mul(base, prefix[i], m.data()[i].den);
  for (std::size_t i = count; i-- > 0;) suffix[i] = poly_mul(base, suffix[i + 1], m.data()[i].den);
  Matrix<PolyOf<F>> numerators(m.rows(), m.cols(), PolyOf<F>{});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) {
      std::size_t idx = i * m.cols() + j;
      numerators(i, j) = poly_mul(base, m.data()[idx].num, poly_mul(base, prefix[idx], suffix[idx + 1]));
    }
  return {prefix[count], from_entries(base, numerators)};
}

template <Field F>
MatrixOf<RationalFunctionField<F>> from_common_denominator(const RationalFunctionField<F>& k,
                                                           const RatMatrixCode<ElementOf<F>>& code) {
  auto entries = to_entries(k.base(), code.numerators);
  return map_entries(entries, [&](const PolyOf<F>& f) { return k.make(f, code.denominator); });
}

/// P_rat(k, g, A, d) = (g^k, P_pol(k, A, d)).
template <Field F>
RatMatrixCode<ElementOf<F>> rat_code_pow(const RationalFunctionField<F>& k, unsigned long long e,
                                         const RatMatrixCode<ElementOf<F>>& code) {
  return {poly_pow(k.base(), code.denominator, e), pm_pow(k.base(), e, code.numerators)};
}

}  // namespace dfla
