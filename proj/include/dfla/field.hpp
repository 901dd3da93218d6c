#pragma once

// Exact fields. A field is a small value object carrying the arithmetic for
// its Element type; generic code receives it explicitly and never consults
// global state. Three instances exist: the rationals, prime fields GF(p), and
// rational functions over either (see ratfunc.hpp).

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <string>
#include <string_view>

#include "dfla/error.hpp"
#include "dfla/text.hpp"

namespace dfla {

/// Commutative ring with decidable equality. Division-free algorithms
/// (Berkowitz, polynomial products) are written against this.
template <class R>
concept Ring = requires(const R& r, const typename R::Element& a, const typename R::Element& b) {
  typename R::Element;
  { r.zero() } -> std::convertible_to<typename R::Element>;
  { r.one() } -> std::convertible_to<typename R::Element>;
  { r.add(a, b) } -> std::convertible_to<typename R::Element>;
  { r.sub(a, b) } -> std::convertible_to<typename R::Element>;
  { r.neg(a) } -> std::convertible_to<typename R::Element>;
  { r.mul(a, b) } -> std::convertible_to<typename R::Element>;
  { r.equal(a, b) } -> std::convertible_to<bool>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.to_string(a) } -> std::convertible_to<std::string>;
};

/// A ring whose inverse is total: inv(0) = 0, inv(a)*a = 1 otherwise.
template <class F>
concept Field = Ring<F> && requires(const F& f, const typename F::Element& a) {
  { f.inv(a) } -> std::convertible_to<typename F::Element>;
};

template <Ring R>
using ElementOf = typename R::Element;

/// Inverse that refuses zero, for callers that need true division.
template <Field F>
ElementOf<F> checked_inv(const F& f, const ElementOf<F>& a) {
  if (f.is_zero(a)) throw DivisionByZero();
  return f.inv(a);
}

template <Field F>
ElementOf<F> checked_div(const F& f, const ElementOf<F>& a, const ElementOf<F>& b) {
  return f.mul(a, checked_inv(f, b));
}

/// Boolean-to-field indicator: 1 for true, 0 for false.
template <Ring R>
ElementOf<R> indicator(const R& r, bool b) {
  return b ? r.one() : r.zero();
}

/// Image of an integer under the canonical map Z -> R, built by doubling and
/// adding 1 so that it respects the characteristic of any ring instance.
template <Ring R>
ElementOf<R> embed_integer(const R& r, long long n) {
  bool negative = n < 0;
  unsigned long long m = negative ? 0ULL - static_cast<unsigned long long>(n)
                                  : static_cast<unsigned long long>(n);
  ElementOf<R> acc = r.zero();
  ElementOf<R> power = r.one();
  while (m != 0) {
    if (m & 1ULL) acc = r.add(acc, power);
    power = r.add(power, power);
    m >>= 1;
  }
  return negative ? r.neg(acc) : acc;
}

template <Ring R>
ElementOf<R> power(const R& r, ElementOf<R> base, unsigned long long e) {
  ElementOf<R> acc = r.one();
  while (e != 0) {
    if (e & 1ULL) acc = r.mul(acc, base);
    e >>= 1;
    if (e != 0) base = r.mul(base, base);
  }
  return acc;
}

// ---------------------------------------------------------------------------
// Rationals

using Rational = mpq_class;

/// Q with arbitrary-precision numerator and denominator. GMP keeps every
/// value canonical: denominator positive, gcd(|num|, den) = 1.
class RationalField {
 public:
  using Element = Rational;

  Element zero() const { return Element(0); }
  Element one() const { return Element(1); }
  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) return Element(0);
    return Element(1) / a;
  }
  bool equal(const Element& a, const Element& b) const { return a == b; }
  bool is_zero(const Element& a) const { return sgn(a) == 0; }
  Element from_int(long long n) const { return Element(mpz_class(std::to_string(n))); }

  /// Builds num/den in canonical form.
  Element make(const mpz_class& num, const mpz_class& den) const {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Element q(num, den);
    q.canonicalize();
    return q;
  }

  std::string to_string(const Element& a) const { return a.get_str(); }

  /// Accepts "a" or "a/b" with optional sign on a; b must be nonzero.
  Element parse(std::string_view s) const {
    s = text::strip_parens(s);
    auto slash = s.find('/');
    auto num = parse_integer(s.substr(0, slash));
    if (slash == std::string_view::npos) return Element(num);
    auto den = parse_integer(s.substr(slash + 1));
    if (den == 0) throw ParseError("zero denominator in '" + std::string(s) + "'");
    return make(num, den);
  }

  std::string name() const { return "Q"; }
  bool operator==(const RationalField&) const = default;

 private:
  static mpz_class parse_integer(std::string_view s) {
    std::string t(text::trim(s));
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start == t.size()) throw ParseError("expected an integer, got '" + t + "'");
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw ParseError("expected an integer, got '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    return mpz_class(t);
  }
};

// ---------------------------------------------------------------------------
// Prime fields

/// Residue in [0, p). The modulus lives in the owning PrimeField.
struct Residue {
  std::uint32_t value = 0;
  auto operator<=>(const Residue&) const = default;
};

bool is_prime(std::uint64_t p);

/// GF(p) for a prime p < 2^31.
class PrimeField {
 public:
  using Element = Residue;

  explicit PrimeField(std::uint32_t p) : p_(p) {
    if (p >= (1U << 31) || !is_prime(p)) throw InvalidInput("GF(p) needs a prime p < 2^31, got " + std::to_string(p));
  }

  std::uint32_t modulus() const { return p_; }

  Element zero() const { return {0}; }
  Element one() const { return {1}; }
  Element add(Element a, Element b) const {
    std::uint32_t s = a.value + b.value;
    return {s >= p_ ? s - p_ : s};
  }
  Element sub(Element a, Element b) const {
    return {a.value >= b.value ? a.value - b.value : a.value + p_ - b.value};
  }
  Element neg(Element a) const { return {a.value == 0 ? 0 : p_ - a.value}; }
  Element mul(Element a, Element b) const {
    return {static_cast<std::uint32_t>(static_cast<std::uint64_t>(a.value) * b.value % p_)};
  }
  /// Fermat inverse; total with inv(0) = 0.
  Element inv(Element a) const {
    if (a.value == 0) return {0};
    return power(*this, a, p_ - 2);
  }
  bool equal(Element a, Element b) const { return a.value == b.value; }
  bool is_zero(Element a) const { return a.value == 0; }
  Element from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return {static_cast<std::uint32_t>(r)};
  }

  std::string to_string(Element a) const { return std::to_string(a.value); }

  /// Decimal integer, reduced mod p.
  Element parse(std::string_view s) const {
    std::string t(text::strip_parens(s));
    std::size_t start = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (start == t.size()) throw ParseError("expected an integer residue, got '" + t + "'");
    for (std::size_t i = start; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') throw ParseError("expected an integer residue, got '" + t + "'");
    if (t[0] == '+') t.erase(0, 1);
    mpz_class z(t);
    mpz_class r;
    mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p_);
    return {static_cast<std::uint32_t>(r.get_ui())};
  }

  std::string name() const { return "GF" + std::to_string(p_); }
  bool operator==(const PrimeField&) const = default;

 private:
  std::uint32_t p_;
};

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

}  // namespace dfla
