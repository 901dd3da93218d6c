#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dfla/charpoly.hpp"
#include "dfla/poly.hpp"
#include "dfla/polymatrix.hpp"
#include "dfla/random.hpp"
#include "dfla/subst.hpp"

using namespace dfla;

namespace {

RationalField q;

PolyOf<RationalField> qpoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return trimmed(q, std::move(v));
}

MatrixOf<RationalField> qmat(std::size_t m, std::size_t n, std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return {m, n, std::move(v)};
}

}  // namespace

TEST_CASE("polynomial representation is trimmed and constant-first") {
  auto f = qpoly({1, 2, 0, 0});
  CHECK(f.coeffs.size() == 2);
  CHECK(degree(f) == 1);
  CHECK(degree(poly_zero(q)) == kMinusInfinity);
  CHECK(is_zero(qpoly({0, 0})));
  CHECK(coeff(q, f, 1) == 2);
  CHECK(coeff(q, f, 7) == 0);
  CHECK(poly_monomial(q, Rational(3), 2) == qpoly({0, 0, 3}));
  CHECK(poly_to_string(q, qpoly({1, 0, -1})) == "1 0 -1");
  CHECK(poly_parse(q, "1 0 -1") == qpoly({1, 0, -1}));
  CHECK(poly_to_string(q, poly_zero(q)) == "0");
  CHECK_THROWS_AS(poly_parse(q, ""), ParseError);
}

TEST_CASE("polynomial product examples") {
  CHECK(poly_mul(q, qpoly({1, 1}), qpoly({1, 1})) == qpoly({1, 2, 1}));
  CHECK(is_zero(poly_mul(q, poly_zero(q), qpoly({4, 5}))));
  SplitMix64 rng(3);
  for (int i = 0; i < 50; ++i) {
    auto f = random_poly(q, rng, 6);
    CHECK(poly_mul(q, f, poly_one(q)) == f);
  }
}

TEST_CASE("convolution identity and ring laws") {
  SplitMix64 rng(5);
  PrimeField gf7(7);
  for (int i = 0; i < 200; ++i) {
    auto f = random_poly(q, rng, 6), g = random_poly(q, rng, 6), h = random_poly(q, rng, 6);
    auto fg = poly_mul(q, f, g);
    for (std::size_t k = 0; k <= 13; ++k) {
      Rational s = 0;
      for (std::size_t j = 0; j <= k; ++j) s += coeff(q, f, k - j) * coeff(q, g, j);
      CHECK(coeff(q, fg, k) == s);
    }
    CHECK(fg == poly_mul(q, g, f));
    CHECK(fg == poly_mul_direct(q, f, g));
    CHECK(fg == poly_mul_toeplitz(q, f, g));
    CHECK(poly_mul(q, fg, h) == poly_mul(q, f, poly_mul(q, g, h)));
    CHECK(poly_mul(q, f, poly_add(q, g, h)) == poly_add(q, fg, poly_mul(q, f, h)));
    if (!is_zero(f) && !is_zero(g)) CHECK(degree(fg) == degree(f) + degree(g));
    CHECK(degree(poly_add(q, f, g)) <= std::max(degree(f), degree(g)));
    auto a = random_poly(gf7, rng, 6), b = random_poly(gf7, rng, 6);
    CHECK(poly_mul(gf7, a, b) == poly_mul_toeplitz(gf7, a, b));
  }
}

TEST_CASE("division, gcd and zero-root splitting") {
  auto f = poly_mul(q, qpoly({-1, 1}), qpoly({2, 0, 1}));
  auto [quo, rem] = poly_divmod(q, f, qpoly({-1, 1}));
  CHECK(quo == qpoly({2, 0, 1}));
  CHECK(is_zero(rem));
  CHECK(poly_gcd(q, f, poly_mul(q, qpoly({-1, 1}), qpoly({3, 1}))) == qpoly({-1, 1}));
  CHECK(poly_gcd(q, qpoly({2}), qpoly({0, 1})) == qpoly({1}));
  CHECK(is_zero(poly_gcd(q, poly_zero(q), poly_zero(q))));
  CHECK_THROWS_AS(poly_divmod(q, f, poly_zero(q)), DivisionByZero);
  auto [m, g] = split_zero_root(q, qpoly({0, 0, 3, 1}));
  CHECK(m == 2);
  CHECK(g == qpoly({3, 1}));
  std::vector<Rational> lf{Rational(1), Rational(-2), Rational(5)};
  CHECK(from_leading_first(q, std::span<const Rational>(lf)) == qpoly({5, -2, 1}));
}

TEST_CASE("substitution into elements, polynomials and matrices") {
  CHECK(subst(q, qpoly({-1, 0, 1}), Rational(3)) == 8);
  auto a = qmat(2, 2, {1, 2, 3, 4});
  CHECK(equal(q, subst(q, poly_one(q), a), identity(q, 2)));
  CHECK(equal(q, subst(q, poly_x(q), a), a));
  CHECK(subst(q, qpoly({1, 1}), qpoly({0, 2})) == qpoly({1, 2}));
  // Substitution is a ring homomorphism: (f g)(A) = f(A) g(A).
  SplitMix64 rng(9);
  for (int i = 0; i < 30; ++i) {
    auto f = random_poly(q, rng, 3), g = random_poly(q, rng, 3);
    auto m = random_matrix(q, rng, 3, 3);
    CHECK(equal(q, subst(q, poly_mul(q, f, g), m), mul(q, subst(q, f, m), subst(q, g, m))));
    CHECK(equal(q, subst(q, poly_add(q, f, g), m), add(q, subst(q, f, m), subst(q, g, m))));
    auto v = random_vector(q, rng, 3);
    CHECK(subst_apply(q, f, m, std::span<const Rational>(v)) == apply(q, subst(q, f, m), std::span<const Rational>(v)));
  }
}

TEST_CASE("distinct point witness") {
  std::vector<Rational> pts{Rational(0), Rational(1)};
  CHECK(distinct_point_witness(q, poly_x(q), std::span<const Rational>(pts)) == 1);
  std::vector<Rational> pts3{Rational(1), Rational(2), Rational(3)};
  auto f = poly_mul(q, qpoly({-1, 1}), qpoly({-2, 1}));
  CHECK(distinct_point_witness(q, f, std::span<const Rational>(pts3)) == 2);
  std::vector<Rational> pt0{Rational(0)};
  CHECK(distinct_point_witness(q, poly_one(q), std::span<const Rational>(pt0)) == 0);
  CHECK_THROWS_AS(distinct_point_witness(q, poly_zero(q), std::span<const Rational>(pt0)), InvalidInput);
  std::vector<Rational> repeated{Rational(1), Rational(1)};
  CHECK_THROWS_AS(distinct_point_witness(q, poly_x(q), std::span<const Rational>(repeated)), InvalidInput);
}

TEST_CASE("polynomial matrix examples") {
  PolynomialRing<RationalField> px(q);
  auto xm = from_entries(q, Matrix<PolyOf<RationalField>>(1, 1, poly_x(q)));
  auto sq = pm_mul(q, xm, xm);
  CHECK(sq.degree == 2);
  CHECK(to_entries(q, sq)(0, 0) == qpoly({0, 0, 1}));
  auto p2 = pm_pow(q, 2, xm);
  CHECK(p2.degree == 2);
  CHECK(pm_equal(q, p2, sq));
  auto p0 = pm_pow(q, 0, xm);
  CHECK(p0.degree == 0);
  CHECK(pm_equal(q, p0, pm_identity(q, 1)));

  SplitMix64 rng(21);
  auto b = from_entries(q, tabulate<PolyOf<RationalField>>(2, 3, [&](std::size_t, std::size_t) { return random_poly(q, rng, 2); }), 2);
  auto ib = pm_mul(q, pm_identity(q, 2), b);
  CHECK(ib.degree == b.degree);
  CHECK(pm_equal(q, ib, b));
  CHECK(equal(q, mcoeff(q, b, 9), zero_matrix(q, 2, 3)));
  CHECK_THROWS_AS(pm_with_degree(q, sq, 1), InvalidInput);
  CHECK(pm_with_degree(q, sq, 4).blocks.size() == 5);
}

TEST_CASE("polynomial matrix coding matches the generic path") {
  SplitMix64 rng(33);
  PolynomialRing<RationalField> px(q);
  for (int i = 0; i < 60; ++i) {
    std::size_t m = 1 + rng.below(4), n = 1 + rng.below(4), l = 1 + rng.below(4);
    std::size_t da = rng.below(4), db = rng.below(4);
    auto ea = tabulate<PolyOf<RationalField>>(m, n, [&](std::size_t, std::size_t) { return random_poly(q, rng, da); });
    auto eb = tabulate<PolyOf<RationalField>>(n, l, [&](std::size_t, std::size_t) { return random_poly(q, rng, db); });
    auto a = from_entries(q, ea, da), b = from_entries(q, eb, db);
    auto prod = pm_mul(q, a, b);
    CHECK(prod.degree == da + db);
    CHECK(pm_true_degree(q, prod) <= static_cast<long>(prod.degree));
    CHECK(to_entries(q, prod) == mul(px, ea, eb));
    auto sa = tabulate<PolyOf<RationalField>>(m, m, [&](std::size_t, std::size_t) { return random_poly(q, rng, da); });
    unsigned k = static_cast<unsigned>(rng.below(5));
    auto pp = pm_pow(q, k, from_entries(q, sa, da));
    CHECK(pp.degree == k * da);
    CHECK(to_entries(q, pp) == matrix_power(px, sa, k));
  }
}

TEST_CASE("matrix operations and padding") {
  auto a = qmat(2, 2, {1, 2, 3, 4});
  auto b = qmat(1, 3, {1, 1, 1});
  CHECK_THROWS_AS(add(q, a, b), DimensionMismatch);
  auto s = add(q, a, b, Padding::zero);
  CHECK(s.rows() == 2);
  CHECK(s.cols() == 3);
  CHECK(s.at(1, 3) == 1);
  CHECK(s.at(2, 3) == 0);
  CHECK_THROWS_AS(mul(q, a, b), DimensionMismatch);
  CHECK_THROWS_AS(a.at(3, 1), IndexOutOfRange);
  CHECK(equal(q, matrix_power(q, a, 0), identity(q, 2)));
  CHECK(equal(q, matrix_power(q, a, 2), qmat(2, 2, {7, 10, 15, 22})));
  CHECK(equal(q, transpose(b), qmat(3, 1, {1, 1, 1})));
  CHECK(entry_sum(q, a) == 10);
}

TEST_CASE("polynomial ring runs generic matrix algorithms") {
  PolynomialRing<RationalField> px(q);
  // det [[X, 1], [1, X]] = X^2 - 1
  Matrix<PolyOf<RationalField>> m(2, 2, poly_one(q));
  m(0, 0) = poly_x(q);
  m(1, 1) = poly_x(q);
  CHECK(det(px, m) == qpoly({-1, 0, 1}));
  CHECK(px.parse("0 1") == poly_x(q));
}
