#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dfla/charpoly.hpp"
#include "dfla/random.hpp"
#include "dfla/ratfunc.hpp"

using namespace dfla;

namespace {

RationalField q;
RationalFunctionField<RationalField> qx(q);
using RF = ElementOf<RationalFunctionField<RationalField>>;

PolyOf<RationalField> qpoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return trimmed(q, std::move(v));
}

RF rf(std::initializer_list<long> num, std::initializer_list<long> den) { return qx.make(qpoly(num), qpoly(den)); }

bool canonical(const RF& a) {
  if (is_zero(a.num)) return a.den == poly_one(q);
  return a.den.coeffs.back() == 1 && degree(poly_gcd(q, a.num, a.den)) == 0;
}

}  // namespace

TEST_CASE("rational function arithmetic examples") {
  CHECK(qx.add(rf({0, 1}, {1}), rf({1}, {0, 1})) == rf({1, 0, 1}, {0, 1}));
  CHECK(qx.inv(qx.x()) == rf({1}, {0, 1}));
  CHECK(qx.inv(qx.zero()) == qx.zero());
  SplitMix64 rng(4);
  for (int i = 0; i < 50; ++i) {
    auto a = random_element(qx, rng, {-3, 3, true, 3, true});
    CHECK(qx.mul(a, qx.one()) == a);
  }
  CHECK_THROWS_AS(qx.make(qpoly({1}), poly_zero(q)), DivisionByZero);
}

TEST_CASE("canonical form: reduced, monic denominator, zero is (0, 1)") {
  auto a = qx.make(qpoly({-2, 2}), qpoly({-2, 0, 2}));  // 2(X-1) / 2(X^2-1) = 1/(X+1)
  CHECK(a == rf({1}, {1, 1}));
  auto z = qx.make(poly_zero(q), qpoly({5, 7}));
  CHECK(z == qx.zero());
  CHECK(qx.make(qpoly({3}), qpoly({6})) == rf({1}, {2}));
  CHECK(qx.make(qpoly({3}), qpoly({6})).den == poly_one(q));

  SplitMix64 rng(8);
  for (int i = 0; i < 200; ++i) {
    auto x = random_element(qx, rng, {-3, 3, true, 2, true});
    auto y = random_element(qx, rng, {-3, 3, true, 2, true});
    auto s = qx.add(x, y), p = qx.mul(x, y), d = qx.sub(x, y), v = qx.inv(x);
    CHECK(canonical(s));
    CHECK(canonical(p));
    CHECK(canonical(d));
    CHECK(canonical(v));
    CHECK((x == y) == cross_equal(qx, x, y));
    // Unreduced forms equal their canonical representative under =_rat.
    auto raw_num = poly_mul(q, x.num, y.den), raw_den = poly_mul(q, x.den, y.den);
    CHECK(qx.make(raw_num, raw_den) == x);
    // Results agree with the unreduced textbook formulas up to =_rat.
    RF sum_raw{poly_add(q, poly_mul(q, x.num, y.den), poly_mul(q, y.num, x.den)), poly_mul(q, x.den, y.den)};
    CHECK(cross_equal(qx, s, sum_raw));
    RF prod_raw{poly_mul(q, x.num, y.num), poly_mul(q, x.den, y.den)};
    CHECK(cross_equal(qx, p, prod_raw));
  }
}

TEST_CASE("embeddings are ring homomorphisms") {
  SplitMix64 rng(12);
  for (int i = 0; i < 100; ++i) {
    Rational a = random_element(q, rng, {-9, 9, true}), b = random_element(q, rng, {-9, 9, true});
    CHECK(poly_constant(q, a + b) == poly_add(q, poly_constant(q, a), poly_constant(q, b)));
    CHECK(poly_constant(q, a * b) == poly_mul(q, poly_constant(q, a), poly_constant(q, b)));
    auto f = random_poly(q, rng, 4), g = random_poly(q, rng, 4);
    CHECK(qx.from_poly(poly_add(q, f, g)) == qx.add(qx.from_poly(f), qx.from_poly(g)));
    CHECK(qx.from_poly(poly_mul(q, f, g)) == qx.mul(qx.from_poly(f), qx.from_poly(g)));
  }
}

TEST_CASE("evaluation, text form and parsing") {
  auto a = rf({1, 0, 1}, {0, 1});
  CHECK(qx.eval(a, Rational(2)) == Rational(5, 2));
  CHECK_THROWS_AS(qx.eval(a, Rational(0)), DivisionByZero);
  CHECK(qx.to_string(a) == "1 0 1 / 0 1");
  CHECK(qx.parse("1 0 1 / 0 1") == a);
  CHECK(qx.parse("(2 2 / 4 4)") == qx.from_base(Rational(1, 2)));
  CHECK(qx.to_string(qx.from_int(3)) == "3");
  CHECK_THROWS_AS(qx.parse("1 / 0"), ParseError);
  CHECK_THROWS_AS(qx.parse("1 / 2 / 3"), ParseError);
  CHECK_THROWS_AS(qx.parse("/ 1"), ParseError);
  CHECK(qx.name() == "Q(X)");
  SplitMix64 rng(15);
  for (int i = 0; i < 100; ++i) {
    auto x = random_element(qx, rng, {-3, 3, true, 3, true});
    CHECK(qx.parse(qx.to_string(x)) == x);
  }
}

TEST_CASE("rational function fields over GF(p)") {
  PrimeField gf3(3);
  RationalFunctionField<PrimeField> k(gf3);
  // (X^3 - X) / (X^2 + 2X) over GF(3) = (X^2 - 1) / (X + 2) = X + 1 since X + 2 = X - 1.
  auto a = k.parse("0 2 0 1 / 0 2 1");
  CHECK(k.to_string(a) == "1 1");
  CHECK(k.is_polynomial(a));
  CHECK(k.name() == "GF3(X)");
}

TEST_CASE("towers F(X)(Y) run generic code") {
  RationalFunctionField<RationalFunctionField<RationalField>> tower(qx);
  auto x_as_y = rename_to_outer(tower, qx.x());
  CHECK(x_as_y == tower.x());
  auto c = embed_constant(tower, qx.x());
  CHECK(tower.is_polynomial(c));
  CHECK(degree(c.num) == 0);
  // det [[X, Y], [Y, X]] = X^2 - Y^2 over Q(X)(Y).
  MatrixOf<decltype(tower)> m(2, 2, tower.x());
  m(0, 0) = c;
  m(1, 1) = c;
  auto d = det(tower, m);
  auto expected = tower.sub(tower.mul(c, c), tower.mul(tower.x(), tower.x()));
  CHECK(d == expected);
  auto inv = tower.inv(tower.sub(tower.x(), c));
  CHECK(tower.mul(inv, tower.sub(tower.x(), c)) == tower.one());
}

TEST_CASE("common-denominator coding") {
  // Polynomial entries: g = 1 and the blocks are the coefficients.
  MatrixOf<decltype(qx)> p(1, 2, qx.zero());
  p(0, 0) = qx.from_poly(qpoly({1, 2}));
  p(0, 1) = qx.from_poly(qpoly({3}));
  auto code = to_common_denominator(qx, p);
  CHECK(code.denominator == poly_one(q));
  CHECK(code.numerators.degree == 1);
  CHECK(code.numerators.blocks[0](0, 0) == 1);
  CHECK(code.numerators.blocks[1](0, 0) == 2);
  CHECK(code.numerators.blocks[0](0, 1) == 3);
  CHECK(code.numerators.blocks[1](0, 1) == 0);

  MatrixOf<decltype(qx)> single(1, 1, rf({1}, {0, 1}));
  auto c1 = to_common_denominator(qx, single);
  CHECK(c1.denominator == qpoly({0, 1}));
  CHECK(to_entries(q, c1.numerators)(0, 0) == poly_one(q));

  MatrixOf<decltype(qx)> two(2, 1, qx.zero());
  two(0, 0) = rf({1}, {0, 1});
  two(1, 0) = rf({1}, {1, 1});
  auto c2 = to_common_denominator(qx, two);
  CHECK(c2.denominator == qpoly({0, 1, 1}));
  auto e2 = to_entries(q, c2.numerators);
  CHECK(e2(0, 0) == qpoly({1, 1}));
  CHECK(e2(1, 0) == qpoly({0, 1}));

  SplitMix64 rng(19);
  for (int i = 0; i < 30; ++i) {
    auto m = random_matrix(qx, rng, 2, 2, {-3, 3, false, 1, true});
    auto code2 = to_common_denominator(qx, m);
    CHECK(equal(qx, from_common_denominator(qx, code2), m));
    unsigned e = static_cast<unsigned>(rng.below(3));
    CHECK(equal(qx, from_common_denominator(qx, rat_code_pow(qx, e, code2)), matrix_power(qx, m, e)));
  }
}
