#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dfla/circuit.hpp"
#include "dfla/random.hpp"
#include "dfla/testing/generators.hpp"

using namespace dfla;

namespace {

RationalField q;

std::size_t internal_gates(const Circuit& c) {
  std::size_t n = 0;
  for (const auto& g : c.gates()) n += g.kind != GateKind::constant && g.kind != GateKind::variable;
  return n;
}

Assignment<RationalField> qassign(std::initializer_list<std::pair<const char*, Rational>> items) {
  Assignment<RationalField> a;
  for (const auto& [k, v] : items) a[k] = v;
  return a;
}

}  // namespace

TEST_CASE("Num/Den examples") {
  auto x = parse_sexpr("(var x)");
  auto nd = num_den(x);
  CHECK(to_sexpr(nd.num) == "(var x)");
  CHECK(to_sexpr(nd.den) == "(const 1)");

  auto ratio = num_den(parse_sexpr("(div (var x) (var y))"));
  CHECK(to_sexpr(ratio.num) == "(var x)");
  CHECK(to_sexpr(ratio.den) == "(var y)");

  auto sum = num_den(parse_sexpr("(add (div (var x) (var y)) (const 1))"));
  CHECK(to_sexpr(sum.num) == "(add (var x) (var y))");
  CHECK(to_sexpr(sum.den) == "(var y)");
  CHECK(sum.num.division_free());
  CHECK(sum.den.division_free());
}

TEST_CASE("evaluation examples") {
  CHECK(eval(q, parse_sexpr("(const 7)"), {}) == 7);
  CHECK(eval(q, parse_sexpr("(div (var x) (var y))"), qassign({{"x", Rational(1)}, {"y", Rational(2)}})) ==
        Rational(1, 2));
  CHECK_THROWS_AS(eval(q, parse_sexpr("(div (var x) (var y))"), qassign({{"x", Rational(1)}, {"y", Rational(0)}})),
                  ZeroDenominator);
  CHECK_THROWS_AS(eval(q, parse_sexpr("(var z)"), {}), InvalidInput);
  PrimeField gf7(7);
  Assignment<PrimeField> a{{"x", gf7.from_int(3)}};
  CHECK(eval(gf7, parse_sexpr("(div (const 1) (var x))"), a) == gf7.from_int(5));
  CHECK(eval(gf7, parse_sexpr("(const 9)"), {}) == gf7.from_int(2));
}

TEST_CASE("Num/Den is defined where gate-by-gate division fails") {
  // 1 / (1 / y) has Num = y and Den = 1, so it is 0 at y = 0.
  auto c = parse_sexpr("(div (const 1) (div (const 1) (var y)))");
  auto a = qassign({{"y", Rational(0)}});
  CHECK_THROWS_AS(eval_naive(q, c, a), DivisionByZero);
  CHECK(eval(q, c, a) == 0);
}

TEST_CASE("distributivity example") {
  SplitMix64 rng(1);
  auto lhs = parse_sexpr("(mul (var x) (add (var y) (var z)))");
  auto rhs = parse_sexpr("(add (mul (var x) (var y)) (mul (var x) (var z)))");
  for (int i = 0; i < 50; ++i) {
    auto a = qassign({{"x", random_element(q, rng, {-5, 5, true})},
                      {"y", random_element(q, rng, {-5, 5, true})},
                      {"z", random_element(q, rng, {-5, 5, true})}});
    CHECK(eval(q, lhs, a) == eval(q, rhs, a));
  }
}

TEST_CASE("hash-consing shares identical gates") {
  Circuit c;
  auto x = c.variable("x");
  CHECK(c.variable("x") == x);
  auto s1 = c.add(x, c.constant(2));
  auto s2 = c.add(x, c.constant(2));
  CHECK(s1 == s2);
  CHECK(c.size() == 3);
  CHECK(c.add(c.constant(2), x) != s1);
  CHECK_THROWS(c.add(x, 99));
  Circuit empty;
  CHECK_FALSE(empty.has_output());
  CHECK_THROWS(empty.output());
}

TEST_CASE("Num/Den output is division-free and linear in size") {
  SplitMix64 rng(2);
  const std::vector<std::string> vars{"x", "y", "z"};
  for (int i = 0; i < 300; ++i) {
    Circuit c;
    c.set_output(gen::circuit(c, rng, vars, 1 + static_cast<int>(rng.below(6)), true));
    auto p = c.pruned();
    auto nd = num_den(p);
    CHECK(nd.num.division_free());
    CHECK(nd.den.division_free());
    const std::size_t bound = 4 * internal_gates(p) + (p.size() - internal_gates(p)) + 1;
    CHECK(nd.num.size() <= bound);
    CHECK(nd.den.size() <= bound);
  }
}

TEST_CASE("deep alternations stay polynomial in size") {
  Circuit c;
  auto g = c.variable("x");
  for (int i = 0; i < 200; ++i) g = (i % 2) ? c.add(c.div(g, c.variable("y")), g) : c.div(c.add(g, c.constant(1)), g);
  c.set_output(g);
  auto nd = num_den(c);
  CHECK(nd.num.size() <= 4 * 400 + 4);
}

TEST_CASE("division-free circuits match direct evaluation") {
  SplitMix64 rng(3);
  PrimeField gf7(7);
  const std::vector<std::string> vars{"x", "y"};
  for (int i = 0; i < 200; ++i) {
    Circuit c;
    c.set_output(gen::circuit(c, rng, vars, 1 + static_cast<int>(rng.below(5)), false));
    auto a = qassign({{"x", random_element(q, rng, {-4, 4, true})}, {"y", random_element(q, rng, {-4, 4, true})}});
    CHECK(eval(q, c, a) == eval_alg(q, c, a));
    CHECK(eval_naive(q, c, a) == eval_alg(q, c, a));
    Assignment<PrimeField> b{{"x", random_element(gf7, rng)}, {"y", random_element(gf7, rng)}};
    CHECK(eval(gf7, c, b) == eval_alg(gf7, c, b));
  }
}

TEST_CASE("Num/Den agrees with naive evaluation whenever the latter is defined") {
  SplitMix64 rng(4);
  const std::vector<std::string> vars{"x", "y", "z"};
  int compared = 0;
  for (int i = 0; i < 300; ++i) {
    Circuit c;
    c.set_output(gen::circuit(c, rng, vars, 1 + static_cast<int>(rng.below(5)), true));
    auto a = qassign({{"x", random_element(q, rng, {-4, 4, true})},
                      {"y", random_element(q, rng, {-4, 4, true})},
                      {"z", random_element(q, rng, {-4, 4, true})}});
    Rational naive;
    try {
      naive = eval_naive(q, c, a);
    } catch (const DivisionByZero&) {
      continue;
    }
    CHECK(eval(q, c, a) == naive);
    CHECK(eval_star(c, a) == naive);
    ++compared;
  }
  CHECK(compared > 150);
}

TEST_CASE("star circuits take integer numerator and denominator inputs") {
  auto c = parse_sexpr("(add (var x) (var y))");
  auto s = star(c);
  auto vars = s.variables();
  CHECK(std::find(vars.begin(), vars.end(), "x.num") != vars.end());
  CHECK(std::find(vars.begin(), vars.end(), "y.den") != vars.end());
  CHECK(eval_star(c, qassign({{"x", Rational(1, 2)}, {"y", Rational(1, 3)}})) == Rational(5, 6));
}

TEST_CASE("S-expression syntax") {
  auto c = parse_sexpr("  (add (const 1) (var a) (var b))\n");
  CHECK(to_sexpr(c) == "(add (add (const 1) (var a)) (var b))");
  CHECK(to_sexpr(parse_sexpr("(const -3)")) == "(const -3)");
  auto a = qassign({{"a", Rational(5)}, {"b", Rational(2)}});
  CHECK(eval(q, parse_sexpr("(sub (var a) (var b))"), a) == 3);
  CHECK(eval(q, parse_sexpr("(neg (var a))"), a) == -5);
  CHECK(eval(q, parse_sexpr("(mul (var a) (var b) (const 2))"), a) == 20);
  for (const char* bad : {"", "(", "(add (const 1))", "(foo 1)", "(const x)", "(var)", "(add (const 1) (const 2)) x",
                          "(div (const 1))", "const 1"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_sexpr(bad), ParseError);
  }
  try {
    parse_sexpr("(add (const 1)\n  (bogus 2))");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 4);  // the unknown operator name
  }
  std::string deep(20000, '(');
  CHECK_THROWS_AS(parse_sexpr(deep), ParseError);
  // Round trip through the printer.
  SplitMix64 rng(5);
  for (int i = 0; i < 50; ++i) {
    Circuit g;
    g.set_output(gen::circuit(g, rng, {"x", "y"}, 3, true));
    auto text = to_sexpr(g);
    CHECK(to_sexpr(parse_sexpr(text)) == text);
  }
}
