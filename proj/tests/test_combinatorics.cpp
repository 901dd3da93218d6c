#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "dfla/combinatorics.hpp"
#include "dfla/rank.hpp"
#include "dfla/testing/generators.hpp"
#include "dfla/testing/oracle.hpp"

using namespace dfla;

namespace {

SetFamily family(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> sets) {
  SetFamily f{n, {}};
  for (const auto& s : sets) {
    std::vector<bool> bits(n, false);
    for (auto x : s) bits[x - 1] = true;
    f.members.push_back(bits);
  }
  return f;
}

Graph graph_from(std::size_t n, bool complete) {
  Graph g{n, std::vector<std::bitset<kMaxGraphVertices>>(n)};
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g.adj[i][j] = complete && i != j;
  return g;
}

}  // namespace

TEST_CASE("binomial coefficients") {
  for (long long n = 0; n < 10; ++n) CHECK(binom(n, 0) == 1);
  CHECK(binom(4, 2) == 6);
  CHECK(binom(3, 5) == 0);
  CHECK(binom(3, -1) == 0);
  CHECK(binom(100, 50) == mpz_class("100891344545564193334812497256"));
}

TEST_CASE("binomial table satisfies Pascal and hockey-stick identities") {
  const std::size_t n_max = 40, s = 8;
  BinomialTable t(n_max, s);
  for (long long n = 0; n + 1 <= static_cast<long long>(n_max); ++n)
    for (long long i = -1; i + 1 <= static_cast<long long>(s); ++i) {
      CHECK(t(n + 1, i + 1) == t(n, i) + t(n, i + 1));
      mpz_class sum = 0;
      for (long long j = 0; j <= n; ++j) sum += t(j, i);
      if (i >= 0) CHECK(t(n + 1, i + 1) == sum);
    }
  for (long long n = 0; n <= static_cast<long long>(n_max); ++n)
    for (long long i = 0; i <= static_cast<long long>(s); ++i) CHECK(t(n, i) == binom(n, i));
  CHECK(t(3, 5) == 0);
  CHECK(t(-1, 0) == 0);
  CHECK_THROWS_AS(t(n_max + 1, 0), IndexOutOfRange);
  CHECK_THROWS_AS(t(n_max, s + 1), IndexOutOfRange);
}

TEST_CASE("subset ranking") {
  CHECK(subset_rank(3, 2, {}) == 1);
  std::set<std::uint64_t> ranks;
  for (auto s : std::vector<std::vector<std::size_t>>{{}, {1}, {2}, {3}}) ranks.insert(subset_rank(3, 1, s));
  CHECK(ranks == std::set<std::uint64_t>{1, 2, 3, 4});
  CHECK(subset_rank(3, 2, {3, 1}) == subset_rank(3, 2, {1, 3}));
  CHECK_THROWS_AS(subset_rank(3, 1, {1, 2}), SizeExceeded);
  CHECK_THROWS(subset_unrank(3, 1, 5));
  CHECK_THROWS(subset_unrank(3, 1, 0));
  for (auto [n, s] : {std::pair<std::size_t, std::size_t>{5, 2}, {6, 2}, {7, 3}}) {
    const auto total = subsets_up_to(n, s);
    std::set<std::vector<std::size_t>> seen;
    for (std::uint64_t x = 1; x <= total; ++x) {
      auto sub = subset_unrank(n, s, x);
      CHECK(sub.size() <= s);
      CHECK(std::is_sorted(sub.begin(), sub.end()));
      CHECK(subset_rank(n, s, sub) == x);
      seen.insert(sub);
    }
    CHECK(seen.size() == total);
  }
  CHECK(subsets_up_to(6, 2) == 1 + 6 + 15);
}

TEST_CASE("oddtown") {
  auto singles = family(4, {{1}, {2}, {3}, {4}});
  auto r = oddtown_check(singles);
  CHECK(r.m == 4);
  CHECK(r.rank_gf2 == 4);
  CHECK(r.ok());
  CHECK_THROWS_AS(oddtown_check(family(3, {{1, 2}})), PreconditionViolated);
  CHECK_THROWS_AS(oddtown_check(family(3, {{1}, {1, 2, 3}})), PreconditionViolated);
  SplitMix64 rng(1);
  for (int i = 0; i < 30; ++i) {
    auto fam = gen::oddtown_family(rng, 3 + rng.below(8));
    auto rep = oddtown_check(fam);
    CHECK(rep.ok());
    CHECK(rep.m <= rep.n);
  }
}

TEST_CASE("Fisher inequality") {
  CHECK_THROWS_AS(fisher_check(family(3, {{1, 2, 3}, {1, 2, 3}}), 3), PreconditionViolated);
  CHECK_THROWS_AS(fisher_check(family(3, {{1, 2}, {2, 3}}), 0), PreconditionViolated);
  CHECK_THROWS_AS(fisher_check(family(4, {{1, 2}, {3, 4}}), 1), PreconditionViolated);
  auto tri = fisher_check(family(3, {{1, 2}, {2, 3}, {1, 3}}), 1);
  CHECK(tri.ok());
  CHECK(tri.gram_det == 4);
  SplitMix64 rng(2);
  for (int i = 0; i < 30; ++i) {
    auto inst = gen::fisher_family(rng, 4 + rng.below(7));
    auto rep = fisher_check(inst.family, inst.lambda);
    CHECK(rep.ok());
    RationalField q;
    MatrixOf<RationalField> a(inst.family.size(), inst.family.n, Rational(0));
    for (std::size_t r = 0; r < a.rows(); ++r)
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) = inst.family.members[r][c] ? 1 : 0;
    CHECK(rep.gram_det == oracle::cofactor_det(q, mul(q, a, transpose(a))));
  }
}

TEST_CASE("Graham-Pollak") {
  std::vector<Biclique> stars{{{1}, {2, 3}}, {{2}, {3}}};
  auto r = graham_pollak_check(3, stars);
  CHECK(r.count == 2);
  CHECK(r.ok());
  std::vector<Biclique> missing{{{1}, {2, 3}}};
  CHECK_THROWS_AS(graham_pollak_check(3, missing), PreconditionViolated);
  std::vector<Biclique> twice{{{1}, {2, 3}}, {{1, 2}, {3}}};
  CHECK_THROWS_AS(graham_pollak_check(3, twice), PreconditionViolated);
  std::vector<Biclique> bad_vertex{{{1}, {4}}};
  CHECK_THROWS_AS(graham_pollak_check(3, bad_vertex), PreconditionViolated);
  SplitMix64 rng(3);
  for (int i = 0; i < 30; ++i) {
    std::size_t n = 2 + rng.below(12);
    auto rep = graham_pollak_check(n, gen::biclique_partition(rng, n));
    CHECK(rep.ok());
    CHECK(rep.count + 1 >= n);
  }
}

TEST_CASE("multilinearization is faithful on 0/1 points") {
  SplitMix64 rng(4);
  RationalField q;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + rng.below(5), s = 1 + rng.below(3);
    // Product of s random affine forms in x1..xn: degree s.
    Circuit c;
    GateId prod = c.constant(1);
    for (std::size_t f = 0; f < s; ++f) {
      GateId form = c.constant(rng.between(-3, 3));
      for (std::size_t j = 1; j <= n; ++j)
        form = c.add(form, c.mul(c.constant(rng.between(-2, 2)), c.variable("x" + std::to_string(j))));
      prod = c.mul(prod, form);
    }
    c.set_output(prod);
    auto coeffs = lincoeff(c, n, s);
    CHECK(coeffs.size() == subsets_up_to(n, s));
    for (std::uint64_t mask = 0; mask < (1ULL << n); ++mask) {
      Assignment<RationalField> a;
      for (std::size_t j = 1; j <= n; ++j) a["x" + std::to_string(j)] = (mask >> (j - 1)) & 1 ? 1 : 0;
      Rational expansion = 0;
      for (std::uint64_t x = 1; x <= coeffs.size(); ++x) {
        auto sub = subset_unrank(n, s, x);
        bool all = std::all_of(sub.begin(), sub.end(), [&](std::size_t j) { return (mask >> (j - 1)) & 1; });
        if (all) expansion += coeffs[x - 1];
      }
      CHECK(eval_alg(q, c, a) == expansion);
    }
  }
}

TEST_CASE("Ray-Chaudhuri-Wilson examples") {
  auto tri = rcw_verify(family(3, {{1, 2}, {2, 3}, {1, 3}}), {1});
  CHECK(tri.m == 3);
  CHECK(tri.bound == 4);
  CHECK(tri.ok());

  auto sunflower = rcw_verify(family(4, {{1}, {2}, {3}, {4}}), {0});
  CHECK(sunflower.ok());
  for (std::size_t i = 0; i < 4; ++i) CHECK(sunflower.u(i, i) == 1);  // the factor (1 - 0)

  auto single = rcw_verify(family(5, {{1, 4}}), {});
  CHECK(single.bound == 1);
  CHECK(single.ok());

  try {
    rcw_verify(family(4, {{1, 2}, {2, 3}, {1, 2, 3}}), {1});
    FAIL("expected NotLIntersecting");
  } catch (const NotLIntersecting& e) {
    CHECK(e.intersection == 2);
  }
  CHECK_THROWS_AS(rcw_verify(family(3, {{1}, {1}}), {0}), PreconditionViolated);
}

TEST_CASE("Ray-Chaudhuri-Wilson on generated families") {
  SplitMix64 rng(5);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 4 + rng.below(7), s = 1 + rng.below(2);
    auto inst = gen::rcw_family(rng, n, s);
    auto rep = rcw_verify(inst.family, inst.sizes);
    CHECK(rep.upper_triangular);
    CHECK(rep.diagonal_nonzero);
    CHECK(rep.factorization_holds);
    CHECK(rep.bound_holds);
    mpz_class sum = 0;
    for (std::size_t t = 0; t <= rep.s; ++t) sum += binom(static_cast<long long>(n), static_cast<long long>(t));
    CHECK(rep.bound == sum);
    CHECK(mpz_class(static_cast<unsigned long>(rep.m)) <= sum);
  }
}

TEST_CASE("OR polynomials modulo prime powers") {
  auto parity = or_poly_mod_pe(4, 2, 1);
  CHECK(parity.coeffs == std::vector<std::uint32_t>{0, 1});
  CHECK(parity.modulus == 2);
  for (auto [k, p, e] : {std::tuple<std::size_t, std::uint32_t, std::uint32_t>{4, 2, 1}, {16, 2, 2}, {9, 3, 1}, {81, 3, 2}}) {
    auto spec = or_poly_mod_pe(k, p, e);
    CHECK(spec.coeffs.size() == spec.modulus);
    for (std::size_t j = 0; j <= std::min<std::size_t>(k, 40); ++j) {
      std::vector<bool> x(k, false);
      for (std::size_t t = 0; t < j; ++t) x[t] = true;
      auto v = eval_symmetric(spec, x);
      if (j % spec.modulus == 0)
        CHECK(v == 0);
      else
        CHECK(v != 0);
      // Symmetric: the positions of the ones do not matter.
      std::vector<bool> y(k, false);
      for (std::size_t t = 0; t < j; ++t) y[k - 1 - t] = true;
      CHECK(eval_symmetric(spec, y) == v);
    }
  }
  auto three = or_poly_mod_pe(4, 3, 1);
  std::vector<bool> one{true, false, false, false}, two{true, true, false, false};
  CHECK(eval_symmetric(three, one) == eval_symmetric(three, two));
  CHECK_THROWS_AS(or_poly_mod_pe(17, 2, 2), InvalidInput);
  CHECK_THROWS_AS(or_poly_mod_pe(4, 2, 5), InvalidInput);
  CHECK_THROWS_AS(or_poly_mod_pe(4, 4, 1), InvalidInput);
  CHECK(or_poly_exponent(4, 2) == 1);
  CHECK(or_poly_exponent(10, 2) == 2);
  CHECK(or_poly_exponent(9, 3) == 1);
}

TEST_CASE("Grolmusz matrix is co-diagonal") {
  for (std::size_t k : {2, 3}) {
    auto g = grolmusz_graph(k, k == 3 ? std::optional<std::size_t>(27) : std::nullopt);
    CHECK(g.codiagonal);
    for (std::size_t i = 0; i < g.vertices.size(); ++i)
      for (std::size_t j = 0; j < g.vertices.size(); ++j) {
        bool zero6 = g.mod2(i, j).value == 0 && g.mod3(i, j).value == 0;
        CHECK(zero6 == (i == j));
      }
    PrimeField gf2(2), gf3(3);
    CHECK(g.rank2 == oracle::rank(gf2, g.mod2));
    CHECK(g.rank3 == oracle::rank(gf3, g.mod3));
  }
  CHECK_THROWS_AS(grolmusz_graph(4), CapExceeded);
  CHECK_THROWS_AS(grolmusz_graph(4, 40), CapExceeded);
  CHECK(grolmusz_graph(3, 40).vertices.size() == 27);
}

TEST_CASE("edge rule golden values") {
  // Both orientations are evaluated; the zero-mod-3 rule is the frozen one.
  auto g3 = grolmusz_graph(3, 27, EdgeRule::zero_mod_3);
  auto r3 = ramsey_check(g3.graph, g3.rank2, g3.rank3);
  CHECK(g3.rank2 == 6);
  CHECK(g3.rank3 == 14);
  CHECK(r3.clique == 3);
  CHECK(r3.independence == 9);
  CHECK(r3.ok());
  auto g2 = grolmusz_graph(3, 27, EdgeRule::zero_mod_2);
  auto r2 = ramsey_check(g2.graph, g2.rank2, g2.rank3);
  CHECK(r2.clique == 4);
  CHECK(r2.independence == 4);
  CHECK(r2.ok());
  CHECK(grolmusz_graph(2).rule == EdgeRule::zero_mod_3);
  auto k2 = grolmusz_graph(2);
  CHECK(k2.graph.to_string() == "0000\n0000\n0000\n0000\n");
  CHECK(ramsey_check(k2.graph, k2.rank2, k2.rank3).ok());
}

TEST_CASE("clique and independence numbers") {
  auto empty = graph_from(6, false);
  CHECK(clique_number(empty) == 1);
  CHECK(independence_number(empty) == 6);
  auto full = graph_from(6, true);
  CHECK(clique_number(full) == 6);
  CHECK(independence_number(full) == 1);
  CHECK(clique_number(graph_from(0, false)) == 0);
  SplitMix64 rng(6);
  for (int i = 0; i < 40; ++i) {
    std::size_t n = 1 + rng.below(14);
    Graph g = graph_from(n, false);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = a + 1; b < n; ++b)
        if (rng.coin()) g.adj[a][b] = g.adj[b][a] = true;
    CHECK(clique_number(g) == oracle::brute_clique(g));
  }
  Graph too_big{kMaxGraphVertices + 1, std::vector<std::bitset<kMaxGraphVertices>>(kMaxGraphVertices + 1)};
  CHECK_THROWS_AS(clique_number(too_big), ScaleExceeded);
  auto loop = graph_from(2, false);
  loop.adj[0][0] = true;
  CHECK_THROWS_AS(clique_number(loop), InvalidInput);
}
