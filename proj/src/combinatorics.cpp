#include "dfla/combinatorics.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "dfla/charpoly.hpp"
#include "dfla/rank.hpp"

namespace dfla {

// ---------------------------------------------------------------------------
// Binomials

mpz_class binom(long long n, long long i) {
  if (i < 0 || n < 0 || i > n) return 0;
  mpz_class out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(i));
  return out;
}

BinomialTable::BinomialTable(std::size_t n_max, std::size_t s) : n_max_(n_max), s_(s) {
  rows_.assign(n_max + 1, std::vector<mpz_class>(s + 1, 0));
  for (std::size_t n = 0; n <= n_max; ++n) {
    rows_[n][0] = 1;
    for (std::size_t i = 1; i <= s && i <= n; ++i) rows_[n][i] = rows_[n - 1][i - 1] + (i <= n - 1 ? rows_[n - 1][i] : 0);
  }
}

mpz_class BinomialTable::operator()(long long n, long long i) const {
  if (i < 0 || n < 0 || i > n) return 0;
  if (static_cast<std::size_t>(n) > n_max_ || static_cast<std::size_t>(i) > s_)
    throw IndexOutOfRange("binomial (" + std::to_string(n) + ", " + std::to_string(i) + ") outside the table");
  return rows_[n][i];
}

namespace {

std::uint64_t small_binom(std::size_t n, std::size_t i) {
  mpz_class b = binom(static_cast<long long>(n), static_cast<long long>(i));
  if (!b.fits_ulong_p()) throw SizeExceeded("binomial coefficient exceeds 64 bits");
  return b.get_ui();
}

}  // namespace

std::uint64_t subsets_up_to(std::size_t n, std::size_t s) {
  mpz_class total = 0;
  for (std::size_t i = 0; i <= s; ++i) total += binom(static_cast<long long>(n), static_cast<long long>(i));
  if (!total.fits_ulong_p()) throw SizeExceeded("subset count exceeds 64 bits");
  return total.get_ui();
}

std::uint64_t subset_rank(std::size_t n, std::size_t s, const std::vector<std::size_t>& subset) {
  std::vector<std::size_t> elems = subset;
  std::sort(elems.begin(), elems.end());
  if (std::adjacent_find(elems.begin(), elems.end()) != elems.end()) throw InvalidInput("subset has repeated elements");
  for (auto v : elems)
    if (v < 1 || v > n) throw InvalidInput("subset element " + std::to_string(v) + " outside [1, " + std::to_string(n) + "]");
  const std::size_t t = elems.size();
  if (t > s) throw SizeExceeded("subset of size " + std::to_string(t) + " exceeds s = " + std::to_string(s));
  std::uint64_t x = subsets_up_to(n, t) - small_binom(n, t) + 1;
  std::size_t previous = 0;
  for (std::size_t r = 1; r <= t; ++r) {
    for (std::size_t k = previous + 1; k < elems[r - 1]; ++k) x += small_binom(n - k, t - r);
    previous = elems[r - 1];
  }
  return x;
}

std::vector<std::size_t> subset_unrank(std::size_t n, std::size_t s, std::uint64_t x) {
  if (x < 1 || x > subsets_up_to(n, s)) throw IndexOutOfRange("subset rank " + std::to_string(x) + " out of range");
  std::uint64_t offset = x - 1;
  std::size_t t = 0;
  while (offset >= small_binom(n, t)) offset -= small_binom(n, t++);
  std::vector<std::size_t> out;
  std::size_t k = 1;
  for (std::size_t r = 1; r <= t; ++r) {
    while (offset >= small_binom(n - k, t - r)) offset -= small_binom(n - k++, t - r);
    out.push_back(k++);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Set families

std::size_t SetFamily::member_size(std::size_t i) const {
  return static_cast<std::size_t>(std::count(members[i].begin(), members[i].end(), true));
}

std::size_t SetFamily::intersection(std::size_t i, std::size_t j) const {
  std::size_t c = 0;
  for (std::size_t x = 0; x < n; ++x) c += members[i][x] && members[j][x];
  return c;
}

std::vector<std::size_t> SetFamily::elements(std::size_t i) const {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < n; ++x)
    if (members[i][x]) out.push_back(x + 1);
  return out;
}

void SetFamily::validate() const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].size() != n)
      throw InvalidInput("member " + std::to_string(i + 1) + " has " + std::to_string(members[i].size()) +
                         " bits, expected " + std::to_string(n));
}

namespace {

template <class E>
Matrix<E> incidence(const SetFamily& family, E zero, E one) {
  Matrix<E> a(family.size(), family.n, zero);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t x = 0; x < family.n; ++x)
      if (family.members[i][x]) a(i, x) = one;
  return a;
}

}  // namespace

OddtownReport oddtown_check(const SetFamily& family) {
  family.validate();
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family.member_size(i) % 2 == 0)
      throw PreconditionViolated("member " + std::to_string(i + 1) + " has even size " +
                                 std::to_string(family.member_size(i)));
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family.intersection(i, j) % 2 != 0)
        throw PreconditionViolated("members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) +
                                   " have odd intersection " + std::to_string(family.intersection(i, j)));
  }
  PrimeField gf2(2);
  OddtownReport report;
  report.m = family.size();
  report.n = family.n;
  report.rank_gf2 = family.size() == 0 ? 0 : rank(gf2, incidence(family, gf2.zero(), gf2.one()));
  report.certificate_holds = report.rank_gf2 == report.m;
  report.bound_holds = report.m <= report.n;
  return report;
}

FisherReport fisher_check(const SetFamily& family, std::size_t lambda) {
  family.validate();
  if (lambda < 1) throw PreconditionViolated("lambda must be at least 1");
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (family.member_size(i) <= lambda)
      throw PreconditionViolated("member " + std::to_string(i + 1) + " has size " + std::to_string(family.member_size(i)) +
                                 ", not more than lambda = " + std::to_string(lambda));
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family.intersection(i, j) != lambda)
        throw PreconditionViolated("members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " intersect in " +
                                   std::to_string(family.intersection(i, j)) + " elements, not lambda = " +
                                   std::to_string(lambda));
  }
  RationalField q;
  auto a = incidence(family, q.zero(), q.one());
  FisherReport report;
  report.m = family.size();
  report.n = family.n;
  report.lambda = lambda;
  report.gram_det = det(q, mul(q, a, transpose(a)));
  report.certificate_holds = !q.is_zero(report.gram_det);
  report.bound_holds = report.m <= report.n;
  return report;
}

GrahamPollakReport graham_pollak_check(std::size_t n, const std::vector<Biclique>& bicliques) {
  std::vector<std::vector<int>> cover(n, std::vector<int>(n, 0));
  for (std::size_t b = 0; b < bicliques.size(); ++b) {
    const auto& bc = bicliques[b];
    const std::string which = "biclique " + std::to_string(b + 1);
    if (bc.left.empty() || bc.right.empty()) throw PreconditionViolated(which + " has an empty side");
    std::vector<char> side(n, 0);
    for (auto v : bc.left) {
      if (v < 1 || v > n) throw PreconditionViolated(which + " uses vertex " + std::to_string(v) + " outside [1, n]");
      if (side[v - 1]) throw PreconditionViolated(which + " repeats vertex " + std::to_string(v));
      side[v - 1] = 1;
    }
    for (auto v : bc.right) {
      if (v < 1 || v > n) throw PreconditionViolated(which + " uses vertex " + std::to_string(v) + " outside [1, n]");
      if (side[v - 1]) throw PreconditionViolated(which + " repeats vertex " + std::to_string(v));
      side[v - 1] = 2;
    }
    for (auto u : bc.left)
      for (auto v : bc.right) {
        ++cover[std::min(u, v) - 1][std::max(u, v) - 1];
      }
  }
  for (std::size_t u = 0; u < n; ++u)
    for (std::size_t v = u + 1; v < n; ++v)
      if (cover[u][v] != 1)
        throw PreconditionViolated("edge {" + std::to_string(u + 1) + "," + std::to_string(v + 1) + "} is covered " +
                                   std::to_string(cover[u][v]) + " times");
  RationalField q;
  auto a = zero_matrix(q, n, n);
  for (const auto& bc : bicliques)
    for (auto u : bc.left)
      for (auto v : bc.right) a(u - 1, v - 1) = q.one();
  GrahamPollakReport report;
  report.n = n;
  report.count = bicliques.size();
  report.rank = n == 0 ? 0 : rank(q, a);
  report.bound_holds = n == 0 || report.count + 1 >= n;
  report.certificate_holds = report.rank <= report.count && report.rank + 1 >= n;
  return report;
}

// ---------------------------------------------------------------------------
// Ray-Chaudhuri-Wilson

namespace {

struct MonomialIndex {
  std::vector<std::uint64_t> masks;
  std::unordered_map<std::uint64_t, std::size_t> position;
};

MonomialIndex monomial_index(std::size_t n, std::size_t s) {
  if (n > 63) throw SizeExceeded("multilinearization supports at most 63 variables");
  MonomialIndex idx;
  const std::uint64_t total = subsets_up_to(n, s);
  for (std::uint64_t x = 1; x <= total; ++x) {
    std::uint64_t mask = 0;
    for (auto v : subset_unrank(n, s, x)) mask |= 1ULL << (v - 1);
    idx.position.emplace(mask, idx.masks.size());
    idx.masks.push_back(mask);
  }
  return idx;
}

std::size_t variable_number(const std::string& name, std::size_t n) {
  if (name.size() < 2 || name[0] != 'x') throw InvalidInput("variable '" + name + "' is not of the form x1..xn");
  std::size_t v = 0;
  for (std::size_t i = 1; i < name.size(); ++i) {
    if (name[i] < '0' || name[i] > '9') throw InvalidInput("variable '" + name + "' is not of the form x1..xn");
    v = v * 10 + static_cast<std::size_t>(name[i] - '0');
    if (v > n) break;
  }
  if (v < 1 || v > n) throw InvalidInput("variable '" + name + "' outside x1..x" + std::to_string(n));
  return v;
}

std::vector<Rational> lincoeff_with(const Circuit& circuit, std::size_t n, const MonomialIndex& idx) {
  // Gates unreachable from the output may have degree above s.
  const Circuit f = circuit.pruned();
  if (!f.division_free()) throw InvalidInput("lincoeff needs a division-free circuit");
  const std::size_t total = idx.masks.size();
  std::vector<std::vector<Rational>> value(f.size());
  for (GateId g = 0; g <= f.output(); ++g) {
    const Gate& gate = f.gate(g);
    std::vector<Rational> v(total, Rational(0));
    switch (gate.kind) {
      case GateKind::constant: v[idx.position.at(0)] = Rational(mpz_class(std::to_string(gate.value))); break;
      case GateKind::variable: {
        auto it = idx.position.find(1ULL << (variable_number(gate.name, n) - 1));
        if (it == idx.position.end()) throw InvalidInput("variable of degree 1 exceeds s = 0");
        v[it->second] = 1;
        break;
      }
      case GateKind::add:
        for (std::size_t i = 0; i < total; ++i) v[i] = value[gate.lhs][i] + value[gate.rhs][i];
        break;
      case GateKind::mul:
        for (std::size_t a = 0; a < total; ++a) {
          if (value[gate.lhs][a] == 0) continue;
          for (std::size_t b = 0; b < total; ++b) {
            if (value[gate.rhs][b] == 0) continue;
            auto it = idx.position.find(idx.masks[a] | idx.masks[b]);
            if (it != idx.position.end()) v[it->second] += value[gate.lhs][a] * value[gate.rhs][b];
          }
        }
        break;
      case GateKind::div: break;
    }
    value[g] = std::move(v);
  }
  return value[f.output()];
}

}  // namespace

std::vector<Rational> lincoeff(const Circuit& f, std::size_t n, std::size_t s) {
  return lincoeff_with(f, n, monomial_index(n, s));
}

Circuit rcw_polynomial(const std::vector<bool>& member, const std::vector<std::size_t>& sizes) {
  Circuit c;
  std::size_t size = static_cast<std::size_t>(std::count(member.begin(), member.end(), true));
  std::optional<GateId> sum;
  for (std::size_t j = 0; j < member.size(); ++j) {
    if (!member[j]) continue;
    GateId x = c.variable("x" + std::to_string(j + 1));
    sum = sum ? c.add(*sum, x) : x;
  }
  GateId linear = sum ? *sum : c.constant(0);
  GateId product = c.constant(1);
  bool first = true;
  for (auto l : sizes) {
    if (l >= size) continue;
    GateId factor = c.add(linear, c.constant(-static_cast<long long>(l)));
    product = first ? factor : c.mul(product, factor);
    first = false;
  }
  c.set_output(product);
  return c;
}

RcwReport rcw_verify(const SetFamily& family, const std::vector<std::size_t>& sizes) {
  family.validate();
  std::vector<std::size_t> l = sizes;
  std::sort(l.begin(), l.end());
  l.erase(std::unique(l.begin(), l.end()), l.end());
  const std::size_t m = family.size(), n = family.n, s = l.size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) {
      if (family.members[i] == family.members[j])
        throw PreconditionViolated("members " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are equal");
      auto c = family.intersection(i, j);
      if (!std::binary_search(l.begin(), l.end(), c)) throw NotLIntersecting(i + 1, j + 1, c);
    }

  RcwReport report;
  report.m = m;
  report.n = n;
  report.s = s;
  report.order.resize(m);
  std::iota(report.order.begin(), report.order.end(), std::size_t{0});
  std::stable_sort(report.order.begin(), report.order.end(),
                   [&](std::size_t a, std::size_t b) { return family.member_size(a) < family.member_size(b); });

  RationalField q;
  auto idx = monomial_index(n, s);
  const std::size_t total = idx.masks.size();
  report.u = Matrix<Rational>(m, m, q.zero());
  report.c = Matrix<Rational>(m, total, q.zero());
  report.monomials = Matrix<Rational>(total, m, q.zero());
  for (std::size_t j = 0; j < m; ++j) {
    const auto& v = family.members[report.order[j]];
    for (std::size_t sigma = 0; sigma < total; ++sigma) {
      bool all = true;
      for (std::size_t x = 0; x < n; ++x)
        if ((idx.masks[sigma] >> x & 1ULL) && !v[x]) all = false;
      report.monomials(sigma, j) = all ? q.one() : q.zero();
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    auto f = rcw_polynomial(family.members[report.order[i]], l);
    for (std::size_t j = 0; j < m; ++j) {
      Assignment<RationalField> point;
      const auto& v = family.members[report.order[j]];
      for (std::size_t x = 0; x < n; ++x) point["x" + std::to_string(x + 1)] = v[x] ? q.one() : q.zero();
      report.u(i, j) = eval_alg(q, f, point);
    }
    auto coeffs = lincoeff_with(f, n, idx);
    for (std::size_t sigma = 0; sigma < total; ++sigma) report.c(i, sigma) = coeffs[sigma];
  }

  report.upper_triangular = true;
  report.diagonal_nonzero = true;
  for (std::size_t i = 0; i < m; ++i) {
    if (q.is_zero(report.u(i, i))) report.diagonal_nonzero = false;
    for (std::size_t j = 0; j < i; ++j)
      if (!q.is_zero(report.u(i, j))) report.upper_triangular = false;
  }
  report.factorization_holds = equal(q, mul(q, report.c, report.monomials), report.u);
  report.bound = 0;
  for (std::size_t i = 0; i <= s; ++i) report.bound += binom(static_cast<long long>(n), static_cast<long long>(i));
  report.bound_holds = mpz_class(static_cast<unsigned long>(m)) <= report.bound;
  return report;
}

// ---------------------------------------------------------------------------
// Grolmusz

std::uint32_t eval_symmetric(const SymmetricPolySpec& spec, const std::vector<bool>& x) {
  // e[a] = elementary symmetric polynomial of degree a in the prefix of x.
  const std::size_t top = spec.coeffs.size();
  std::vector<std::uint32_t> e(top, 0);
  if (top == 0) return 0;
  e[0] = 1;
  for (bool bit : x) {
    if (!bit) continue;
    for (std::size_t a = top - 1; a >= 1; --a) e[a] = (e[a] + e[a - 1]) % spec.p;
  }
  std::uint64_t acc = 0;
  for (std::size_t a = 0; a < top; ++a) acc += static_cast<std::uint64_t>(spec.coeffs[a]) * e[a];
  return static_cast<std::uint32_t>(acc % spec.p);
}

std::uint32_t or_poly_exponent(std::size_t k, std::uint32_t p) {
  std::uint32_t e = 1;
  std::uint64_t q = p;
  while (q * q < k) {
    q *= p;
    ++e;
  }
  return e;
}

SymmetricPolySpec or_poly_mod_pe(std::size_t k, std::uint32_t p, std::uint32_t e) {
  if (!is_prime(p)) throw InvalidInput("p = " + std::to_string(p) + " is not prime");
  if (e < 1) throw InvalidInput("exponent e must be at least 1");
  std::uint64_t modulus = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    modulus *= p;
    if (modulus > 16) throw InvalidInput("p^e must be at most 16");
  }
  if (static_cast<std::uint64_t>(k) > modulus * modulus)
    throw InvalidInput("need sqrt(k) <= p^e, got k = " + std::to_string(k) + " and p^e = " + std::to_string(modulus));
  const std::size_t size = modulus;

  PrimeField f(p);
  auto system = tabulate<Residue>(size, size, [&](std::size_t j, std::size_t a) {
    return f.from_int(static_cast<long long>(mpz_class(binom(static_cast<long long>(j), static_cast<long long>(a)) % p).get_si()));
  });
  std::vector<Residue> target;
  for (std::size_t j = 0; j < size; ++j) target.push_back(indicator(f, j % size != 0));
  std::vector<Residue> c;
  try {
    c = solve(f, system, std::span<const Residue>(target));
  } catch (const Unsolvable&) {
    throw SystemUnsolvable("the binomial system for p^e = " + std::to_string(size) + " has no solution");
  }

  SymmetricPolySpec spec;
  spec.p = p;
  spec.e = e;
  spec.modulus = static_cast<std::uint32_t>(modulus);
  spec.k = k;
  for (auto r : c) spec.coeffs.push_back(r.value);
  while (!spec.coeffs.empty() && spec.coeffs.back() == 0) spec.coeffs.pop_back();

  spec.verified_up_to = std::max(k, size - 1);
  for (std::size_t j = 0; j <= spec.verified_up_to; ++j) {
    std::vector<bool> x(spec.verified_up_to, false);
    std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j), true);
    auto value = eval_symmetric(spec, x);
    if ((value == 0) != (j % size == 0))
      throw InternalError("OR polynomial mod " + std::to_string(size) + " is wrong at j = " + std::to_string(j));
  }
  return spec;
}

std::string to_string(EdgeRule rule) { return rule == EdgeRule::zero_mod_2 ? "zero-mod-2" : "zero-mod-3"; }

std::string Graph::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) out += adj[i][j] ? '1' : '0';
    out += '\n';
  }
  return out;
}

GrolmuszInstance grolmusz_graph(std::size_t k, std::optional<std::size_t> cap, EdgeRule rule) {
  if (k < 1) throw InvalidInput("k must be at least 1");
  std::size_t total = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (total > std::numeric_limits<std::size_t>::max() / k) {
      total = std::numeric_limits<std::size_t>::max();
      break;
    }
    total *= k;
  }
  std::size_t n = cap ? std::min(*cap, total) : total;
  if (n > kGrolmuszRankLimit)
    throw CapExceeded(std::to_string(n) + " vertices exceed the limit of " + std::to_string(kGrolmuszRankLimit) +
                      (cap ? "" : "; supply a smaller cap"));

  GrolmuszInstance g;
  g.k = k;
  g.rule = rule;
  g.f1 = or_poly_mod_pe(k, 2, or_poly_exponent(k, 2));
  g.f2 = or_poly_mod_pe(k, 3, or_poly_exponent(k, 3));

  std::vector<std::size_t> x(k, 1);
  for (std::size_t v = 0; v < n; ++v) {
    g.vertices.push_back(x);
    for (std::size_t i = k; i-- > 0;) {
      if (x[i] < k) {
        ++x[i];
        break;
      }
      x[i] = 1;
    }
  }

  PrimeField gf2(2), gf3(3);
  g.mod2 = Matrix<Residue>(n, n, gf2.zero());
  g.mod3 = Matrix<Residue>(n, n, gf3.zero());
  g.codiagonal = true;
  std::vector<bool> delta(k);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      for (std::size_t i = 0; i < k; ++i) delta[i] = g.vertices[a][i] != g.vertices[b][i];
      g.mod2(a, b) = {eval_symmetric(g.f1, delta)};
      g.mod3(a, b) = {(2 * eval_symmetric(g.f2, delta)) % 3};
      bool zero = g.mod2(a, b).value == 0 && g.mod3(a, b).value == 0;
      if (zero != (a == b)) g.codiagonal = false;
    }

  g.rank2 = n == 0 ? 0 : rank(gf2, g.mod2);
  g.rank3 = n == 0 ? 0 : rank(gf3, g.mod3);

  g.graph.n = n;
  g.graph.adj.assign(n, {});
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      bool zero = rule == EdgeRule::zero_mod_2 ? g.mod2(a, b).value == 0 : g.mod3(a, b).value == 0;
      g.graph.adj[a][b] = zero;
    }
  return g;
}

namespace {

using Bits = std::bitset<kMaxGraphVertices>;

void expand_clique(const std::vector<Bits>& adj, Bits candidates, std::size_t size, std::size_t& best) {
  if (candidates.none()) {
    best = std::max(best, size);
    return;
  }
  while (candidates.any()) {
    if (size + candidates.count() <= best) return;
    std::size_t v = candidates._Find_first();
    candidates.reset(v);
    expand_clique(adj, candidates & adj[v], size + 1, best);
  }
  best = std::max(best, size);
}

void check_scale(const Graph& g) {
  if (g.n > kMaxGraphVertices)
    throw ScaleExceeded(std::to_string(g.n) + " vertices exceed the exact-search limit of " +
                        std::to_string(kMaxGraphVertices));
  if (g.adj.size() != g.n) throw InvalidInput("graph adjacency size differs from its vertex count");
  for (std::size_t i = 0; i < g.n; ++i) {
    if (g.adj[i][i]) throw InvalidInput("graph has a loop at vertex " + std::to_string(i + 1));
    for (std::size_t j = 0; j < g.n; ++j)
      if (g.adj[i][j] != g.adj[j][i]) throw InvalidInput("graph adjacency is not symmetric");
  }
}

}  // namespace

std::size_t clique_number(const Graph& g) {
  check_scale(g);
  Bits all;
  for (std::size_t i = 0; i < g.n; ++i) all.set(i);
  std::size_t best = 0;
  expand_clique(g.adj, all, 0, best);
  return best;
}

std::size_t independence_number(const Graph& g) {
  check_scale(g);
  Graph complement{g.n, std::vector<Bits>(g.n)};
  for (std::size_t i = 0; i < g.n; ++i)
    for (std::size_t j = 0; j < g.n; ++j) complement.adj[i][j] = i != j && !g.adj[i][j];
  return clique_number(complement);
}

RamseyReport ramsey_check(const Graph& g, std::size_t rank2, std::size_t rank3) {
  RamseyReport r;
  r.clique = clique_number(g);
  r.independence = independence_number(g);
  r.clique_bound = rank2 + 1;
  r.independence_bound = binom(static_cast<long long>(rank3) + 1, 2) + 1;
  r.clique_ok = r.clique <= r.clique_bound;
  r.independence_ok = mpz_class(static_cast<unsigned long>(r.independence)) <= r.independence_bound;
  return r;
}

}  // namespace dfla
