#pragma once

// Linear-algebra-method checkers: Oddtown, Fisher, Graham-Pollak, the
// non-uniform Ray-Chaudhuri-Wilson bound with explicit multilinearization,
// and Grolmusz's mod-6 co-diagonal matrix with its Ramsey certificates.
// Z6 is never used as a ring; values mod 6 are pairs (mod 2, mod 3).

#include <gmpxx.h>

#include <bitset>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dfla/circuit.hpp"
#include "dfla/error.hpp"
#include "dfla/field.hpp"
#include "dfla/matrix.hpp"

namespace dfla {

class SystemUnsolvable : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Binomials and subset ranking

/// binom(n, i) with binom(n, i) = 0 for i outside [0, n].
mpz_class binom(long long n, long long i);

/// Pascal table for 0 <= n <= n_max and 0 <= i <= s.
class BinomialTable {
 public:
  BinomialTable(std::size_t n_max, std::size_t s);

  std::size_t n_max() const { return n_max_; }
  std::size_t s() const { return s_; }
  /// binom(n, i) = 0 for i outside [0, n], matching binom(); other
  /// arguments beyond the table throw IndexOutOfRange.
  mpz_class operator()(long long n, long long i) const;

 private:
  std::size_t n_max_;
  std::size_t s_;
  std::vector<std::vector<mpz_class>> rows_;
};

/// sum_{i <= s} binom(n, i): the number of subsets of [n] of size at most s.
std::uint64_t subsets_up_to(std::size_t n, std::size_t s);

/// Rank in [1, subsets_up_to(n, s)] of a subset of [n] (elements 1-based,
/// any order). Subsets are ordered by size, then lexicographically:
///   x = sum_{j<t} binom(n, j) + 1 + sum over the gaps before each element
///       i_r of binom(n - k, t - r).
std::uint64_t subset_rank(std::size_t n, std::size_t s, const std::vector<std::size_t>& subset);
std::vector<std::size_t> subset_unrank(std::size_t n, std::size_t s, std::uint64_t x);

// ---------------------------------------------------------------------------
// Set families

struct SetFamily {
  std::size_t n = 0;
  std::vector<std::vector<bool>> members;

  std::size_t size() const { return members.size(); }
  std::size_t member_size(std::size_t i) const;
  std::size_t intersection(std::size_t i, std::size_t j) const;
  /// Members as 1-based element lists.
  std::vector<std::size_t> elements(std::size_t i) const;
  void validate() const;
};

struct OddtownReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t rank_gf2 = 0;
  bool bound_holds = false;
  bool certificate_holds = false;
  bool ok() const { return bound_holds && certificate_holds; }
};

/// Requires odd member sizes and even pairwise intersections.
OddtownReport oddtown_check(const SetFamily& family);

struct FisherReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t lambda = 0;
  Rational gram_det;
  bool bound_holds = false;
  bool certificate_holds = false;
  bool ok() const { return bound_holds && certificate_holds; }
};

/// Requires every pairwise intersection to have exactly lambda >= 1
/// elements and every member more than lambda elements.
FisherReport fisher_check(const SetFamily& family, std::size_t lambda);

struct Biclique {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

struct GrahamPollakReport {
  std::size_t n = 0;
  std::size_t count = 0;
  /// Rank over Q of A = sum_i 1_{L_i} 1_{R_i}^t, where A + A^t = J - I.
  std::size_t rank = 0;
  bool bound_holds = false;
  bool certificate_holds = false;
  bool ok() const { return bound_holds && certificate_holds; }
};

/// Requires the bicliques to partition the edges of K_n exactly.
GrahamPollakReport graham_pollak_check(std::size_t n, const std::vector<Biclique>& bicliques);

// ---------------------------------------------------------------------------
// Ray-Chaudhuri-Wilson

/// Coefficients of the multilinearization of a division-free circuit in the
/// variables x1..xn, indexed by subset_rank - 1 over subsets of size <= s.
/// Products whose support exceeds s are dropped, so every gate of the
/// circuit must have degree at most s.
std::vector<Rational> lincoeff(const Circuit& f, std::size_t n, std::size_t s);

/// The polynomial prod_{l in L, l < |A|} (sum_{j in A} x_j - l) as a circuit.
Circuit rcw_polynomial(const std::vector<bool>& member, const std::vector<std::size_t>& sizes);

struct RcwReport {
  std::size_t m = 0;
  std::size_t n = 0;
  std::size_t s = 0;
  /// Member indices (0-based, input order) sorted by nondecreasing size.
  std::vector<std::size_t> order;
  Matrix<Rational> u;
  Matrix<Rational> c;
  Matrix<Rational> monomials;
  mpz_class bound;
  bool upper_triangular = false;
  bool diagonal_nonzero = false;
  bool factorization_holds = false;
  bool bound_holds = false;
  bool ok() const { return upper_triangular && diagonal_nonzero && factorization_holds && bound_holds; }
};

/// Requires distinct members whose pairwise intersection sizes lie in L.
RcwReport rcw_verify(const SetFamily& family, const std::vector<std::size_t>& sizes);

// ---------------------------------------------------------------------------
// Grolmusz

/// f(j) = sum_a c_a s_a(x) for x in {0,1}^k with j ones, s_a the a-th
/// elementary symmetric polynomial; coefficients in Z_p.
struct SymmetricPolySpec {
  std::uint32_t p = 2;
  std::uint32_t e = 1;
  std::uint32_t modulus = 2;
  std::size_t k = 0;
  std::vector<std::uint32_t> coeffs;
  /// Largest j at which the semantics were checked by evaluation.
  std::size_t verified_up_to = 0;
};

/// Builds f with f(j) = 0 for j = 0 mod p^e and f(j) = 1 otherwise by
/// solving the p^e x p^e system [binom(j, a)] c = target over Z_p.
SymmetricPolySpec or_poly_mod_pe(std::size_t k, std::uint32_t p, std::uint32_t e);

/// sum_a c_a e_a(x) mod p, the e_a computed by dynamic programming.
std::uint32_t eval_symmetric(const SymmetricPolySpec& spec, const std::vector<bool>& x);

/// Least exponent e >= 1 with (p^e)^2 >= k.
std::uint32_t or_poly_exponent(std::size_t k, std::uint32_t p);

enum class EdgeRule { zero_mod_2, zero_mod_3 };

std::string to_string(EdgeRule rule);

inline constexpr std::size_t kMaxGraphVertices = 256;

struct Graph {
  std::size_t n = 0;
  std::vector<std::bitset<kMaxGraphVertices>> adj;

  bool edge(std::size_t i, std::size_t j) const { return adj[i][j]; }
  std::string to_string() const;
};

struct GrolmuszInstance {
  std::size_t k = 0;
  SymmetricPolySpec f1;
  SymmetricPolySpec f2;
  std::vector<std::vector<std::size_t>> vertices;
  /// A-bar mod 2 and mod 3 (the CRT pair f1 mod 2, 2 f2 mod 3).
  Matrix<Residue> mod2;
  Matrix<Residue> mod3;
  bool codiagonal = false;
  std::size_t rank2 = 0;
  std::size_t rank3 = 0;
  EdgeRule rule = EdgeRule::zero_mod_3;
  Graph graph;
};

/// Largest vertex count for which the ranks are computed.
inline constexpr std::size_t kGrolmuszRankLimit = 32;

/// Vertices are the strings of [k]^k in lexicographic order, truncated to
/// `cap` if given. Throws CapExceeded when the vertex count exceeds
/// kGrolmuszRankLimit or the cap does.
GrolmuszInstance grolmusz_graph(std::size_t k, std::optional<std::size_t> cap = std::nullopt,
                                EdgeRule rule = EdgeRule::zero_mod_3);

/// Exact maximum clique by branch and bound.
std::size_t clique_number(const Graph& g);
std::size_t independence_number(const Graph& g);

struct RamseyReport {
  std::size_t clique = 0;
  std::size_t independence = 0;
  std::size_t clique_bound = 0;
  mpz_class independence_bound;
  bool clique_ok = false;
  bool independence_ok = false;
  bool ok() const { return clique_ok && independence_ok; }
};

/// clique <= rank2 + 1 and independence <= binom(rank3 + 1, 2) + 1.
/// ScaleExceeded above kMaxGraphVertices vertices.
RamseyReport ramsey_check(const Graph& g, std::size_t rank2, std::size_t rank3);

}  // namespace dfla
