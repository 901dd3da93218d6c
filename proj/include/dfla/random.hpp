#pragma once

// Seeded pseudo-random generation for the randomized suites. SplitMix64:
// state += 0x9E3779B97F4A7C15, then the output is mixed with the multipliers
// 0xBF58476D1CE4E5B9 and 0x94D049BB133111EB and shifts 30, 27, 31. The
// sequence for a given seed is fixed forever, so every suite is reproducible.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "dfla/field.hpp"
#include "dfla/matrix.hpp"
#include "dfla/poly.hpp"
#include "dfla/ratfunc.hpp"

namespace dfla {

class SplitMix64 {
 public:
  using result_type = std::uint64_t;

  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
  std::uint64_t operator()() { return next(); }
  static constexpr std::uint64_t min() { return 0; }
  static constexpr std::uint64_t max() { return ~0ULL; }

  /// Uniform in [0, bound) by rejection; bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = ~0ULL - (~0ULL % bound);
    std::uint64_t x;
    do x = next();
    while (x >= limit);
    return x % bound;
  }

  /// Uniform in [lo, hi].
  long long between(long long lo, long long hi) {
    return lo + static_cast<long long>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  bool coin() { return (next() >> 63) != 0; }

  /// Independent generator for a sub-task, so suites do not perturb each
  /// other's streams.
  SplitMix64 fork() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

/// Random-element policy per field. Rationals are small integers or, when
/// `fractions` is set, small fractions; residues are uniform.
struct RandomSpec {
  long long lo = -3;
  long long hi = 3;
  bool fractions = false;
  /// Degree bound for polynomial parts over F(X).
  std::size_t degree = 2;
  /// Whether F(X) samples may carry a nontrivial denominator.
  bool denominators = true;
};

inline Rational random_element(const RationalField& q, SplitMix64& rng, const RandomSpec& spec = {}) {
  long long num = rng.between(spec.lo, spec.hi);
  if (!spec.fractions) return q.from_int(num);
  long long den = rng.between(1, 4);
  return q.make(mpz_class(static_cast<long>(num)), mpz_class(static_cast<long>(den)));
}

inline Residue random_element(const PrimeField& f, SplitMix64& rng, const RandomSpec& = {}) {
  return {static_cast<std::uint32_t>(rng.below(f.modulus()))};
}

template <Field F>
PolyOf<F> random_poly(const F& f, SplitMix64& rng, std::size_t max_degree, const RandomSpec& spec = {}) {
  std::vector<ElementOf<F>> c;
  for (std::size_t i = 0; i <= max_degree; ++i) c.push_back(random_element(f, rng, spec));
  return trimmed(f, std::move(c));
}

/// Nonzero polynomial of degree exactly `deg`.
template <Field F>
PolyOf<F> random_poly_exact(const F& f, SplitMix64& rng, std::size_t deg, const RandomSpec& spec = {}) {
  std::vector<ElementOf<F>> c;
  for (std::size_t i = 0; i < deg; ++i) c.push_back(random_element(f, rng, spec));
  ElementOf<F> lead = random_element(f, rng, spec);
  while (f.is_zero(lead)) lead = random_element(f, rng, spec);
  c.push_back(lead);
  return PolyOf<F>{std::move(c)};
}

template <Field F>
ElementOf<RationalFunctionField<F>> random_element(const RationalFunctionField<F>& k, SplitMix64& rng,
                                                   const RandomSpec& spec = {}) {
  auto num = random_poly(k.base(), rng, spec.degree, spec);
  if (!spec.denominators || rng.below(2) == 0) return k.from_poly(std::move(num));
  auto den = random_poly(k.base(), rng, spec.degree, spec);
  if (is_zero(den)) den = poly_one(k.base());
  return k.make(std::move(num), std::move(den));
}

template <Field F>
MatrixOf<F> random_matrix(const F& f, SplitMix64& rng, std::size_t rows, std::size_t cols, const RandomSpec& spec = {}) {
  MatrixOf<F> out(rows, cols, f.zero());
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = random_element(f, rng, spec);
  return out;
}

template <Field F>
std::vector<ElementOf<F>> random_vector(const F& f, SplitMix64& rng, std::size_t length, const RandomSpec& spec = {}) {
  std::vector<ElementOf<F>> out;
  for (std::size_t i = 0; i < length; ++i) out.push_back(random_element(f, rng, spec));
  return out;
}

}  // namespace dfla
