#pragma once

// Arithmetic circuits over {const, var, +, *, /} with a single output, and
// the Num/Den transform that removes division:
//
//   const c -> (c, 1)            var x -> (x, 1)
//   F + G   -> (N_F D_G + N_G D_F, D_F D_G)
//   F * G   -> (N_F N_G, D_F D_G)
//   F / G   -> (N_F D_G, D_F N_G)
//
// Gates are hash-consed, so the transform shares subcircuits instead of
// unfolding into a tree. A circuit's value over a field is Num / Den, which
// is defined whenever the top-level Den is nonzero, even if some
// intermediate division would fail when evaluated gate by gate.

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "dfla/error.hpp"
#include "dfla/field.hpp"

namespace dfla {

enum class GateKind { constant, variable, add, mul, div };

struct Gate {
  GateKind kind = GateKind::constant;
  long long value = 0;
  std::string name;
  std::size_t lhs = 0;
  std::size_t rhs = 0;
};

using GateId = std::size_t;

/// A topologically ordered gate pool with one designated output. Building
/// the same gate twice returns the existing id.
class Circuit {
 public:
  GateId constant(long long c);
  GateId variable(std::string name);
  GateId add(GateId a, GateId b);
  GateId mul(GateId a, GateId b);
  GateId div(GateId a, GateId b);

  void set_output(GateId g);
  GateId output() const;
  bool has_output() const { return has_output_; }

  const Gate& gate(GateId g) const { return gates_.at(g); }
  std::size_t size() const { return gates_.size(); }
  const std::vector<Gate>& gates() const { return gates_; }

  bool division_free() const;
  /// Variable names in order of first appearance.
  std::vector<std::string> variables() const;

  /// Copies the gate `g` of `other` (with its inputs) into this pool.
  GateId import(const Circuit& other, GateId g);
  /// The subcircuit reachable from the output, with the output set.
  Circuit pruned() const;

 private:
  GateId intern(Gate g);
  void check(GateId g) const;

  std::vector<Gate> gates_;
  std::map<std::tuple<int, long long, std::string, std::size_t, std::size_t>, GateId> index_;
  GateId output_ = 0;
  bool has_output_ = false;
};

struct NumDen {
  Circuit num;
  Circuit den;
};

/// Division elimination. Both results are division-free and pruned.
NumDen num_den(const Circuit& c);

/// The circuit F* in which every variable x is replaced by the division
/// gate x.num / x.den, so rational inputs enter as integer pairs.
Circuit star(const Circuit& c);

std::string to_sexpr(const Circuit& c);

/// Parses "(add (div (var x) (var y)) (const 1))". add and mul accept two or
/// more arguments and fold to the left; (sub a b) is a + (-1) b and (neg a)
/// is (-1) a.
Circuit parse_sexpr(std::string_view text);

template <Ring R>
using Assignment = std::map<std::string, ElementOf<R>, std::less<>>;

/// Value of every gate of a division-free circuit.
template <Ring R>
std::vector<ElementOf<R>> evaluate_gates(const R& r, const Circuit& c, const Assignment<R>& a) {
  std::vector<ElementOf<R>> v;
  v.reserve(c.size());
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::constant: v.push_back(embed_integer(r, g.value)); break;
      case GateKind::variable: {
        auto it = a.find(g.name);
        if (it == a.end()) throw InvalidInput("assignment does not cover variable '" + g.name + "'");
        v.push_back(it->second);
        break;
      }
      case GateKind::add: v.push_back(r.add(v[g.lhs], v[g.rhs])); break;
      case GateKind::mul: v.push_back(r.mul(v[g.lhs], v[g.rhs])); break;
      case GateKind::div: throw InvalidInput("division gate in a division-free evaluation");
    }
  }
  return v;
}

/// Evaluation of a division-free circuit over a ring.
template <Ring R>
ElementOf<R> eval_alg(const R& r, const Circuit& c, const Assignment<R>& a) {
  if (!c.division_free()) throw InvalidInput("eval_alg needs a division-free circuit");
  return evaluate_gates(r, c, a)[c.output()];
}

/// Num(F) / Den(F) at the assignment; ZeroDenominator if Den vanishes.
template <Field F>
ElementOf<F> eval(const F& f, const NumDen& nd, const Assignment<F>& a) {
  auto den = eval_alg(f, nd.den, a);
  if (f.is_zero(den)) throw ZeroDenominator();
  return f.mul(eval_alg(f, nd.num, a), f.inv(den));
}

template <Field F>
ElementOf<F> eval(const F& f, const Circuit& c, const Assignment<F>& a) {
  return eval(f, num_den(c), a);
}

/// Gate-by-gate evaluation with true division; DivisionByZero as soon as
/// any divisor vanishes.
template <Field F>
ElementOf<F> eval_naive(const F& f, const Circuit& c, const Assignment<F>& a) {
  std::vector<ElementOf<F>> v;
  v.reserve(c.size());
  for (const auto& g : c.gates()) {
    switch (g.kind) {
      case GateKind::constant: v.push_back(embed_integer(f, g.value)); break;
      case GateKind::variable: {
        auto it = a.find(g.name);
        if (it == a.end()) throw InvalidInput("assignment does not cover variable '" + g.name + "'");
        v.push_back(it->second);
        break;
      }
      case GateKind::add: v.push_back(f.add(v[g.lhs], v[g.rhs])); break;
      case GateKind::mul: v.push_back(f.mul(v[g.lhs], v[g.rhs])); break;
      case GateKind::div: v.push_back(checked_div(f, v[g.lhs], v[g.rhs])); break;
    }
  }
  return v[c.output()];
}

/// Eval over Q through F*: each x = a/b becomes x.num = a, x.den = b, and the
/// value is Num(F*)(A*) / Den(F*)(A*), both computed division-free.
Rational eval_star(const Circuit& c, const Assignment<RationalField>& a);

}  // namespace dfla
