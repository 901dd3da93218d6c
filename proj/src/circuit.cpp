#include "dfla/circuit.hpp"

#include <unordered_map>

#include "dfla/text.hpp"

namespace dfla {

GateId Circuit::intern(Gate g) {
  auto key = std::make_tuple(static_cast<int>(g.kind), g.value, g.name, g.lhs, g.rhs);
  auto it = index_.find(key);
  if (it != index_.end()) return it->second;
  gates_.push_back(std::move(g));
  index_.emplace(std::move(key), gates_.size() - 1);
  return gates_.size() - 1;
}

void Circuit::check(GateId g) const {
  if (g >= gates_.size()) throw IndexOutOfRange("gate " + std::to_string(g) + " does not exist");
}

GateId Circuit::constant(long long c) { return intern({GateKind::constant, c, {}, 0, 0}); }

GateId Circuit::variable(std::string name) {
  if (name.empty()) throw InvalidInput("variable name must not be empty");
  return intern({GateKind::variable, 0, std::move(name), 0, 0});
}

GateId Circuit::add(GateId a, GateId b) {
  check(a);
  check(b);
  return intern({GateKind::add, 0, {}, a, b});
}

GateId Circuit::mul(GateId a, GateId b) {
  check(a);
  check(b);
  return intern({GateKind::mul, 0, {}, a, b});
}

GateId Circuit::div(GateId a, GateId b) {
  check(a);
  check(b);
  return intern({GateKind::div, 0, {}, a, b});
}

void Circuit::set_output(GateId g) {
  check(g);
  output_ = g;
  has_output_ = true;
}

GateId Circuit::output() const {
  if (!has_output_) throw InvalidInput("circuit has no output gate");
  return output_;
}

bool Circuit::division_free() const {
  for (const auto& g : gates_)
    if (g.kind == GateKind::div) return false;
  return true;
}

std::vector<std::string> Circuit::variables() const {
  std::vector<std::string> out;
  for (const auto& g : gates_)
    if (g.kind == GateKind::variable) out.push_back(g.name);
  return out;
}

GateId Circuit::import(const Circuit& other, GateId root) {
  std::unordered_map<GateId, GateId> map;
  std::vector<std::pair<GateId, bool>> stack{{root, false}};
  while (!stack.empty()) {
    auto [g, expanded] = stack.back();
    stack.pop_back();
    if (map.count(g)) continue;
    const Gate& gate = other.gate(g);
    bool binary = gate.kind == GateKind::add || gate.kind == GateKind::mul || gate.kind == GateKind::div;
    if (binary && !expanded) {
      stack.push_back({g, true});
      stack.push_back({gate.rhs, false});
      stack.push_back({gate.lhs, false});
      continue;
    }
    Gate copy = gate;
    if (binary) {
      copy.lhs = map.at(gate.lhs);
      copy.rhs = map.at(gate.rhs);
    }
    map[g] = intern(std::move(copy));
  }
  return map.at(root);
}

Circuit Circuit::pruned() const {
  Circuit out;
  out.set_output(out.import(*this, output()));
  return out;
}

namespace {

/// Builds Num and Den of every gate inside one shared pool. Products with
/// the constant 1 collapse to the other factor.
class NumDenBuilder {
 public:
  explicit NumDenBuilder(Circuit& pool) : pool_(pool), one_(pool.constant(1)) {}

  GateId one() const { return one_; }

  GateId mul(GateId a, GateId b) {
    if (a == one_) return b;
    if (b == one_) return a;
    return pool_.mul(a, b);
  }

  GateId add(GateId a, GateId b) { return pool_.add(a, b); }

 private:
  Circuit& pool_;
  GateId one_;
};

}  // namespace

NumDen num_den(const Circuit& c) {
  const GateId out = c.output();
  Circuit pool;
  NumDenBuilder b(pool);
  std::vector<GateId> num(c.size()), den(c.size());
  for (GateId i = 0; i <= out; ++i) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::constant:
        num[i] = pool.constant(g.value);
        den[i] = b.one();
        break;
      case GateKind::variable:
        num[i] = pool.variable(g.name);
        den[i] = b.one();
        break;
      case GateKind::add:
        num[i] = b.add(b.mul(num[g.lhs], den[g.rhs]), b.mul(num[g.rhs], den[g.lhs]));
        den[i] = b.mul(den[g.lhs], den[g.rhs]);
        break;
      case GateKind::mul:
        num[i] = b.mul(num[g.lhs], num[g.rhs]);
        den[i] = b.mul(den[g.lhs], den[g.rhs]);
        break;
      case GateKind::div:
        num[i] = b.mul(num[g.lhs], den[g.rhs]);
        den[i] = b.mul(den[g.lhs], num[g.rhs]);
        break;
    }
  }
  NumDen result;
  pool.set_output(num[out]);
  result.num = pool.pruned();
  pool.set_output(den[out]);
  result.den = pool.pruned();
  return result;
}

Circuit star(const Circuit& c) {
  Circuit out;
  std::vector<GateId> map(c.size());
  for (GateId i = 0; i < c.size(); ++i) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::constant: map[i] = out.constant(g.value); break;
      case GateKind::variable: map[i] = out.div(out.variable(g.name + ".num"), out.variable(g.name + ".den")); break;
      case GateKind::add: map[i] = out.add(map[g.lhs], map[g.rhs]); break;
      case GateKind::mul: map[i] = out.mul(map[g.lhs], map[g.rhs]); break;
      case GateKind::div: map[i] = out.div(map[g.lhs], map[g.rhs]); break;
    }
  }
  out.set_output(map[c.output()]);
  return out;
}

Rational eval_star(const Circuit& c, const Assignment<RationalField>& a) {
  RationalField q;
  Assignment<RationalField> integer_inputs;
  for (const auto& [name, value] : a) {
    integer_inputs[name + ".num"] = Rational(value.get_num());
    integer_inputs[name + ".den"] = Rational(value.get_den());
  }
  auto nd = num_den(star(c));
  auto den = eval_alg(q, nd.den, integer_inputs);
  if (q.is_zero(den)) throw ZeroDenominator();
  return eval_alg(q, nd.num, integer_inputs) / den;
}

// ---------------------------------------------------------------------------
// S-expressions

std::string to_sexpr(const Circuit& c) {
  std::vector<std::string> text(c.output() + 1);
  for (GateId i = 0; i <= c.output(); ++i) {
    const Gate& g = c.gate(i);
    switch (g.kind) {
      case GateKind::constant: text[i] = "(const " + std::to_string(g.value) + ")"; break;
      case GateKind::variable: text[i] = "(var " + g.name + ")"; break;
      case GateKind::add: text[i] = "(add " + text[g.lhs] + " " + text[g.rhs] + ")"; break;
      case GateKind::mul: text[i] = "(mul " + text[g.lhs] + " " + text[g.rhs] + ")"; break;
      case GateKind::div: text[i] = "(div " + text[g.lhs] + " " + text[g.rhs] + ")"; break;
    }
  }
  return text[c.output()];
}

namespace {

class SexprParser {
 public:
  explicit SexprParser(std::string_view s) : s_(s) {}

  Circuit run() {
    Circuit c;
    GateId out = parse(c, 0);
    skip_space();
    if (pos_ != s_.size()) fail("unexpected text after the expression");
    c.set_output(out);
    return c;
  }

 private:
  static constexpr int kMaxDepth = 10000;

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1, column = 1;
    for (std::size_t i = 0; i < pos_ && i < s_.size(); ++i) {
      if (s_[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    throw ParseError(what, line, column);
  }

  void skip_space() {
    while (pos_ < s_.size() && text::is_space(s_[pos_])) ++pos_;
  }

  std::string_view atom() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < s_.size() && !text::is_space(s_[pos_]) && s_[pos_] != '(' && s_[pos_] != ')') ++pos_;
    if (start == pos_) fail("expected an atom");
    return s_.substr(start, pos_ - start);
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= s_.size() || s_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  bool at_close() {
    skip_space();
    return pos_ < s_.size() && s_[pos_] == ')';
  }

  GateId parse(Circuit& c, int depth) {
    if (depth > kMaxDepth) fail("expression nested too deeply");
    expect('(');
    std::size_t op_pos = pos_;
    auto op = atom();
    GateId result;
    if (op == "const") {
      auto t = atom();
      long long v = 0;
      std::size_t used = 0;
      try {
        v = std::stoll(std::string(t), &used);
      } catch (const std::exception&) {
        fail("constant is not an integer");
      }
      if (used != t.size()) fail("constant is not an integer");
      result = c.constant(v);
    } else if (op == "var") {
      result = c.variable(std::string(atom()));
    } else if (op == "add" || op == "mul") {
      std::vector<GateId> args;
      while (!at_close()) args.push_back(parse(c, depth + 1));
      if (args.size() < 2) fail(std::string(op) + " needs at least two arguments");
      result = args[0];
      for (std::size_t i = 1; i < args.size(); ++i) result = op == "add" ? c.add(result, args[i]) : c.mul(result, args[i]);
    } else if (op == "div" || op == "sub") {
      GateId a = parse(c, depth + 1);
      GateId b = parse(c, depth + 1);
      result = op == "div" ? c.div(a, b) : c.add(a, c.mul(c.constant(-1), b));
    } else if (op == "neg") {
      result = c.mul(c.constant(-1), parse(c, depth + 1));
    } else {
      pos_ = op_pos;
      fail("unknown operator '" + std::string(op) + "'");
    }
    expect(')');
    return result;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Circuit parse_sexpr(std::string_view text) { return SexprParser(text).run(); }

}  // namespace dfla
