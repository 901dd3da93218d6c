// Command-line front end. Exit codes: 0 success, 1 a checked assertion
// failed (unsolvable system, violated precondition, zero denominator,
// failing bound), 2 malformed input or usage.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "dfla/charpoly.hpp"
#include "dfla/circuit.hpp"
#include "dfla/combinatorics.hpp"
#include "dfla/io.hpp"
#include "dfla/rank.hpp"
#include "dfla/ratfunc.hpp"
#include "dfla/testing/selftest.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace dfla;

/// A checked assertion failed; reported with exit code 1.
class CheckFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Bad invocation; reported with exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using AnyField = std::variant<RationalField, PrimeField, RationalFunctionField<RationalField>,
                              RationalFunctionField<PrimeField>>;

PrimeField prime_field(const std::string& digits) {
  if (digits.empty() || digits.size() > 10 || digits.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("field GF<p> needs a decimal prime p, got 'GF" + digits + "'");
  auto p = std::stoull(digits);
  if (p >= (1ULL << 31) || !is_prime(p)) throw UsageError("GF" + digits + ": " + digits + " is not a prime below 2^31");
  return PrimeField(static_cast<std::uint32_t>(p));
}

/// Q, GF2, GF3, GF<p>, and any of these followed by "(X)".
AnyField parse_field(std::string spec) {
  bool rational_functions = false;
  if (spec.size() > 3 && spec.compare(spec.size() - 3, 3, "(X)") == 0) {
    rational_functions = true;
    spec.resize(spec.size() - 3);
  }
  if (spec == "Q") {
    if (rational_functions) return RationalFunctionField<RationalField>(RationalField{});
    return RationalField{};
  }
  if (spec.rfind("GF", 0) == 0) {
    auto f = prime_field(spec.substr(2));
    if (rational_functions) return RationalFunctionField<PrimeField>(f);
    return f;
  }
  throw UsageError("unknown field '" + spec + "'; expected Q, GF2, GF3, GF<p>, or one of these followed by (X)");
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

/// Output sink: text lines, or one JSON object whose fields mirror them.
class Report {
 public:
  explicit Report(bool as_json) : json_(as_json) {}

  void field(const std::string& key, const std::string& value) {
    if (json_)
      doc_[key] = value;
    else
      text_ << value << '\n';
  }
  void labelled(const std::string& key, const std::string& value) {
    if (json_)
      doc_[key] = value;
    else
      text_ << key << ": " << value << '\n';
  }
  void list(const std::string& key, const std::vector<std::string>& values, bool label = false) {
    if (json_) {
      doc_[key] = values;
      return;
    }
    if (label) text_ << key << ": ";
    for (std::size_t i = 0; i < values.size(); ++i) text_ << (i ? " " : "") << values[i];
    text_ << '\n';
  }
  template <Ring R>
  void matrix(const std::string& key, const R& r, const MatrixOf<R>& a, bool label = false) {
    if (json_) {
      json rows = json::array();
      for (std::size_t i = 0; i < a.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(r.to_string(a(i, j)));
        rows.push_back(std::move(row));
      }
      doc_[key] = {{"rows", std::to_string(a.rows())}, {"cols", std::to_string(a.cols())}, {"entries", rows}};
      return;
    }
    if (label) text_ << key << ":\n";
    text_ << io::print_matrix(r, a);
  }
  void raw(const std::string& key, json value) { doc_[key] = std::move(value); }
  /// A titled block of lines in text mode, an array in JSON mode.
  void block(const std::string& key, const std::vector<std::string>& lines) {
    if (json_) {
      doc_[key] = lines;
      return;
    }
    text_ << key << ":\n";
    for (const auto& l : lines) text_ << l << '\n';
  }
  bool is_json() const { return json_; }

  void flush() {
    if (json_)
      std::cout << doc_.dump(2) << '\n';
    else
      std::cout << text_.str();
  }

 private:
  bool json_;
  json doc_ = json::object();
  std::ostringstream text_;
};

std::vector<std::string> numbers(const std::vector<std::size_t>& v) {
  std::vector<std::string> out;
  for (auto x : v) out.push_back(std::to_string(x));
  return out;
}

template <Ring R>
std::vector<std::string> elements(const R& r, const std::vector<ElementOf<R>>& v) {
  std::vector<std::string> out;
  for (const auto& x : v) out.push_back(text::group(r.to_string(x)));
  return out;
}

struct Common {
  std::string field = "Q";
  bool json = false;
  std::uint64_t seed = 7;
  unsigned threads = 1;
  std::string input = "-";
};

void add_common(CLI::App* app, Common& c, bool with_field, bool with_input) {
  if (with_field) app->add_option("--field", c.field, "Q, GF2, GF3, GF<p>, or one of these followed by (X)");
  app->add_flag("--json", c.json, "Emit JSON with every value as a string");
  app->add_option("--seed", c.seed, "Seed for the selftest instance generators");
  app->add_option("--threads", c.threads, "Worker threads for independent subproblems")->check(CLI::Range(1u, 256u));
  if (with_input) app->add_option("input", c.input, "Input file, '-' for stdin");
}

template <class Fn>
void with_field(const std::string& spec, Fn&& fn) {
  std::visit([&](const auto& f) { fn(f); }, parse_field(spec));
}

// ---------------------------------------------------------------------------

template <Field F>
void cmd_det(const F& f, const Common& c, Report& out) {
  auto a = io::parse_matrix(f, read_input(c.input));
  out.field("det", f.to_string(det(f, a)));
}

template <Field F>
void cmd_charpoly(const F& f, const Common& c, Report& out) {
  auto a = io::parse_matrix(f, read_input(c.input));
  out.list("charpoly", elements(f, charpoly(f, a)));
}

template <Field F>
void cmd_rank(const F& f, const Common& c, Report& out) {
  auto a = io::parse_matrix(f, read_input(c.input));
  auto r = mulmuley_rank(f, a);
  out.field("rank", std::to_string(r.rank));
  if (out.is_json()) {
    out.raw("mul", std::to_string(r.mul));
    RationalFunctionField<F> k(f);
    out.raw("charpoly_of_polize", elements(k, r.charpoly_of_polize.coeffs));
  }
}

template <Field F>
void cmd_solve(const F& f, const Common& c, const std::string& rhs, Report& out) {
  auto a = io::parse_matrix(f, read_input(c.input));
  auto b = io::parse_vector(f, read_input(rhs));
  if (b.size() != a.rows())
    throw ParseError("right-hand side has " + std::to_string(b.size()) + " entries, matrix has " +
                     std::to_string(a.rows()) + " rows");
  try {
    out.list("solution", elements(f, solve(f, a, std::span<const ElementOf<F>>(b))));
  } catch (const Unsolvable&) {
    throw CheckFailed("unsolvable: no x with A x = b");
  }
}

template <Field F>
void cmd_kernel(const F& f, const Common& c, Report& out) {
  auto a = io::parse_matrix(f, read_input(c.input));
  out.matrix("kernel", f, kernel_basis(f, a, c.threads));
}

template <Field F>
void cmd_basis(const F& f, const Common& c, Report& out) {
  auto a = io::parse_matrix(f, read_input(c.input));
  auto sel = greedy_basis(f, a, c.threads);
  std::vector<std::size_t> cols;
  for (std::size_t j = 0; j < sel.selected.size(); ++j)
    if (sel.selected[j]) cols.push_back(j + 1);
  out.labelled("count", std::to_string(sel.count));
  out.list("selected", numbers(cols), true);
  out.matrix("coeffs", f, sel.coeffs, true);
}

template <Field F>
void cmd_minor(const F& f, const Common& c, Report& out) {
  auto a = io::parse_matrix(f, read_input(c.input));
  try {
    auto sel = max_nonsingular_minor(f, a, c.threads);
    out.list("rows", numbers(sel.rows), true);
    out.list("cols", numbers(sel.cols), true);
    out.labelled("det", f.to_string(det(f, minor_matrix(f, a, sel))));
  } catch (const ZeroMatrix&) {
    throw CheckFailed("the matrix has rank 0, so it has no nonsingular minor");
  }
}

template <Field F>
void cmd_ct(const F& f, const Common& c, std::optional<std::size_t> k, Report& out) {
  auto v = io::parse_vector(f, read_input(c.input));
  std::span<const ElementOf<F>> view(v);
  auto ct = count_nonzero(f, view, k.value_or(v.size()));
  out.list("index_vector", elements(f, ct), true);
  out.labelled("count", std::to_string(denoted_index(f, std::span<const ElementOf<F>>(ct)) - 1));
}

template <Field F>
void cmd_circuit_eval(const F& f, const std::string& text, const std::vector<std::string>& assign, Report& out) {
  auto circuit = parse_sexpr(text);
  Assignment<F> a;
  for (const auto& item : assign) {
    auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("--assign expects name=value, got '" + item + "'");
    a[item.substr(0, eq)] = f.parse(item.substr(eq + 1));
  }
  try {
    out.labelled("value", f.to_string(eval(f, circuit, a)));
  } catch (const ZeroDenominator&) {
    throw CheckFailed("the circuit's denominator evaluates to 0");
  }
}

SetFamily read_family(const std::string& path) {
  auto t = io::parse_set_family(read_input(path));
  return {t.n, std::move(t.members)};
}

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed(what);
}

int run(int argc, char** argv) {
  CLI::App app{"Exact division-free linear algebra over Q, GF(p) and rational function fields"};
  app.require_subcommand(1);
  Common c;
  std::string rhs;
  std::optional<std::size_t> k_opt;
  std::string circuit_text, circuit_file;
  std::vector<std::string> assign;
  std::size_t lambda = 0, or_k = 0;
  std::string sizes_text;
  std::uint32_t or_p = 2, or_e = 1;
  std::size_t ramsey_k = 2;
  std::optional<std::size_t> cap;
  std::string rule_text = "zero-mod-3";
  std::optional<int> criterion;
  bool timing = false;
  bool show_graph = false;

  auto matrix_cmd = [&](const char* name, const char* help) {
    auto* s = app.add_subcommand(name, help);
    add_common(s, c, true, true);
    return s;
  };
  auto* det_cmd = matrix_cmd("det", "Determinant via Berkowitz");
  auto* charpoly_cmd = matrix_cmd("charpoly", "Characteristic polynomial, leading coefficient first");
  auto* rank_cmd = matrix_cmd("rank", "Rank by Mulmuley's algorithm");
  auto* solve_cmd = matrix_cmd("solve", "A solution of A x = b");
  solve_cmd->add_option("rhs", rhs, "Right-hand side as a one-column matrix file")->required();
  auto* kernel_cmd = matrix_cmd("kernel", "Kernel basis as matrix columns");
  auto* basis_cmd = matrix_cmd("basis", "Greedy left-to-right basis of the column space");
  auto* minor_cmd = matrix_cmd("minor", "Maximal nonsingular minor (1-based rows and columns)");
  auto* ct_cmd = matrix_cmd("ct", "Counting gadget on a one-column vector file");
  ct_cmd->add_option("-k,--k", k_opt, "Count among the first k entries (default: all)");
  auto* circuit_cmd = app.add_subcommand("circuit-eval", "Evaluate an S-expression circuit via Num/Den");
  add_common(circuit_cmd, c, true, false);
  circuit_cmd->add_option("expr", circuit_text, "Circuit S-expression");
  circuit_cmd->add_option("--file", circuit_file, "Read the circuit from a file");
  circuit_cmd->add_option("--assign", assign, "name=value")->take_all();
  auto* oddtown_cmd = app.add_subcommand("oddtown", "Oddtown bound with a GF(2) rank certificate");
  add_common(oddtown_cmd, c, false, true);
  auto* fisher_cmd = app.add_subcommand("fisher", "Fisher inequality with a Gram determinant certificate");
  add_common(fisher_cmd, c, false, true);
  fisher_cmd->add_option("--lambda", lambda, "Common intersection size")->required();
  auto* gp_cmd = app.add_subcommand("graham-pollak", "Graham-Pollak bound for a biclique partition of K_n");
  add_common(gp_cmd, c, false, true);
  auto* rcw_cmd = app.add_subcommand("rcw", "Non-uniform Ray-Chaudhuri-Wilson bound");
  add_common(rcw_cmd, c, false, true);
  rcw_cmd->add_option("--L", sizes_text, "Allowed intersection sizes, comma separated (may be empty)")->required();
  auto* or_cmd = app.add_subcommand("or-poly", "Symmetric OR polynomial modulo p^e");
  add_common(or_cmd, c, false, false);
  or_cmd->add_option("--k", or_k, "Number of variables")->required();
  or_cmd->add_option("--p", or_p, "Prime")->required();
  or_cmd->add_option("--e", or_e, "Exponent")->required();
  auto* ramsey_cmd = app.add_subcommand("ramsey", "Grolmusz graph with clique and independence certificates");
  add_common(ramsey_cmd, c, false, false);
  ramsey_cmd->add_option("--k", ramsey_k, "Vertices are the strings of [k]^k");
  ramsey_cmd->add_option("--cap", cap, "Use only the first cap vertices");
  ramsey_cmd->add_option("--rule", rule_text, "Edge rule: zero-mod-3 or zero-mod-2");
  ramsey_cmd->add_flag("--graph", show_graph, "Also print the adjacency bit rows");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suites");
  add_common(selftest_cmd, c, false, false);
  selftest_cmd->add_option("--criterion", criterion, "Run a single criterion (1-11)");
  selftest_cmd->add_flag("--timing", timing, "Print elapsed time per criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  Report out(c.json);
  if (*det_cmd) with_field(c.field, [&](const auto& f) { cmd_det(f, c, out); });
  if (*charpoly_cmd) with_field(c.field, [&](const auto& f) { cmd_charpoly(f, c, out); });
  if (*rank_cmd) with_field(c.field, [&](const auto& f) { cmd_rank(f, c, out); });
  if (*solve_cmd) with_field(c.field, [&](const auto& f) { cmd_solve(f, c, rhs, out); });
  if (*kernel_cmd) with_field(c.field, [&](const auto& f) { cmd_kernel(f, c, out); });
  if (*basis_cmd) with_field(c.field, [&](const auto& f) { cmd_basis(f, c, out); });
  if (*minor_cmd) with_field(c.field, [&](const auto& f) { cmd_minor(f, c, out); });
  if (*ct_cmd) with_field(c.field, [&](const auto& f) { cmd_ct(f, c, k_opt, out); });
  if (*circuit_cmd) {
    if (circuit_text.empty() == circuit_file.empty()) throw UsageError("give exactly one of an expression or --file");
    std::string text = circuit_file.empty() ? circuit_text : read_input(circuit_file);
    with_field(c.field, [&](const auto& f) { cmd_circuit_eval(f, text, assign, out); });
  }
  if (*oddtown_cmd) {
    auto r = oddtown_check(read_family(c.input));
    out.labelled("m", std::to_string(r.m));
    out.labelled("n", std::to_string(r.n));
    out.labelled("rank_gf2", std::to_string(r.rank_gf2));
    out.labelled("bound", r.bound_holds ? "holds" : "fails");
    out.flush();
    expect(r.ok(), "oddtown certificate failed");
    return 0;
  }
  if (*fisher_cmd) {
    auto r = fisher_check(read_family(c.input), lambda);
    out.labelled("m", std::to_string(r.m));
    out.labelled("n", std::to_string(r.n));
    out.labelled("gram_det", r.gram_det.get_str());
    out.labelled("bound", r.bound_holds ? "holds" : "fails");
    out.flush();
    expect(r.ok(), "Fisher certificate failed");
    return 0;
  }
  if (*gp_cmd) {
    auto t = io::parse_bicliques(read_input(c.input));
    std::vector<Biclique> parts;
    for (auto& b : t.bicliques) parts.push_back({std::move(b.left), std::move(b.right)});
    auto r = graham_pollak_check(t.n, parts);
    out.labelled("n", std::to_string(r.n));
    out.labelled("count", std::to_string(r.count));
    out.labelled("rank", std::to_string(r.rank));
    out.labelled("bound", r.bound_holds ? "holds" : "fails");
    out.flush();
    expect(r.ok(), "Graham-Pollak certificate failed");
    return 0;
  }
  if (*rcw_cmd) {
    std::vector<std::size_t> sizes;
    std::stringstream ss(sizes_text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("--L expects comma-separated nonnegative integers, got '" + sizes_text + "'");
      sizes.push_back(std::stoul(item));
    }
    auto r = rcw_verify(read_family(c.input), sizes);
    out.labelled("m", std::to_string(r.m));
    out.labelled("bound", r.bound.get_str());
    out.labelled("U_upper_triangular", r.upper_triangular ? "yes" : "no");
    out.labelled("U_diagonal_nonzero", r.diagonal_nonzero ? "yes" : "no");
    out.labelled("U_equals_CM", r.factorization_holds ? "yes" : "no");
    out.labelled("m_le_bound", r.bound_holds ? "yes" : "no");
    out.flush();
    expect(r.ok(), "Ray-Chaudhuri-Wilson certificate failed");
    return 0;
  }
  if (*or_cmd) {
    auto spec = or_poly_mod_pe(or_k, or_p, or_e);
    std::vector<std::string> coeffs;
    for (auto v : spec.coeffs) coeffs.push_back(std::to_string(v));
    out.labelled("modulus", std::to_string(spec.modulus));
    out.list("coeffs", coeffs, true);
    std::vector<std::string> values;
    for (std::size_t j = 0; j <= spec.verified_up_to; ++j) {
      std::vector<bool> x(spec.verified_up_to, false);
      std::fill(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(j), true);
      values.push_back(std::to_string(eval_symmetric(spec, x)));
    }
    out.list("values", values, true);
  }
  if (*ramsey_cmd) {
    EdgeRule rule;
    if (rule_text == "zero-mod-3")
      rule = EdgeRule::zero_mod_3;
    else if (rule_text == "zero-mod-2")
      rule = EdgeRule::zero_mod_2;
    else
      throw UsageError("--rule must be zero-mod-3 or zero-mod-2");
    auto g = grolmusz_graph(ramsey_k, cap, rule);
    auto r = ramsey_check(g.graph, g.rank2, g.rank3);
    out.labelled("vertices", std::to_string(g.graph.n));
    out.labelled("rule", to_string(rule));
    out.labelled("codiagonal", g.codiagonal ? "yes" : "no");
    out.labelled("rank_z2", std::to_string(g.rank2));
    out.labelled("rank_z3", std::to_string(g.rank3));
    out.labelled("clique", std::to_string(r.clique) + " <= " + std::to_string(r.clique_bound));
    out.labelled("independence", std::to_string(r.independence) + " <= " + r.independence_bound.get_str());
    if (show_graph) {
      std::vector<std::string> rows;
      for (std::size_t i = 0; i < g.graph.n; ++i) {
        std::string row;
        for (std::size_t j = 0; j < g.graph.n; ++j) row += g.graph.edge(i, j) ? '1' : '0';
        rows.push_back(row);
      }
      out.block("graph", rows);
    }
    out.flush();
    expect(g.codiagonal && r.ok(), "Ramsey certificate failed");
    return 0;
  }
  if (*selftest_cmd) {
    selftest::Options o{c.seed, c.threads};
    std::vector<selftest::CriterionResult> results;
    if (criterion)
      results.push_back(selftest::run_criterion(*criterion, o));
    else
      results = selftest::run_all(o);
    bool all = true;
    json items = json::array();
    for (const auto& r : results) {
      all = all && r.passed();
      if (c.json) {
        json item = {{"id", std::to_string(r.id)}, {"name", r.name}, {"passed", r.passed() ? "true" : "false"},
                     {"detail", r.detail}};
        if (timing) item["seconds"] = std::to_string(r.seconds);
        items.push_back(std::move(item));
      } else {
        std::cout << selftest::format(r, timing) << '\n';
      }
    }
    if (c.json) {
      out.raw("criteria", items);
      out.flush();
    }
    return all ? 0 : 1;
  }
  out.flush();
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const CheckFailed& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const dfla::PreconditionViolated& e) {
    std::cerr << "precondition violated: " << e.what() << '\n';
    return 1;
  } catch (const dfla::Unsolvable& e) {
    std::cerr << "check failed: " << e.what() << '\n';
    return 1;
  } catch (const dfla::InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 1;
  } catch (const dfla::ParseError& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return 2;
  } catch (const UsageError& e) {
    std::cerr << "usage: " << e.what() << '\n';
    return 2;
  } catch (const dfla::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
}
