#pragma once

// Text formats. A matrix file is a header line "m n" followed by m lines of
// n whitespace-separated element literals; blank lines and lines starting
// with '#' are ignored. Elements of F(X) are parenthesized "(num / den)"
// groups so that they tokenize as one literal. Errors carry 1-based line and
// column positions.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "dfla/error.hpp"
#include "dfla/field.hpp"
#include "dfla/matrix.hpp"
#include "dfla/text.hpp"

namespace dfla::io {

struct Line {
  std::size_t number;
  std::string_view text;
};

/// Content lines with their 1-based numbers.
inline std::vector<Line> content_lines(std::string_view s) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!s.empty() || number == 0) {
    ++number;
    auto nl = s.find('\n');
    std::string_view line = s.substr(0, nl);
    s = nl == std::string_view::npos ? std::string_view{} : s.substr(nl + 1);
    auto t = text::trim(line);
    if (!t.empty() && t.front() != '#') out.push_back({number, line});
    if (nl == std::string_view::npos) break;
  }
  return out;
}

inline std::size_t column_of(const Line& line, std::string_view token) {
  return static_cast<std::size_t>(token.data() - line.text.data()) + 1;
}

inline std::vector<std::string_view> tokens_of(const Line& line) {
  try {
    return text::split_tokens(line.text);
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line.number);
  }
}

inline std::size_t parse_count(const Line& line, std::string_view token, const char* what) {
  std::size_t value = 0;
  if (token.empty()) throw ParseError(std::string("missing ") + what, line.number);
  for (char c : token) {
    if (c < '0' || c > '9') throw ParseError(std::string("expected a nonnegative integer ") + what, line.number, column_of(line, token));
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 1'000'000) throw ParseError(std::string(what) + " is too large", line.number, column_of(line, token));
  }
  return value;
}

/// Reads "a b" from a header line.
inline std::pair<std::size_t, std::size_t> parse_header(const Line& line, const char* first, const char* second) {
  auto tokens = tokens_of(line);
  if (tokens.size() != 2)
    throw ParseError(std::string("header must be '") + first + " " + second + "'", line.number,
                     tokens.size() > 2 ? column_of(line, tokens[2]) : 0);
  return {parse_count(line, tokens[0], first), parse_count(line, tokens[1], second)};
}

template <Field F>
MatrixOf<F> parse_matrix(const F& f, std::string_view input) {
  auto lines = content_lines(input);
  if (lines.empty()) throw ParseError("empty input: expected header 'm n'", 1);
  auto [m, n] = parse_header(lines[0], "m", "n");
  MatrixOf<F> out(m, n, f.zero());
  // Rows of an m x 0 matrix are empty, so they have no lines.
  const std::size_t row_lines = n == 0 ? 0 : m;
  for (std::size_t i = 0; i < row_lines; ++i) {
    if (i + 1 >= lines.size()) {
      std::size_t at = lines.back().number + 1;
      throw ParseError("expected " + std::to_string(m) + " rows, found " + std::to_string(i), at);
    }
    const Line& line = lines[i + 1];
    auto tokens = tokens_of(line);
    if (tokens.size() != n)
      throw ParseError("expected " + std::to_string(n) + " entries, found " + std::to_string(tokens.size()), line.number,
                       tokens.size() > n ? column_of(line, tokens[n]) : line.text.size() + 1);
    for (std::size_t j = 0; j < n; ++j) {
      try {
        out(i, j) = f.parse(tokens[j]);
      } catch (const ParseError& e) {
        throw ParseError(e.what(), line.number, column_of(line, tokens[j]));
      }
    }
  }
  if (lines.size() > row_lines + 1)
    throw ParseError("unexpected content after the last row", lines[row_lines + 1].number, 1);
  return out;
}

template <Ring R>
std::string print_matrix(const R& r, const MatrixOf<R>& a) {
  std::string out = std::to_string(a.rows()) + " " + std::to_string(a.cols()) + "\n";
  if (a.cols() == 0) return out;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (j) out += ' ';
      out += text::group(r.to_string(a(i, j)));
    }
    out += '\n';
  }
  return out;
}

/// A vector is read as a matrix file with a single column.
template <Field F>
std::vector<ElementOf<F>> parse_vector(const F& f, std::string_view input) {
  auto a = parse_matrix(f, input);
  if (a.cols() != 1) throw ParseError("a vector file must have exactly one column", 1);
  return column(a, 0);
}

// ---------------------------------------------------------------------------
// Set families: header "n m", then m lines of n bits ('0'/'1', spaces allowed).

struct SetFamilyText {
  std::size_t n = 0;
  std::vector<std::vector<bool>> members;
};

inline SetFamilyText parse_set_family(std::string_view input) {
  auto lines = content_lines(input);
  if (lines.empty()) throw ParseError("empty input: expected header 'n m'", 1);
  auto [n, m] = parse_header(lines[0], "n", "m");
  SetFamilyText out{n, {}};
  for (std::size_t i = 0; i < m; ++i) {
    if (i + 1 >= lines.size())
      throw ParseError("expected " + std::to_string(m) + " members, found " + std::to_string(i), lines.back().number + 1);
    const Line& line = lines[i + 1];
    std::vector<bool> bits;
    for (std::size_t c = 0; c < line.text.size(); ++c) {
      char ch = line.text[c];
      if (text::is_space(ch)) continue;
      if (ch != '0' && ch != '1') throw ParseError("expected a bit", line.number, c + 1);
      if (bits.size() == n) throw ParseError("more than " + std::to_string(n) + " bits", line.number, c + 1);
      bits.push_back(ch == '1');
    }
    if (bits.size() != n)
      throw ParseError("expected " + std::to_string(n) + " bits, found " + std::to_string(bits.size()), line.number);
    out.members.push_back(std::move(bits));
  }
  if (lines.size() > m + 1) throw ParseError("unexpected content after the last member", lines[m + 1].number, 1);
  return out;
}

inline std::string print_bit_rows(const std::vector<std::vector<bool>>& rows) {
  std::string out;
  for (const auto& row : rows) {
    for (bool b : row) out += b ? '1' : '0';
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Biclique partitions: header "n b", then b lines "L | R" listing 1-based
// vertices of the two sides.

struct BicliqueText {
  std::vector<std::size_t> left;
  std::vector<std::size_t> right;
};

struct BicliquePartitionText {
  std::size_t n = 0;
  std::vector<BicliqueText> bicliques;
};

inline BicliquePartitionText parse_bicliques(std::string_view input) {
  auto lines = content_lines(input);
  if (lines.empty()) throw ParseError("empty input: expected header 'n b'", 1);
  auto [n, b] = parse_header(lines[0], "n", "b");
  BicliquePartitionText out{n, {}};
  for (std::size_t i = 0; i < b; ++i) {
    if (i + 1 >= lines.size())
      throw ParseError("expected " + std::to_string(b) + " bicliques, found " + std::to_string(i), lines.back().number + 1);
    const Line& line = lines[i + 1];
    BicliqueText bc;
    bool seen_bar = false;
    for (auto token : tokens_of(line)) {
      if (token == "|") {
        if (seen_bar) throw ParseError("more than one '|'", line.number, column_of(line, token));
        seen_bar = true;
        continue;
      }
      std::size_t v = parse_count(line, token, "vertex");
      if (v < 1 || v > n) throw ParseError("vertex outside [1, n]", line.number, column_of(line, token));
      (seen_bar ? bc.right : bc.left).push_back(v);
    }
    if (!seen_bar) throw ParseError("expected 'L | R'", line.number);
    out.bicliques.push_back(std::move(bc));
  }
  if (lines.size() > b + 1) throw ParseError("unexpected content after the last biclique", lines[b + 1].number, 1);
  return out;
}

}  // namespace dfla::io
