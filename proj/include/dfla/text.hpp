#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dfla/error.hpp"

namespace dfla::text {

inline bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && is_space(s.front())) s.remove_prefix(1);
  while (!s.empty() && is_space(s.back())) s.remove_suffix(1);
  return s;
}

/// Splits on whitespace outside parentheses. "(1 2) 3" -> {"(1 2)", "3"}.
inline std::vector<std::string_view> split_tokens(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    if (i == s.size()) break;
    std::size_t start = i;
    int depth = 0;
    while (i < s.size() && (depth > 0 || !is_space(s[i]))) {
      if (s[i] == '(') ++depth;
      if (s[i] == ')') {
        if (depth == 0) throw ParseError("unbalanced ')'");
        --depth;
      }
      ++i;
    }
    if (depth != 0) throw ParseError("unbalanced '('");
    out.push_back(s.substr(start, i - start));
  }
  return out;
}

/// Removes one pair of enclosing parentheses if they wrap the whole string.
inline std::string_view strip_parens(std::string_view s) {
  s = trim(s);
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return s;
  int depth = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') ++depth;
    if (s[i] == ')') --depth;
    if (depth == 0 && i + 1 < s.size()) return s;
  }
  return trim(s.substr(1, s.size() - 2));
}

/// Wraps a printed value in parentheses when it would not survive
/// whitespace tokenization on its own.
inline std::string group(const std::string& s) {
  for (char c : s)
    if (is_space(c)) return "(" + s + ")";
  return s;
}

}  // namespace dfla::text
