#pragma once

#include <algorithm>
#include <charconv>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_p5/error.hpp"

namespace ramsey_p5::detail {

// Splits LF-terminated text into lines. Rejects CR, a missing final LF and
// trailing whitespace, since the formats are byte-exact.
inline std::vector<std::string_view> strict_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  if (text.empty()) throw parse_error(1, "empty input");
  if (text.back() != '\n')
    throw parse_error(static_cast<std::size_t>(std::count(text.begin(), text.end(), '\n')) + 1, "missing final line feed");
  std::size_t start = 0;
  while (start < text.size()) {
    const std::size_t end = text.find('\n', start);
    std::string_view line = text.substr(start, end - start);
    const std::size_t number = lines.size() + 1;
    if (line.find('\r') != std::string_view::npos) throw parse_error(number, "carriage return");
    if (!line.empty() && (line.back() == ' ' || line.back() == '\t'))
      throw parse_error(number, "trailing whitespace");
    lines.push_back(line);
    start = end + 1;
  }
  return lines;
}

inline std::vector<std::string_view> split_spaces(std::string_view line) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < line.size()) {
    const std::size_t j = line.find(' ', i);
    const std::size_t stop = j == std::string_view::npos ? line.size() : j;
    out.push_back(line.substr(i, stop - i));
    i = stop + 1;
    if (j != std::string_view::npos && i == line.size()) out.emplace_back();
  }
  return out;
}

// Canonical decimal only: no sign, no leading zeros.
inline long long parse_number(std::string_view token, std::size_t line) {
  if (token.empty()) throw parse_error(line, "expected a number");
  if (token.size() > 1 && token.front() == '0')
    throw parse_error(line, "leading zero in '" + std::string(token) + "'");
  long long value = 0;
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw parse_error(line, "bad number '" + std::string(token) + "'");
  return value;
}

// Parses `key=<number>`.
inline long long parse_keyed(std::string_view token, std::string_view key, std::size_t line) {
  if (token.size() <= key.size() + 1 || token.substr(0, key.size()) != key || token[key.size()] != '=')
    throw parse_error(line, "expected " + std::string(key) + "=<number>");
  return parse_number(token.substr(key.size() + 1), line);
}

}  // namespace ramsey_p5::detail
