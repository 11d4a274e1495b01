#pragma once

#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_p5/colouring.hpp"
#include "ramsey_p5/detail/text.hpp"

namespace ramsey_p5 {

inline constexpr std::string_view certificate_header = "RAMSEY-P5 v1";
inline constexpr std::string_view mono_p5_free_claim = "mono-p5-free";

// Serialized colouring plus the property it claims. `notes` are the trailing
// `#` comment lines without the leading '#'.
struct Certificate {
  EdgeColouring colouring;
  std::string claim = std::string(mono_p5_free_claim);
  std::vector<std::string> notes;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

inline std::string write_certificate(const Certificate& cert) {
  const EdgeColouring& c = cert.colouring;
  std::ostringstream os;
  os << certificate_header << '\n';
  os << "n=" << c.order() << " r=" << c.colours() << '\n';
  os << "claim=" << cert.claim << '\n';
  for (int i = 0; i < c.order(); ++i)
    for (int j = i + 1; j < c.order(); ++j) os << i << ' ' << j << ' ' << c.colour(i, j) << '\n';
  for (const auto& note : cert.notes) os << '#' << note << '\n';
  return os.str();
}

inline Certificate read_certificate(std::string_view text) {
  const auto lines = detail::strict_lines(text);
  if (lines.size() < 3) throw parse_error(lines.size() + 1, "truncated header");
  if (lines[0] != certificate_header)
    throw parse_error(1, "expected '" + std::string(certificate_header) + "'");

  const auto size_tokens = detail::split_spaces(lines[1]);
  if (size_tokens.size() != 2) throw parse_error(2, "expected 'n=<n> r=<r>'");
  const long long n = detail::parse_keyed(size_tokens[0], "n", 2);
  const long long r = detail::parse_keyed(size_tokens[1], "r", 2);
  if (n > Graph::max_order) throw parse_error(2, "order above 64");
  if (r < 1 || r > 255) throw parse_error(2, "colour count outside 1..255");

  if (lines[2].substr(0, 6) != "claim=") throw parse_error(3, "expected 'claim=<property>'");
  Certificate cert;
  cert.claim = std::string(lines[2].substr(6));
  if (cert.claim != mono_p5_free_claim) throw parse_error(3, "unknown claim '" + cert.claim + "'");

  cert.colouring = EdgeColouring(static_cast<int>(n), static_cast<int>(r));
  std::size_t at = 3;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++at) {
      const std::size_t number = at + 1;
      if (at >= lines.size()) throw parse_error(number, "missing colour for pair " + std::to_string(i) + " " + std::to_string(j));
      const auto tokens = detail::split_spaces(lines[at]);
      if (tokens.size() != 3) throw parse_error(number, "expected '<i> <j> <c>'");
      const long long a = detail::parse_number(tokens[0], number);
      const long long b = detail::parse_number(tokens[1], number);
      const long long colour = detail::parse_number(tokens[2], number);
      if (a != i || b != j)
        throw parse_error(number, "expected pair " + std::to_string(i) + " " + std::to_string(j));
      if (colour < 1 || colour > r) throw parse_error(number, "colour outside 1.." + std::to_string(r));
      cert.colouring.set(i, j, static_cast<int>(colour));
    }
  for (; at < lines.size(); ++at) {
    if (lines[at].empty() || lines[at].front() != '#')
      throw parse_error(at + 1, "only '#' comment lines may follow the colour map");
    cert.notes.emplace_back(lines[at].substr(1));
  }
  return cert;
}

struct CertificateVerdict {
  bool holds = false;
  std::optional<MonoPath> witness;  // set when the claim is violated
};

inline CertificateVerdict verify_certificate(const Certificate& cert) {
  CertificateVerdict v;
  v.witness = find_mono_p5(cert.colouring);
  v.holds = !v.witness.has_value();
  return v;
}

}  // namespace ramsey_p5
