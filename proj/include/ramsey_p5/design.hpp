#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "ramsey_p5/colouring.hpp"
#include "ramsey_p5/detail/text.hpp"
#include "ramsey_p5/graph.hpp"

namespace ramsey_p5 {

enum class DesignMode { steiner, covering, packing };

inline const char* to_string(DesignMode m) {
  switch (m) {
    case DesignMode::steiner: return "steiner";
    case DesignMode::covering: return "covering";
    case DesignMode::packing: return "packing";
  }
  return "?";
}

inline std::optional<DesignMode> parse_mode(std::string_view s) {
  if (s == "steiner") return DesignMode::steiner;
  if (s == "covering") return DesignMode::covering;
  if (s == "packing") return DesignMode::packing;
  return std::nullopt;
}

using Block = std::array<int, 4>;
using ParallelClass = std::vector<std::size_t>;  // indices into Design::blocks

// Pair-balanced design with k = 4, t = 2, lambda = 1. `mode` records the
// property the design claims; `resolution`, when present, splits the block
// indices into parallel classes.
struct Design {
  int v = 0;
  int k = 4;
  DesignMode mode = DesignMode::steiner;
  std::vector<Block> blocks;
  std::optional<std::vector<ParallelClass>> resolution;

  friend bool operator==(const Design&, const Design&) = default;
};

// Throws malformed_design on k != 4, out-of-range or repeated points.
inline void check_blocks(const Design& d) {
  if (d.k != 4) throw malformed_design("block size " + std::to_string(d.k) + " unsupported; only k=4");
  if (d.v < 0) throw malformed_design("negative point count");
  for (std::size_t b = 0; b < d.blocks.size(); ++b) {
    const Block& blk = d.blocks[b];
    for (std::size_t i = 0; i < blk.size(); ++i) {
      if (blk[i] < 0 || blk[i] >= d.v)
        throw malformed_design("block " + std::to_string(b) + " has point " + std::to_string(blk[i]) +
                               " outside 0.." + std::to_string(d.v - 1));
      for (std::size_t j = 0; j < i; ++j)
        if (blk[i] == blk[j])
          throw malformed_design("block " + std::to_string(b) + " repeats point " + std::to_string(blk[i]));
    }
  }
}

// Number of blocks containing each unordered pair.
class PairCoverage {
 public:
  explicit PairCoverage(const Design& d)
      : v_(d.v), counts_(static_cast<std::size_t>(d.v) * static_cast<std::size_t>(d.v), 0) {
    check_blocks(d);
    for (const Block& blk : d.blocks)
      for (std::size_t i = 0; i < blk.size(); ++i)
        for (std::size_t j = i + 1; j < blk.size(); ++j) {
          ++counts_[idx(blk[i], blk[j])];
          ++counts_[idx(blk[j], blk[i])];
        }
  }

  int at(int a, int b) const { return counts_[idx(a, b)]; }

  long long total() const {
    long long t = 0;
    for (int a = 0; a < v_; ++a)
      for (int b = a + 1; b < v_; ++b) t += at(a, b);
    return t;
  }

 private:
  std::size_t idx(int a, int b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(v_) + static_cast<std::size_t>(b);
  }
  int v_;
  std::vector<int> counts_;
};

struct PairViolation {
  int a = 0;
  int b = 0;
  int multiplicity = 0;
};

struct DesignVerdict {
  bool ok = true;
  std::vector<PairViolation> violations;
};

// steiner: every pair exactly once; covering: at least once; packing: at most once.
inline DesignVerdict verify_design(const Design& d, DesignMode mode) {
  const PairCoverage cover(d);
  DesignVerdict out;
  for (int a = 0; a < d.v; ++a)
    for (int b = a + 1; b < d.v; ++b) {
      const int m = cover.at(a, b);
      const bool good = mode == DesignMode::steiner ? m == 1 : mode == DesignMode::covering ? m >= 1 : m <= 1;
      if (!good) out.violations.push_back({a, b, m});
    }
  out.ok = out.violations.empty();
  return out;
}

inline DesignVerdict verify_design(const Design& d) { return verify_design(d, d.mode); }

struct ResolutionVerdict {
  bool ok = true;
  std::vector<std::string> problems;
};

inline ResolutionVerdict verify_resolution(const Design& d) {
  if (!d.resolution) throw missing_resolution("design carries no resolution");
  check_blocks(d);
  ResolutionVerdict out;
  auto fail = [&](std::string msg) {
    out.ok = false;
    out.problems.push_back(std::move(msg));
  };
  if (d.v % 4 != 0) fail("point count " + std::to_string(d.v) + " is not divisible by 4");
  std::vector<int> uses(d.blocks.size(), 0);
  for (std::size_t c = 0; c < d.resolution->size(); ++c) {
    std::vector<int> seen(static_cast<std::size_t>(d.v), 0);
    for (std::size_t bi : (*d.resolution)[c]) {
      if (bi >= d.blocks.size()) {
        fail("class " + std::to_string(c + 1) + " names missing block " + std::to_string(bi));
        continue;
      }
      ++uses[bi];
      for (int p : d.blocks[bi])
        if (seen[static_cast<std::size_t>(p)]++)
          fail("class " + std::to_string(c + 1) + " repeats point " + std::to_string(p));
    }
    for (int p = 0; p < d.v; ++p)
      if (!seen[static_cast<std::size_t>(p)]) fail("class " + std::to_string(c + 1) + " misses point " + std::to_string(p));
  }
  for (std::size_t b = 0; b < uses.size(); ++b)
    if (uses[b] != 1)
      fail("block " + std::to_string(b) + " lies in " + std::to_string(uses[b]) + " classes");
  return out;
}

// Pairs covered by no block. Requires a packing.
inline Graph leave_graph(const Design& d) {
  if (d.v > Graph::max_order) throw order_too_large("leave graph needs v <= 64");
  const DesignVerdict packing = verify_design(d, DesignMode::packing);
  if (!packing.ok)
    throw not_a_packing("pair " + std::to_string(packing.violations[0].a) + " " +
                        std::to_string(packing.violations[0].b) + " lies in " +
                        std::to_string(packing.violations[0].multiplicity) + " blocks");
  const PairCoverage cover(d);
  Graph g(d.v);
  for (int a = 0; a < d.v; ++a)
    for (int b = a + 1; b < d.v; ++b)
      if (cover.at(a, b) == 0) g.add_edge(a, b);
  return g;
}

// Point count of the lower-bound design for r colours:
// 3r (r = 0 mod 4), 3r+1 (r = 1 mod 4), 3r-1 (r = 3 mod 4).
inline long long g_of_r(long long r) {
  if (r < 1) throw std::invalid_argument("colour count must be >= 1");
  if (r == 4) throw unsupported_r("r=4 has no design route; it uses the dedicated K10 colouring");
  switch (r % 4) {
    case 0: return 3 * r;
    case 1: return 3 * r + 1;
    case 3: return 3 * r - 1;
    default: throw lift_path("r=" + std::to_string(r) + " is 2 mod 4; it is reached by lifting r-1");
  }
}

// Parallel-class count of the optimal resolvable design of each kind on v points.
inline std::optional<long long> expected_classes(long long v, DesignMode mode) {
  switch (mode) {
    case DesignMode::steiner:
      if (v % 12 == 4) return (v - 1) / 3;
      return std::nullopt;
    case DesignMode::covering:
      if (v % 12 == 0 && v != 12) return v / 3;
      if (v % 12 == 8) return (v + 1) / 3;
      return std::nullopt;
    case DesignMode::packing:
      if (v % 12 == 0 && v != 12) return (v - 3) / 3;
      if (v % 12 == 8 && v != 8 && v != 20) return (v - 2) / 3;
      return std::nullopt;
  }
  return std::nullopt;
}

// Colour of a pair is the smallest (1-based) class containing it; pairs in no
// block take `leave_colour` when given.
inline EdgeColouring design_to_colouring(const Design& d, std::optional<int> leave_colour = std::nullopt) {
  const ResolutionVerdict res = verify_resolution(d);
  if (!res.ok) throw malformed_design("not resolvable: " + res.problems.front());
  if (d.v > Graph::max_order) throw order_too_large("colouring needs v <= 64");
  const int classes = static_cast<int>(d.resolution->size());
  if (leave_colour && *leave_colour < 1) throw std::invalid_argument("leave colour must be >= 1");
  const int r = std::max({1, classes, leave_colour.value_or(0)});
  std::vector<int> colour(static_cast<std::size_t>(d.v) * static_cast<std::size_t>(d.v), 0);
  auto at = [&](int a, int b) -> int& {
    return colour[static_cast<std::size_t>(a) * static_cast<std::size_t>(d.v) + static_cast<std::size_t>(b)];
  };
  for (int c = classes; c >= 1; --c)
    for (std::size_t bi : (*d.resolution)[static_cast<std::size_t>(c - 1)]) {
      const Block& blk = d.blocks[bi];
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) {
          at(blk[i], blk[j]) = c;
          at(blk[j], blk[i]) = c;
        }
    }
  EdgeColouring out(d.v, r);
  for (int a = 0; a < d.v; ++a)
    for (int b = a + 1; b < d.v; ++b) {
      int c = at(a, b);
      if (c == 0) {
        if (!leave_colour)
          throw uncoloured_pair("pair " + std::to_string(a) + " " + std::to_string(b) +
                                " is in no block and no leave colour was given");
        c = *leave_colour;
      }
      out.set(a, b, c);
    }
  return out;
}

// Sorts points within blocks, blocks within classes, and stores blocks class
// by class. Non-resolvable designs just get their blocks sorted.
inline Design normalized(const Design& d) {
  Design out = d;
  for (Block& b : out.blocks) std::sort(b.begin(), b.end());
  if (!out.resolution) {
    std::sort(out.blocks.begin(), out.blocks.end());
    return out;
  }
  std::vector<Block> blocks;
  std::vector<ParallelClass> classes;
  for (const ParallelClass& pc : *out.resolution) {
    std::vector<Block> members;
    for (std::size_t bi : pc) members.push_back(out.blocks.at(bi));
    std::sort(members.begin(), members.end());
    ParallelClass idx;
    for (const Block& b : members) {
      idx.push_back(blocks.size());
      blocks.push_back(b);
    }
    classes.push_back(std::move(idx));
  }
  out.blocks = std::move(blocks);
  out.resolution = std::move(classes);
  return out;
}

inline std::string write_design(const Design& input) {
  const Design d = normalized(input);
  std::ostringstream os;
  os << "DESIGN v1\n";
  os << "v=" << d.v << " k=" << d.k << " mode=" << to_string(d.mode) << '\n';
  auto block_line = [&](const Block& b) { os << b[0] << ' ' << b[1] << ' ' << b[2] << ' ' << b[3] << '\n'; };
  if (!d.resolution) {
    os << "P 0\n";
    for (const Block& b : d.blocks) block_line(b);
    return os.str();
  }
  for (std::size_t c = 0; c < d.resolution->size(); ++c) {
    os << "P " << c + 1 << '\n';
    for (std::size_t bi : (*d.resolution)[c]) block_line(d.blocks[bi]);
  }
  return os.str();
}

inline Design read_design(std::string_view text) {
  const auto lines = detail::strict_lines(text);
  if (lines[0] != "DESIGN v1") throw parse_error(1, "expected 'DESIGN v1'");
  if (lines.size() < 2) throw parse_error(2, "missing parameter line");
  const auto params = detail::split_spaces(lines[1]);
  if (params.size() != 3 || params[2].substr(0, 5) != "mode=")
    throw parse_error(2, "expected 'v=<v> k=4 mode=<steiner|covering|packing>'");
  Design d;
  const long long v = detail::parse_keyed(params[0], "v", 2);
  const long long k = detail::parse_keyed(params[1], "k", 2);
  if (k != 4) throw parse_error(2, "only k=4 is supported");
  if (v > 100000) throw parse_error(2, "point count too large");
  d.v = static_cast<int>(v);
  const auto mode = parse_mode(params[2].substr(5));
  if (!mode) throw parse_error(2, "unknown mode '" + std::string(params[2].substr(5)) + "'");
  d.mode = *mode;

  std::vector<ParallelClass> classes;
  bool unresolved = false;
  std::optional<Block> previous;
  for (std::size_t at = 2; at < lines.size(); ++at) {
    const std::size_t number = at + 1;
    const auto tokens = detail::split_spaces(lines[at]);
    if (tokens.size() == 2 && tokens[0] == "P") {
      const long long c = detail::parse_number(tokens[1], number);
      if (c == 0) {
        if (at != 2) throw parse_error(number, "'P 0' must be the only section");
        unresolved = true;
      } else {
        if (unresolved) throw parse_error(number, "'P 0' must be the only section");
        if (c != static_cast<long long>(classes.size()) + 1)
          throw parse_error(number, "expected class " + std::to_string(classes.size() + 1));
        if (!classes.empty() && classes.back().size() * 4 != static_cast<std::size_t>(d.v))
          throw parse_error(number, "previous class has " + std::to_string(classes.back().size()) + " blocks");
        classes.emplace_back();
      }
      previous.reset();
      continue;
    }
    if (tokens.size() != 4) throw parse_error(number, "expected 'P <c>' or four points");
    if (!unresolved && classes.empty()) throw parse_error(number, "block before any 'P' section");
    Block b{};
    for (std::size_t i = 0; i < 4; ++i) {
      const long long p = detail::parse_number(tokens[i], number);
      if (p >= v) throw parse_error(number, "point " + std::to_string(p) + " outside 0.." + std::to_string(v - 1));
      b[i] = static_cast<int>(p);
      if (i > 0 && b[i] <= b[i - 1]) throw parse_error(number, "points must be strictly ascending");
    }
    if (previous && !(*previous < b)) throw parse_error(number, "blocks must be strictly ascending");
    previous = b;
    if (!unresolved) classes.back().push_back(d.blocks.size());
    d.blocks.push_back(b);
  }
  if (!unresolved && classes.empty()) throw parse_error(lines.size(), "no 'P' section");
  if (!unresolved && classes.back().size() * 4 != static_cast<std::size_t>(d.v))
    throw parse_error(lines.size(), "last class has " + std::to_string(classes.back().size()) + " blocks");
  if (!unresolved) d.resolution = std::move(classes);
  return d;
}

}  // namespace ramsey_p5
