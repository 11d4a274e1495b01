#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <chrono>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_set>
#include <utility>
#include <vector>

#include "ramsey_p5/budget.hpp"
#include "ramsey_p5/certificate.hpp"
#include "ramsey_p5/colouring.hpp"
#include "ramsey_p5/turan.hpp"

namespace ramsey_p5 {

constexpr int search_max_order = 12;
constexpr int search_max_colours = 4;

struct SearchConfig {
  Budget budget = Budget::unlimited();
  bool p5_pruning = true;       // reject a colour as soon as its class holds a P5
  bool turan_bound = true;      // class sizes capped at ex(n, P5), plus total capacity
  bool colour_symmetry = true;  // colour c is first used only after colour c-1
  int isomorph_depth = 6;       // memoise explored K_w prefixes up to isomorphism, w <= depth
  int jobs = 1;

  static SearchConfig unpruned() {
    SearchConfig c;
    c.p5_pruning = false;
    c.turan_bound = false;
    c.colour_symmetry = false;
    c.isomorph_depth = 0;
    return c;
  }
};

enum class Outcome { refuted, witness, budget_exhausted };

inline const char* to_string(Outcome o) {
  switch (o) {
    case Outcome::refuted: return "refuted";
    case Outcome::witness: return "witness";
    case Outcome::budget_exhausted: return "budget-exhausted";
  }
  return "?";
}

struct SearchStats {
  std::uint64_t nodes = 0;
  int max_depth = 0;  // most edges coloured at once
  double seconds = 0;
  int workers = 1;
};

// refuted: every r-colouring of K_n has a monochromatic P5 (exhaustive).
// witness: `certificate` holds a colouring without one.
struct Verdict {
  int n = 0;
  int r = 0;
  Outcome outcome = Outcome::budget_exhausted;
  std::optional<Certificate> certificate;
  SearchStats stats;

  // Node counts are reproducible only with one worker and a node budget.
  bool deterministic() const { return stats.workers == 1; }
};

namespace detail {

using row_t = std::uint32_t;

// Whether the class with rows `adj`, which contains edge uv, has a path on
// `t` vertices through that edge. Grows the path at either end.
inline bool path_through(const row_t* adj, int left, int right, row_t used, int remaining) {
  if (remaining == 0) return true;
  for (row_t m = adj[left] & ~used; m; m &= m - 1) {
    const int w = std::countr_zero(m);
    if (path_through(adj, w, right, used | (row_t{1} << w), remaining - 1)) return true;
  }
  for (row_t m = adj[right] & ~used; m; m &= m - 1) {
    const int w = std::countr_zero(m);
    if (path_through(adj, left, w, used | (row_t{1} << w), remaining - 1)) return true;
  }
  return false;
}

struct SearchShared {
  SearchConfig cfg;
  int n = 0;
  int r = 0;
  std::vector<std::pair<int, int>> edges;  // vertex-by-vertex order
  std::vector<int> prefix_end;             // prefix_end[w]: edges inside K_w
  long long cap = 0;                       // ex(n, P5)
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> stop{false};
  std::atomic<bool> exhausted{false};
  std::mutex found_mutex;
  std::optional<std::vector<std::uint8_t>> found;

  // Counts a node; true when the search must stop.
  bool charge() {
    const std::uint64_t k = nodes.fetch_add(1, std::memory_order_relaxed) + 1;
    const Budget& b = cfg.budget;
    const bool over = (b.node_limit && k > b.node_limit) ||
                      (b.seconds && (k & 0xFFF) == 0 &&
                       std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count() > *b.seconds);
    if (over) exhausted.store(true);
    if (over || stop.load(std::memory_order_relaxed)) {
      nodes.fetch_sub(1, std::memory_order_relaxed);  // a refused node is not visited
      stop.store(true);
      return true;
    }
    return false;
  }
};

// Canonical code of the coloured K_w on the first w vertices, up to vertex
// and colour permutations: minimum over vertex orders of the edge colour
// sequence with colours renamed by first appearance. w <= 6.
inline std::uint64_t prefix_key(const std::vector<std::uint8_t>& colour, int w, const std::vector<int>& index_of) {
  std::array<int, 8> perm{};
  std::iota(perm.begin(), perm.begin() + w, 0);
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::array<int, 8> rename{};
    int next = 0;
    std::uint64_t code = 0;
    for (int b = 1; b < w; ++b)
      for (int a = 0; a < b; ++a) {
        const int x = perm[static_cast<std::size_t>(a)], y = perm[static_cast<std::size_t>(b)];
        const int e = index_of[static_cast<std::size_t>(std::min(x, y) * 64 + std::max(x, y))];
        int& c = rename[colour[static_cast<std::size_t>(e)]];
        if (c == 0) c = ++next;
        code = (code << 2) | static_cast<std::uint64_t>(c - 1);
        if (code > (best >> (2 * (w * (w - 1) / 2 - (b * (b - 1) / 2 + a + 1))))) goto next_perm;
      }
    best = std::min(best, code);
  next_perm:;
  } while (std::next_permutation(perm.begin(), perm.begin() + w));
  return best;
}

class SearchWorker {
 public:
  explicit SearchWorker(SearchShared& shared) : s_(shared) {
    colour_.assign(s_.edges.size(), 0);
    index_of_.assign(64 * 64, -1);
    for (std::size_t e = 0; e < s_.edges.size(); ++e)
      index_of_[static_cast<std::size_t>(s_.edges[e].first * 64 + s_.edges[e].second)] = static_cast<int>(e);
    memo_.resize(static_cast<std::size_t>(s_.n) + 1);
  }

  // Depth-first from edge k. True when a witness was recorded.
  bool dfs(int k) {
    const int total = static_cast<int>(s_.edges.size());
    max_depth_ = std::max(max_depth_, k);
    if (k == total) return accept_leaf();
    if (split_at_ && k == *split_at_) {
      prefixes_.emplace_back(colour_.begin(), colour_.begin() + k);
      return false;
    }

    std::optional<std::uint64_t> key;
    const int w = completed_prefix(k);
    if (w >= 3 && w <= s_.cfg.isomorph_depth && !split_at_) {
      key = prefix_key(colour_, w, index_of_);
      if (memo_[static_cast<std::size_t>(w)].contains(*key)) return false;
    }

    const auto [u, v] = s_.edges[static_cast<std::size_t>(k)];
    const int limit = s_.cfg.colour_symmetry ? std::min(s_.r, max_used_ + 1) : s_.r;
    for (int c = 1; c <= limit; ++c) {
      if (s_.charge()) return false;
      if (s_.cfg.turan_bound && count_[c] + 1 > s_.cap) continue;
      assign(k, u, v, c);
      const bool bad = s_.cfg.p5_pruning &&
                       path_through(adj_[static_cast<std::size_t>(c)].data(), u, v,
                                    (row_t{1} << u) | (row_t{1} << v), 3);
      if (!bad && dfs(k + 1)) return true;
      unassign(k, u, v, c);
      if (s_.stop.load(std::memory_order_relaxed)) return false;
    }
    if (key) memo_[static_cast<std::size_t>(w)].insert(*key);
    return false;
  }

  // Replays a prefix produced by a splitting run.
  void replay(const std::vector<std::uint8_t>& prefix) {
    for (std::size_t k = 0; k < prefix.size(); ++k) {
      const auto [u, v] = s_.edges[k];
      assign(static_cast<int>(k), u, v, prefix[k]);
    }
  }

  void split_at(int depth) { split_at_ = depth; }
  std::vector<std::vector<std::uint8_t>>& prefixes() { return prefixes_; }
  int max_depth() const { return max_depth_; }

 private:
  // w when the first k edges are exactly those of K_w, else 0.
  int completed_prefix(int k) const {
    for (int w = 0; w < static_cast<int>(s_.prefix_end.size()); ++w)
      if (s_.prefix_end[static_cast<std::size_t>(w)] == k) return w;
    return 0;
  }

  void assign(int k, int u, int v, int c) {
    colour_[static_cast<std::size_t>(k)] = static_cast<std::uint8_t>(c);
    adj_[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)] |= row_t{1} << v;
    adj_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] |= row_t{1} << u;
    ++count_[c];
    used_stack_.push_back(max_used_);
    max_used_ = std::max(max_used_, c);
  }

  void unassign(int k, int u, int v, int c) {
    colour_[static_cast<std::size_t>(k)] = 0;
    adj_[static_cast<std::size_t>(c)][static_cast<std::size_t>(u)] &= ~(row_t{1} << v);
    adj_[static_cast<std::size_t>(c)][static_cast<std::size_t>(v)] &= ~(row_t{1} << u);
    --count_[c];
    max_used_ = used_stack_.back();
    used_stack_.pop_back();
  }

  bool accept_leaf() {
    if (!s_.cfg.p5_pruning) {
      EdgeColouring c(s_.n, s_.r);
      for (std::size_t e = 0; e < s_.edges.size(); ++e) c.set(s_.edges[e].first, s_.edges[e].second, colour_[e]);
      if (find_mono_p5(c)) return false;
    }
    std::lock_guard lock(s_.found_mutex);
    if (!s_.found) s_.found = colour_;
    s_.stop.store(true);
    return true;
  }

  SearchShared& s_;
  std::vector<std::uint8_t> colour_;
  std::vector<int> index_of_;
  std::array<std::array<row_t, 32>, search_max_colours + 1> adj_{};
  std::array<long long, search_max_colours + 1> count_{};
  int max_used_ = 0;
  std::vector<int> used_stack_;
  int max_depth_ = 0;
  std::optional<int> split_at_;
  std::vector<std::vector<std::uint8_t>> prefixes_;
  std::vector<std::unordered_set<std::uint64_t>> memo_;
};

}  // namespace detail

// Exhaustive search for an r-colouring of K_n with no monochromatic P5.
// Edges are coloured vertex by vertex, so each prefix is a full colouring of
// some K_w. Budget exhaustion is an outcome, not an error.
inline Verdict ramsey_verify(int n, int r, const SearchConfig& cfg = {}) {
  if (n < 0 || n > search_max_order || r < 1 || r > search_max_colours)
    throw parameters_out_of_range("search supports n <= 12 and 1 <= r <= 4, got n=" + std::to_string(n) +
                                  " r=" + std::to_string(r));
  if (cfg.jobs < 1) throw std::invalid_argument("jobs must be >= 1");
  detail::SearchShared shared;
  shared.cfg = cfg;
  shared.n = n;
  shared.r = r;
  shared.cap = ex_p5(n);
  for (int v = 1; v < n; ++v)
    for (int u = 0; u < v; ++u) shared.edges.emplace_back(u, v);
  for (int w = 0; w <= n; ++w) shared.prefix_end.push_back(w * (w - 1) / 2);

  Verdict out;
  out.n = n;
  out.r = r;
  const long long pairs = static_cast<long long>(shared.edges.size());
  const bool capacity_fails = cfg.turan_bound && static_cast<long long>(r) * shared.cap < pairs;

  int max_depth = 0;
  if (!capacity_fails) {
    if (cfg.jobs == 1) {
      detail::SearchWorker worker(shared);
      worker.dfs(0);
      max_depth = worker.max_depth();
    } else {
      // Split below the first vertices' edges and hand subtrees to workers.
      detail::SearchWorker splitter(shared);
      const int split = std::min<int>(static_cast<int>(shared.edges.size()), 6);
      splitter.split_at(split);
      splitter.dfs(0);
      auto prefixes = std::move(splitter.prefixes());
      max_depth = splitter.max_depth();
      std::atomic<std::size_t> next{0};
      std::vector<int> depths(static_cast<std::size_t>(cfg.jobs), 0);
      std::vector<std::thread> pool;
      for (int j = 0; j < cfg.jobs; ++j)
        pool.emplace_back([&, j] {
          for (std::size_t i; !shared.stop.load() && (i = next.fetch_add(1)) < prefixes.size();) {
            detail::SearchWorker worker(shared);
            worker.replay(prefixes[i]);
            worker.dfs(split);
            depths[static_cast<std::size_t>(j)] = std::max(depths[static_cast<std::size_t>(j)], worker.max_depth());
          }
        });
      for (auto& t : pool) t.join();
      max_depth = std::max(max_depth, *std::max_element(depths.begin(), depths.end()));
      out.stats.workers = cfg.jobs;
    }
  }

  out.stats.nodes = shared.nodes.load();
  out.stats.max_depth = max_depth;
  out.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - shared.start).count();

  if (shared.found) {
    Certificate cert;
    cert.colouring = EdgeColouring(n, r);
    for (std::size_t e = 0; e < shared.edges.size(); ++e)
      cert.colouring.set(shared.edges[e].first, shared.edges[e].second, (*shared.found)[e]);
    cert.notes.push_back(" found by exhaustive search");
    if (!verify_certificate(cert).holds) throw std::logic_error("search produced an invalid witness");
    out.outcome = Outcome::witness;
    out.certificate = std::move(cert);
  } else if (shared.exhausted.load()) {
    out.outcome = Outcome::budget_exhausted;
  } else {
    out.outcome = Outcome::refuted;
  }
  return out;
}

// key=value lines, then the certificate when there is one.
inline std::string report(const Verdict& v) {
  std::ostringstream os;
  os << "outcome=" << to_string(v.outcome) << '\n';
  os << "n=" << v.n << '\n' << "r=" << v.r << '\n';
  os << "nodes=" << v.stats.nodes << '\n';
  os << "depth=" << v.stats.max_depth << '\n';
  os << "seconds=" << v.stats.seconds << '\n';
  os << "workers=" << v.stats.workers << '\n';
  os << "mode=" << (v.deterministic() ? "deterministic" : "parallel") << '\n';
  if (v.certificate) os << write_certificate(*v.certificate);
  return os.str();
}

}  // namespace ramsey_p5
