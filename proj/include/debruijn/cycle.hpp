#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "debruijn/error.hpp"
#include "debruijn/graph.hpp"

namespace debruijn {

/// A Hamiltonian cycle of the digraph, stored in aligned form: the rotation
/// that starts at vertex 0. Aligned sequences are the canonical identity used
/// by every set, map and comparison in this library.
struct DeBruijnCycle {
  DigraphParams params;
  std::vector<Vertex> verts;

  Vertex size() const noexcept { return static_cast<Vertex>(verts.size()); }

  /// 1-based access, matching the position conventions of cross-join moves.
  Vertex at(Vertex pos) const { return verts[static_cast<std::size_t>(pos - 1)]; }

  bool operator==(const DeBruijnCycle& o) const noexcept {
    return params == o.params && verts == o.verts;
  }
};

inline bool operator<(const DeBruijnCycle& a, const DeBruijnCycle& b) {
  if (a.params.n != b.params.n) return a.params.n < b.params.n;
  if (a.params.d != b.params.d) return a.params.d < b.params.d;
  return a.verts < b.verts;
}

struct VertexSeqHash {
  std::size_t operator()(const std::vector<Vertex>& v) const noexcept {
    std::uint64_t h = 1469598103934665603ull;
    for (Vertex x : v) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

/// Rotates a vertex sequence so it starts at 0. The sequence must contain 0
/// exactly once.
inline std::vector<Vertex> align(std::vector<Vertex> raw) {
  const auto zeros = std::count(raw.begin(), raw.end(), Vertex{0});
  if (zeros == 0) throw invalid_input("cycle does not contain vertex 0");
  if (zeros > 1) throw invalid_input("vertex 0 appears more than once");
  auto it = std::find(raw.begin(), raw.end(), Vertex{0});
  std::rotate(raw.begin(), it, raw.end());
  return raw;
}

/// Checks all three cycle invariants (starts at 0 after alignment, all N
/// vertices distinct, every consecutive pair including the wrap is an edge)
/// and returns the aligned cycle.
inline DeBruijnCycle validate(const DigraphParams& p, std::vector<Vertex> raw) {
  if (static_cast<Vertex>(raw.size()) != p.n)
    throw invalid_input("cycle has " + std::to_string(raw.size()) + " vertices, expected N=" +
                        std::to_string(p.n));
  for (Vertex v : raw) check_vertex(p, v);
  raw = align(std::move(raw));
  std::vector<char> seen(static_cast<std::size_t>(p.n), 0);
  for (Vertex v : raw) {
    if (seen[static_cast<std::size_t>(v)])
      throw invalid_input("vertex " + std::to_string(v) + " repeated in cycle");
    seen[static_cast<std::size_t>(v)] = 1;
  }
  for (Vertex t = 0; t < p.n; ++t) {
    const Vertex a = raw[static_cast<std::size_t>(t)];
    const Vertex b = raw[static_cast<std::size_t>((t + 1) % p.n)];
    if (!is_edge(p, a, b))
      throw invalid_input("no edge " + std::to_string(a) + " -> " + std::to_string(b) +
                          " (position " + std::to_string((t + 1) % p.n + 1) + ")");
  }
  return DeBruijnCycle{p, std::move(raw)};
}

inline Vertex common_prefix_length(const DeBruijnCycle& u, const DeBruijnCycle& v) {
  Vertex len = 0;
  const Vertex n = std::min(u.size(), v.size());
  while (len < n && u.verts[static_cast<std::size_t>(len)] == v.verts[static_cast<std::size_t>(len)])
    ++len;
  return len;
}

/// D(u, v) = N - L where L is the length of the longest common prefix of the
/// aligned sequences.
inline std::int64_t distance(const DeBruijnCycle& u, const DeBruijnCycle& v) {
  if (!(u.params == v.params))
    throw invalid_input("distance requires cycles of the same digraph, got " + u.params.str() +
                        " and " + v.params.str());
  return u.params.n - common_prefix_length(u, v);
}

namespace detail {

// Backtracking DFS over simple paths from vertex 0, children in ascending
// residue order r = 0..d-1. Calls visit(path) for every path that reaches
// target_len vertices (closing-edge checks are the visitor's business); visit
// returns false to abandon that branch's extension and true is meaningless
// there since the path is already complete. Returns false if stop() ever
// requested an early abort.
template <typename Visit, typename Stop>
bool dfs_paths(const DigraphParams& p, const std::vector<Vertex>& root, Vertex target_len,
               Visit&& visit, Stop&& stop) {
  std::vector<Vertex> path = root;
  std::vector<char> used(static_cast<std::size_t>(p.n), 0);
  for (Vertex v : path) used[static_cast<std::size_t>(v)] = 1;
  // rnext[k] = next residue to try when extending from path[k]. Entries for
  // the fixed root prefix are pre-exhausted so the walk never backtracks
  // above it.
  std::vector<Vertex> rnext(path.size(), p.d);
  rnext.back() = 0;

  while (!path.empty()) {
    if (static_cast<Vertex>(path.size()) == target_len) {
      if (stop()) return false;
      visit(path);
      used[static_cast<std::size_t>(path.back())] = 0;
      path.pop_back();
      rnext.pop_back();
      continue;
    }
    const Vertex r = rnext.back();
    if (r == p.d) {
      used[static_cast<std::size_t>(path.back())] = 0;
      path.pop_back();
      rnext.pop_back();
      continue;
    }
    rnext.back() = r + 1;
    const Vertex y = (p.d * path.back() + r) % p.n;
    if (!used[static_cast<std::size_t>(y)]) {
      used[static_cast<std::size_t>(y)] = 1;
      path.push_back(y);
      rnext.push_back(0);
    }
  }
  return true;
}

}  // namespace detail

/// Streams every Hamiltonian cycle in canonical order: depth-first from 0,
/// extending by unvisited successors in ascending residue order. Each cycle is
/// emitted exactly once, already aligned. The visitor returns false to stop
/// the enumeration early; enumerate_cycles returns true iff it ran to the end.
template <typename Visitor>
bool enumerate_cycles(const DigraphParams& p, Visitor&& visit) {
  bool keep_going = true;
  return detail::dfs_paths(
      p, {0}, p.n,
      [&](const std::vector<Vertex>& path) {
        if (is_edge(p, path.back(), 0)) keep_going = visit(path);
      },
      [&] { return !keep_going; });
}

inline constexpr std::int64_t kDefaultCycleBudget = 1'000'000;

/// All cycles in canonical order. Throws budget_exceeded if more than budget
/// cycles exist.
inline std::vector<DeBruijnCycle> collect_cycles(const DigraphParams& p,
                                                 std::int64_t budget = kDefaultCycleBudget) {
  if (budget <= 0) throw invalid_input("cycle budget must be positive");
  std::vector<DeBruijnCycle> out;
  bool over = false;
  enumerate_cycles(p, [&](const std::vector<Vertex>& path) {
    if (static_cast<std::int64_t>(out.size()) == budget) {
      over = true;
      return false;
    }
    out.push_back(DeBruijnCycle{p, path});
    return true;
  });
  if (over)
    throw budget_exceeded("cycle enumeration for " + p.str() + " exceeded budget of " +
                          std::to_string(budget));
  return out;
}

/// Parallel variant: the DFS tree is split at a fixed depth and the per-prefix
/// subtrees are walked concurrently. The concatenation in prefix order is
/// identical to the sequential stream.
inline std::vector<DeBruijnCycle> collect_cycles_parallel(const DigraphParams& p, int threads,
                                                          std::int64_t budget = kDefaultCycleBudget) {
  if (budget <= 0) throw invalid_input("cycle budget must be positive");
  if (threads <= 1 || p.n <= 4) return collect_cycles(p, budget);

  // Pick a split depth with comfortably more prefixes than threads.
  Vertex depth = 2;
  std::int64_t width = p.d;
  while (depth < p.n - 1 && width < static_cast<std::int64_t>(threads) * 16) {
    width *= p.d;
    ++depth;
  }
  if (depth >= p.n) return collect_cycles(p, budget);

  std::vector<std::vector<Vertex>> prefixes;
  detail::dfs_paths(
      p, {0}, depth, [&](const std::vector<Vertex>& path) { prefixes.push_back(path); },
      [] { return false; });

  std::vector<std::vector<DeBruijnCycle>> results(prefixes.size());
  std::atomic<std::int64_t> produced{0};
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = cursor.fetch_add(1);
      if (i >= prefixes.size()) return;
      detail::dfs_paths(
          p, prefixes[i], p.n,
          [&](const std::vector<Vertex>& path) {
            if (is_edge(p, path.back(), 0)) {
              results[i].push_back(DeBruijnCycle{p, path});
              produced.fetch_add(1, std::memory_order_relaxed);
            }
          },
          [&] { return produced.load(std::memory_order_relaxed) > budget; });
    }
  };
  std::vector<std::thread> pool;
  const int nthreads = std::min<int>(threads, static_cast<int>(prefixes.size()));
  pool.reserve(static_cast<std::size_t>(nthreads));
  for (int t = 0; t < nthreads; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();

  std::int64_t total = 0;
  for (const auto& r : results) total += static_cast<std::int64_t>(r.size());
  if (total > budget)
    throw budget_exceeded("cycle enumeration for " + p.str() + " exceeded budget of " +
                          std::to_string(budget));
  std::vector<DeBruijnCycle> out;
  out.reserve(static_cast<std::size_t>(total));
  for (auto& r : results)
    for (auto& c : r) out.push_back(std::move(c));
  return out;
}

enum class Preference { largest, smallest };

/// First Hamiltonian cycle found by a backtracking DFS that always tries the
/// largest (resp. smallest) residue successor first. For N = 2^k with
/// Preference::largest this is the classical prefer-one sequence.
inline std::optional<DeBruijnCycle> greedy_generate(const DigraphParams& p, Preference pref) {
  std::vector<Vertex> path{0};
  std::vector<char> used(static_cast<std::size_t>(p.n), 0);
  used[0] = 1;
  std::vector<Vertex> tried(1, 0);  // count of residues already tried per level

  while (!path.empty()) {
    if (static_cast<Vertex>(path.size()) == p.n) {
      if (is_edge(p, path.back(), 0)) return DeBruijnCycle{p, path};
      used[static_cast<std::size_t>(path.back())] = 0;
      path.pop_back();
      tried.pop_back();
      continue;
    }
    const Vertex k = tried.back();
    if (k == p.d) {
      used[static_cast<std::size_t>(path.back())] = 0;
      path.pop_back();
      tried.pop_back();
      continue;
    }
    tried.back() = k + 1;
    const Vertex r = pref == Preference::largest ? p.d - 1 - k : k;
    const Vertex y = (p.d * path.back() + r) % p.n;
    if (!used[static_cast<std::size_t>(y)]) {
      used[static_cast<std::size_t>(y)] = 1;
      path.push_back(y);
      tried.push_back(0);
    }
  }
  return std::nullopt;
}

}  // namespace debruijn
