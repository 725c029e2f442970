#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "debruijn/cycle.hpp"
#include "debruijn/detail/parallel.hpp"
#include "debruijn/error.hpp"
#include "debruijn/graph.hpp"

namespace debruijn {

using Pos = std::int64_t;  // 1-based position within an aligned cycle

/// One cross-join operation on a specific aligned cycle. The cross pair
/// (a, b) splits the cycle in two; the join pair rejoins the pieces, p_in
/// naming the position on the split-off piece (a < p_in <= b) and p_out the
/// position on the piece that keeps vertex 0. Both position pairs must hold
/// conjugate vertices and must differ as unordered vertex pairs.
struct CrossJoinMove {
  Pos a = 0;
  Pos b = 0;
  Pos p_in = 0;
  Pos p_out = 0;

  bool operator==(const CrossJoinMove& o) const noexcept {
    return a == o.a && b == o.b && p_in == o.p_in && p_out == o.p_out;
  }
};

inline bool operator<(const CrossJoinMove& x, const CrossJoinMove& y) {
  if (x.a != y.a) return x.a < y.a;
  if (x.b != y.b) return x.b < y.b;
  if (x.p_in != y.p_in) return x.p_in < y.p_in;
  return x.p_out < y.p_out;
}

namespace detail {

inline void require_complete_conjugacy(const DigraphParams& p, const char* what) {
  if (!p.divides())
    throw unsupported_operation(std::string(what) + " requires d | N (conjugate vertices must share "
                                "all successors), got " + p.str());
}

// Conjugacy of distinct vertices under d | N.
inline bool same_class(const DigraphParams& p, Vertex x, Vertex y) {
  return x != y && (x - y) % (p.n / p.d) == 0;
}

inline void check_position(const DeBruijnCycle& u, Pos pos, const char* name) {
  if (pos < 1 || pos > u.size())
    throw invalid_input("position " + std::string(name) + "=" + std::to_string(pos) +
                        " out of range 1.." + std::to_string(u.size()));
}

}  // namespace detail

/// All conjugate position pairs (a, b) with a < b, ascending.
inline std::vector<std::pair<Pos, Pos>> conjugate_position_pairs(const DeBruijnCycle& u) {
  detail::require_complete_conjugacy(u.params, "conjugate position pairs");
  const Vertex m = u.params.n / u.params.d;
  // Bucket positions by residue class; pairs exist only within a bucket.
  std::unordered_map<Vertex, std::vector<Pos>> buckets;
  for (Pos t = 1; t <= u.size(); ++t) buckets[((u.at(t) % m) + m) % m].push_back(t);
  std::vector<std::pair<Pos, Pos>> pairs;
  for (const auto& [cls, positions] : buckets) {
    (void)cls;
    for (std::size_t i = 0; i < positions.size(); ++i)
      for (std::size_t j = i + 1; j < positions.size(); ++j)
        pairs.emplace_back(positions[i], positions[j]);
  }
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

struct SplitResult {
  std::vector<Vertex> outer;  // positions 1..a then b+1..N; contains vertex 0
  std::vector<Vertex> inner;  // positions a+1..b
};

/// Interchanging the successors of the conjugate vertices at positions a < b
/// splits the cycle into the outer piece (keeping 0) and the inner piece.
inline SplitResult split(const DeBruijnCycle& u, Pos a, Pos b) {
  detail::require_complete_conjugacy(u.params, "split");
  detail::check_position(u, a, "a");
  detail::check_position(u, b, "b");
  if (a >= b) throw invalid_input("cross pair needs a < b, got a=" + std::to_string(a) + ", b=" +
                                  std::to_string(b));
  if (!detail::same_class(u.params, u.at(a), u.at(b)))
    throw invalid_input("cross pair not conjugate: vertices " + std::to_string(u.at(a)) + " and " +
                        std::to_string(u.at(b)));
  SplitResult s;
  s.outer.reserve(static_cast<std::size_t>(a + u.size() - b));
  s.inner.reserve(static_cast<std::size_t>(b - a));
  for (Pos t = 1; t <= a; ++t) s.outer.push_back(u.at(t));
  for (Pos t = b + 1; t <= u.size(); ++t) s.outer.push_back(u.at(t));
  for (Pos t = a + 1; t <= b; ++t) s.inner.push_back(u.at(t));
  return s;
}

namespace detail {

inline void validate_move(const DeBruijnCycle& u, const CrossJoinMove& m) {
  require_complete_conjugacy(u.params, "cross-join");
  check_position(u, m.a, "a");
  check_position(u, m.b, "b");
  check_position(u, m.p_in, "p_in");
  check_position(u, m.p_out, "p_out");
  if (m.a >= m.b)
    throw invalid_input("cross pair needs a < b, got a=" + std::to_string(m.a) + ", b=" +
                        std::to_string(m.b));
  if (!same_class(u.params, u.at(m.a), u.at(m.b)))
    throw invalid_input("cross pair not conjugate: vertices " + std::to_string(u.at(m.a)) +
                        " and " + std::to_string(u.at(m.b)));
  if (m.p_in <= m.a || m.p_in > m.b)
    throw invalid_input("join pair does not span the split: p_in=" + std::to_string(m.p_in) +
                        " must lie in [" + std::to_string(m.a + 1) + ", " + std::to_string(m.b) +
                        "]");
  if (m.p_out > m.a && m.p_out <= m.b)
    throw invalid_input("join pair does not span the split: p_out=" + std::to_string(m.p_out) +
                        " must lie outside [" + std::to_string(m.a + 1) + ", " +
                        std::to_string(m.b) + "]");
  if (!same_class(u.params, u.at(m.p_in), u.at(m.p_out)))
    throw invalid_input("join pair not conjugate: vertices " + std::to_string(u.at(m.p_in)) +
                        " and " + std::to_string(u.at(m.p_out)));
  if (m.p_in == m.b && m.p_out == m.a)
    throw invalid_input("join pair must differ from the cross pair");
}

// Segment form of a cross-join with p_out beyond the cross pair. With i = a,
// i' = b, j' = p_in, j = p_out the result is
//   x[1..i] x[i'+1..j] x[j'+1..i'] x[i+1..j'] x[j+1..N]
// with empty ranges dropped.
inline std::vector<Vertex> concat_move_segments(const std::vector<Vertex>& x, Pos i1, Pos i2,
                                                Pos j1, Pos j2) {
  std::vector<Vertex> out;
  out.reserve(x.size());
  const auto seg = [&](Pos lo, Pos hi) {
    for (Pos t = lo; t <= hi; ++t) out.push_back(x[static_cast<std::size_t>(t - 1)]);
  };
  seg(1, i1);
  seg(i2 + 1, j1);
  seg(j2 + 1, i2);
  seg(i1 + 1, j2);
  seg(j1 + 1, static_cast<Pos>(x.size()));
  return out;
}

}  // namespace detail

/// The cycle obtained by swapping successors at the cross pair and then at the
/// join pair. The swap order matters when the two pairs share a vertex (which
/// d >= 3 permits).
inline DeBruijnCycle apply_move(const DeBruijnCycle& u, const CrossJoinMove& m) {
  detail::validate_move(u, m);
  const Vertex n = u.params.n;
  std::vector<Vertex> next(static_cast<std::size_t>(n));
  for (Pos t = 1; t <= n; ++t)
    next[static_cast<std::size_t>(u.at(t))] = u.at(t % n + 1);
  std::swap(next[static_cast<std::size_t>(u.at(m.a))], next[static_cast<std::size_t>(u.at(m.b))]);
  std::swap(next[static_cast<std::size_t>(u.at(m.p_in))],
            next[static_cast<std::size_t>(u.at(m.p_out))]);
  std::vector<Vertex> walk;
  walk.reserve(static_cast<std::size_t>(n));
  walk.push_back(0);
  Vertex cur = 0;
  for (Vertex step = 1; step < n; ++step) {
    cur = next[static_cast<std::size_t>(cur)];
    if (cur == 0)
      throw invariant_violation("cross-join produced a short cycle despite a spanning join pair");
    walk.push_back(cur);
  }
  return validate(u.params, std::move(walk));
}

/// Same operation computed by segment reordering instead of successor swaps.
/// Only defined for moves with p_out > b; used as an independent route for
/// cross-checking apply_move.
inline DeBruijnCycle apply_move_by_segments(const DeBruijnCycle& u, const CrossJoinMove& m) {
  detail::validate_move(u, m);
  if (m.p_out <= m.a)
    throw invalid_input("segment form requires the outer join position after the cross pair");
  return validate(u.params, detail::concat_move_segments(u.verts, m.a, m.b, m.p_out, m.p_in));
}

/// Every valid move on u: each conjugate position pair as cross, combined with
/// each conjugate position pair having exactly one position inside the split
/// span. Ascending (a, b, p_in, p_out).
inline std::vector<CrossJoinMove> enumerate_moves(const DeBruijnCycle& u) {
  const auto pairs = conjugate_position_pairs(u);
  std::vector<CrossJoinMove> moves;
  for (const auto& [a, b] : pairs) {
    for (const auto& [p, q] : pairs) {
      if (p == a && q == b) continue;
      const bool p_inside = p > a && p <= b;
      const bool q_inside = q > a && q <= b;
      if (p_inside == q_inside) continue;
      moves.push_back(p_inside ? CrossJoinMove{a, b, p, q} : CrossJoinMove{a, b, q, p});
    }
  }
  std::sort(moves.begin(), moves.end());
  return moves;
}

/// Distinct cycles one cross-join away from u, sorted canonically. Two moves
/// producing the same cycle contribute one neighbor; u itself never appears.
inline std::vector<DeBruijnCycle> neighbors(const DeBruijnCycle& u) {
  std::vector<DeBruijnCycle> out;
  for (const auto& m : enumerate_moves(u)) out.push_back(apply_move(u, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  if (std::binary_search(out.begin(), out.end(), u))
    throw invariant_violation("cycle appeared among its own cross-join neighbors");
  return out;
}

/// Histogram mapping neighbor count n to the number of cycles with that many
/// neighbors, over all cycles of the digraph.
inline std::map<std::int64_t, std::int64_t> neighbor_histogram(
    const DigraphParams& p, int threads = 1, std::int64_t budget = kDefaultCycleBudget) {
  detail::require_complete_conjugacy(p, "neighbor census");
  const auto cycles = collect_cycles(p, budget);
  std::vector<std::int64_t> counts(cycles.size(), 0);
  detail::parallel_for(static_cast<std::int64_t>(cycles.size()), threads, [&](std::int64_t i) {
    counts[static_cast<std::size_t>(i)] =
        static_cast<std::int64_t>(neighbors(cycles[static_cast<std::size_t>(i)]).size());
  });
  std::map<std::int64_t, std::int64_t> hist;
  for (std::int64_t c : counts) ++hist[c];
  return hist;
}

/// The graph whose vertices are all de Bruijn cycles of the digraph, with an
/// edge wherever one cross-join transforms one into the other. Nodes are held
/// in canonical enumeration order.
struct CrossJoinGraph {
  DigraphParams params;
  std::vector<DeBruijnCycle> nodes;
  std::vector<std::vector<std::int64_t>> adjacency;  // sorted neighbor indices
};

inline CrossJoinGraph build_crossjoin_graph(const DigraphParams& p,
                                            std::int64_t budget = kDefaultCycleBudget,
                                            int threads = 1) {
  detail::require_complete_conjugacy(p, "cross-join graph");
  CrossJoinGraph g{p, collect_cycles(p, budget), {}};
  std::unordered_map<std::vector<Vertex>, std::int64_t, VertexSeqHash> index;
  index.reserve(g.nodes.size() * 2);
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    index.emplace(g.nodes[i].verts, static_cast<std::int64_t>(i));
  g.adjacency.assign(g.nodes.size(), {});
  detail::parallel_for(static_cast<std::int64_t>(g.nodes.size()), threads, [&](std::int64_t i) {
    for (const auto& nb : neighbors(g.nodes[static_cast<std::size_t>(i)])) {
      const auto it = index.find(nb.verts);
      if (it == index.end())
        throw invariant_violation("cross-join neighbor missing from the cycle enumeration");
      g.adjacency[static_cast<std::size_t>(i)].push_back(it->second);
    }
  });
  // Adjacency must be symmetric and loop-free.
  for (std::size_t i = 0; i < g.adjacency.size(); ++i) {
    for (std::int64_t j : g.adjacency[i]) {
      if (j == static_cast<std::int64_t>(i))
        throw invariant_violation("self-loop in cross-join graph");
      const auto& back = g.adjacency[static_cast<std::size_t>(j)];
      if (!std::binary_search(back.begin(), back.end(), static_cast<std::int64_t>(i)))
        throw invariant_violation("cross-join adjacency is not symmetric");
    }
  }
  return g;
}

/// (connected?, component count). An empty graph counts as connected with zero
/// components; callers that care should flag it.
inline std::pair<bool, std::int64_t> is_connected(const CrossJoinGraph& g) {
  if (g.nodes.empty()) return {true, 0};
  std::vector<char> seen(g.nodes.size(), 0);
  std::int64_t components = 0;
  for (std::size_t start = 0; start < g.nodes.size(); ++start) {
    if (seen[start]) continue;
    ++components;
    std::deque<std::int64_t> queue{static_cast<std::int64_t>(start)};
    seen[start] = 1;
    while (!queue.empty()) {
      const std::int64_t v = queue.front();
      queue.pop_front();
      for (std::int64_t w : g.adjacency[static_cast<std::size_t>(v)]) {
        if (!seen[static_cast<std::size_t>(w)]) {
          seen[static_cast<std::size_t>(w)] = 1;
          queue.push_back(w);
        }
      }
    }
  }
  return {components == 1, components};
}

struct PathStep {
  CrossJoinMove move;
  DeBruijnCycle cycle;  // result of applying move to the previous cycle
};

/// Builds a move from vertex pairs instead of positions, classifying which
/// join vertex lies on the split-off piece.
inline CrossJoinMove move_from_vertices(const DeBruijnCycle& u, std::pair<Vertex, Vertex> cross,
                                        std::pair<Vertex, Vertex> join) {
  const auto position_of = [&](Vertex v) -> Pos {
    for (Pos t = 1; t <= u.size(); ++t)
      if (u.at(t) == v) return t;
    throw invalid_input("vertex " + std::to_string(v) + " not on the cycle");
  };
  Pos a = position_of(cross.first);
  Pos b = position_of(cross.second);
  if (a > b) std::swap(a, b);
  const Pos p = position_of(join.first);
  const Pos q = position_of(join.second);
  const bool p_inside = p > a && p <= b;
  const bool q_inside = q > a && q <= b;
  if (p_inside == q_inside)
    throw invalid_input("join pair does not span the split at the cross pair");
  return p_inside ? CrossJoinMove{a, b, p, q} : CrossJoinMove{a, b, q, p};
}

/// A cross-join walk from u to v along which the distance to v strictly
/// decreases at every step; at most N steps. Each step first tries the
/// constructive route (split at the end of the shared prefix, then join the
/// split-off piece back using a vertex beyond the prefix) and falls back to
/// picking the closest-to-v neighbor, smallest cycle first.
inline std::vector<PathStep> crossjoin_path(const DeBruijnCycle& u, const DeBruijnCycle& v) {
  if (!(u.params == v.params))
    throw invalid_input("path endpoints belong to different digraphs: " + u.params.str() +
                        " vs " + v.params.str());
  detail::require_complete_conjugacy(u.params, "cross-join path");
  const DigraphParams p = u.params;
  std::vector<PathStep> steps;
  DeBruijnCycle cur = u;
  while (!(cur == v)) {
    if (static_cast<Vertex>(steps.size()) >= p.n)
      throw invariant_violation("cross-join path exceeded N steps");
    const Vertex prefix = common_prefix_length(cur, v);
    // Split between the prefix end and the other predecessor of v's next
    // vertex; the outer piece then extends the shared prefix.
    const Vertex target = v.verts[static_cast<std::size_t>(prefix)];
    Pos target_pos = 0;
    for (Pos t = 1; t <= cur.size(); ++t)
      if (cur.at(t) == target) target_pos = t;
    if (target_pos <= prefix + 1)
      throw invariant_violation("shared prefix was not maximal");
    const Pos a = prefix;
    const Pos b = target_pos - 1;
    const SplitResult s = split(cur, a, b);

    std::optional<CrossJoinMove> chosen;
    Vertex outer_prefix = 0;
    while (outer_prefix < static_cast<Vertex>(s.outer.size()) &&
           s.outer[static_cast<std::size_t>(outer_prefix)] ==
               v.verts[static_cast<std::size_t>(outer_prefix)])
      ++outer_prefix;
    for (Pos py = outer_prefix + 1; py <= static_cast<Pos>(s.outer.size()) && !chosen; ++py) {
      for (Pos pz = 1; pz <= static_cast<Pos>(s.inner.size()) && !chosen; ++pz) {
        if (detail::same_class(p, s.outer[static_cast<std::size_t>(py - 1)],
                               s.inner[static_cast<std::size_t>(pz - 1)]))
          chosen = CrossJoinMove{a, b, a + pz, b + (py - a)};
      }
    }

    DeBruijnCycle next = cur;
    if (chosen) {
      next = apply_move(cur, *chosen);
      if (distance(next, v) >= distance(cur, v))
        throw invariant_violation("constructive step failed to reduce the distance");
    } else {
      // The join search above can come up empty when the outer piece is a
      // full prefix of v; some neighbor still gets strictly closer.
      bool found = false;
      for (const auto& m : enumerate_moves(cur)) {
        DeBruijnCycle w = apply_move(cur, m);
        if (distance(w, v) >= distance(cur, v)) continue;
        if (!found || w.verts < next.verts) {
          next = std::move(w);
          chosen = m;
          found = true;
        }
      }
      if (!found)
        throw invariant_violation("no neighbor strictly closer to the destination exists");
    }
    steps.push_back(PathStep{*chosen, next});
    cur = std::move(next);
  }
  return steps;
}

}  // namespace debruijn
