#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "debruijn/crossjoin.hpp"
#include "debruijn/cycle.hpp"
#include "debruijn/error.hpp"

namespace debruijn {

/// Tie-break rule for choosing the join pair once a cross pair is fixed. The
/// cross pair itself is always scanned from the lexicographically largest
/// candidate down; that is what keeps the longest possible prefix of the
/// current cycle unchanged and makes the walk cover everything.
enum class JoinRule { largest, smallest };

using PosPair = std::pair<Pos, Pos>;

/// Lexicographically largest conjugate position pair (i, i') <= start with
/// i < i' <= N-1. Position N is excluded: a usable join needs a position
/// beyond i'. Scans i' downward, then decrements i and restarts i' at N-1.
inline std::optional<PosPair> largest_cross_pair(const DeBruijnCycle& u, PosPair start) {
  detail::require_complete_conjugacy(u.params, "cross pair scan");
  const Pos n = u.size();
  for (Pos i1 = std::min(start.first, n - 2); i1 >= 1; --i1) {
    const Pos from = i1 == start.first ? std::min(start.second, n - 1) : n - 1;
    for (Pos i2 = from; i2 > i1; --i2)
      if (detail::same_class(u.params, u.at(i1), u.at(i2))) return PosPair{i1, i2};
  }
  return std::nullopt;
}

/// Lexicographically largest conjugate pair (j, j') <= start with i' < j <= N
/// and i < j' <= i'. Within each j the scan runs j' downward and restarts at
/// i' when j drops.
inline std::optional<PosPair> largest_join_pair(const DeBruijnCycle& u, PosPair cross,
                                                PosPair start) {
  detail::require_complete_conjugacy(u.params, "join pair scan");
  const auto [i1, i2] = cross;
  const Pos n = u.size();
  for (Pos j1 = std::min(start.first, n); j1 > i2; --j1) {
    const Pos from = j1 == start.first ? std::min(start.second, i2) : i2;
    for (Pos j2 = from; j2 > i1; --j2)
      if (detail::same_class(u.params, u.at(j1), u.at(j2))) return PosPair{j1, j2};
  }
  return std::nullopt;
}

/// Mirror of largest_join_pair: lexicographically smallest (j, j') >= start.
inline std::optional<PosPair> smallest_join_pair(const DeBruijnCycle& u, PosPair cross,
                                                 PosPair start) {
  detail::require_complete_conjugacy(u.params, "join pair scan");
  const auto [i1, i2] = cross;
  const Pos n = u.size();
  for (Pos j1 = std::max(start.first, i2 + 1); j1 <= n; ++j1) {
    const Pos from = j1 == start.first ? std::max(start.second, i1 + 1) : i1 + 1;
    for (Pos j2 = from; j2 <= i2; ++j2)
      if (detail::same_class(u.params, u.at(j1), u.at(j2))) return PosPair{j1, j2};
  }
  return std::nullopt;
}

/// Walk across the cross-join graph: the cycles visited in order, the move
/// taken between each consecutive pair, whether the last cycle is adjacent to
/// the first, and whether the walk stopped because the candidate scan was
/// exhausted (the only stop condition, so this is true on every completed run).
struct HamiltonPathResult {
  DigraphParams params;
  JoinRule rule = JoinRule::largest;
  std::vector<DeBruijnCycle> cycles;
  std::vector<CrossJoinMove> moves;  // moves[k] transforms cycles[k] into cycles[k+1]
  bool closed = false;
  bool exhausted = false;
};

/// From the seed, repeatedly cross-joins the current cycle into one not output
/// before, preferring the cross pair that preserves the longest prefix
/// (largest (i, i')) and choosing the join pair per the rule. Emits the seed
/// first and halts when every candidate pair is used up. The visited check
/// keys on aligned sequences.
inline HamiltonPathResult hamilton_path(const DeBruijnCycle& seed, JoinRule rule) {
  detail::require_complete_conjugacy(seed.params, "hamiltonian walk");
  const Pos n = seed.size();
  HamiltonPathResult result{seed.params, rule, {seed}, {}, false, false};
  std::unordered_set<std::vector<Vertex>, VertexSeqHash> visited;
  visited.insert(seed.verts);
  DeBruijnCycle cur = seed;

  for (;;) {
    bool accepted = false;
    auto cross = largest_cross_pair(cur, {n - 2, n - 1});
    while (cross && !accepted) {
      const auto [i1, i2] = *cross;
      auto join = rule == JoinRule::largest ? largest_join_pair(cur, *cross, {n, i2})
                                            : smallest_join_pair(cur, *cross, {i2 + 1, i1 + 1});
      while (join) {
        const auto [j1, j2] = *join;
        auto cand = detail::concat_move_segments(cur.verts, i1, i2, j1, j2);
        if (!visited.contains(cand)) {
          visited.insert(cand);
          result.moves.push_back(CrossJoinMove{i1, i2, j2, j1});
          result.cycles.push_back(DeBruijnCycle{cur.params, std::move(cand)});
          cur = result.cycles.back();
          accepted = true;
          break;
        }
        if (rule == JoinRule::largest)
          join = j2 > i1 + 1 ? largest_join_pair(cur, *cross, {j1, j2 - 1})
                             : largest_join_pair(cur, *cross, {j1 - 1, i2});
        else
          join = j2 < i2 ? smallest_join_pair(cur, *cross, {j1, j2 + 1})
                         : smallest_join_pair(cur, *cross, {j1 + 1, i1 + 1});
      }
      if (!accepted)
        cross = i2 > i1 + 1 ? largest_cross_pair(cur, {i1, i2 - 1})
                            : largest_cross_pair(cur, {i1 - 1, n - 1});
    }
    if (!accepted) break;
  }

  result.exhausted = true;
  if (result.cycles.size() >= 2) {
    const auto nb = neighbors(result.cycles.back());
    result.closed = std::binary_search(nb.begin(), nb.end(), result.cycles.front());
  }
  return result;
}

/// True iff the walk covers every cycle of the digraph exactly once and every
/// consecutive pair is cross-join adjacent. Adjacency is rechecked through
/// neighbors(), independent of the recorded moves.
inline bool is_hamiltonian_path(const HamiltonPathResult& r, const DigraphParams& p,
                                std::int64_t budget = kDefaultCycleBudget) {
  if (!(r.params == p)) return false;
  auto all = collect_cycles(p, budget);
  if (r.cycles.size() != all.size()) return false;
  std::vector<DeBruijnCycle> sorted = r.cycles;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return false;
  std::sort(all.begin(), all.end());
  if (!(sorted == all)) return false;
  for (std::size_t k = 0; k + 1 < r.cycles.size(); ++k) {
    const auto nb = neighbors(r.cycles[k]);
    if (!std::binary_search(nb.begin(), nb.end(), r.cycles[k + 1])) return false;
  }
  return true;
}

/// First seed, in canonical enumeration order, whose walk is a closed
/// Hamiltonian path of the cross-join graph.
inline std::optional<DeBruijnCycle> find_cycle_seed(const DigraphParams& p, JoinRule rule,
                                                    std::int64_t budget = kDefaultCycleBudget) {
  detail::require_complete_conjugacy(p, "cycle seed search");
  const auto all = collect_cycles(p, budget);
  for (const auto& seed : all) {
    const auto r = hamilton_path(seed, rule);
    if (r.closed && r.cycles.size() == all.size()) return seed;
  }
  return std::nullopt;
}

/// Self-check run after every walk the CLI performs: cycles valid and pairwise
/// distinct, each recorded move reproduces the next cycle through the
/// independent successor-swap route, and the closure flag is honest.
inline void check_result(const HamiltonPathResult& r) {
  if (r.cycles.empty()) throw invariant_violation("walk produced no cycles");
  if (r.moves.size() + 1 != r.cycles.size())
    throw invariant_violation("walk recorded " + std::to_string(r.moves.size()) + " moves for " +
                              std::to_string(r.cycles.size()) + " cycles");
  std::unordered_set<std::vector<Vertex>, VertexSeqHash> seen;
  for (const auto& c : r.cycles) {
    validate(r.params, c.verts);
    if (!seen.insert(c.verts).second) throw invariant_violation("walk revisited a cycle");
  }
  for (std::size_t k = 0; k < r.moves.size(); ++k) {
    if (!(apply_move(r.cycles[k], r.moves[k]) == r.cycles[k + 1]))
      throw invariant_violation("recorded move " + std::to_string(k + 1) +
                                " does not reproduce the next cycle");
  }
  bool closed = false;
  if (r.cycles.size() >= 2) {
    const auto nb = neighbors(r.cycles.back());
    closed = std::binary_search(nb.begin(), nb.end(), r.cycles.front());
  }
  if (closed != r.closed) throw invariant_violation("closure flag does not match adjacency");
}

}  // namespace debruijn
