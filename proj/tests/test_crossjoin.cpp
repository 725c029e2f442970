#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <map>
#include <set>
#include <vector>

#include "debruijn/crossjoin.hpp"
#include "debruijn/cycle.hpp"
#include "debruijn/graph.hpp"
#include "golden_data.hpp"

using namespace debruijn;

namespace {

DeBruijnCycle cycle(Vertex n, Vertex d, std::vector<Vertex> vs) {
  return validate(DigraphParams(n, d), std::move(vs));
}

// Independent oracle for the whole move machinery: try every ordered pair of
// distinct conjugate vertex pairs, perform the two successor swaps directly on
// the successor map, and keep the results that come out as one Hamiltonian
// cycle. No position bookkeeping involved.
std::set<std::vector<Vertex>> brute_force_neighbor_set(const DeBruijnCycle& u) {
  const DigraphParams p = u.params;
  std::vector<std::pair<Vertex, Vertex>> conj;
  for (Vertex x = 0; x < p.n; ++x)
    for (Vertex y = x + 1; y < p.n; ++y)
      if (are_conjugate(p, x, y)) conj.emplace_back(x, y);

  std::set<std::vector<Vertex>> results;
  for (const auto& s1 : conj) {
    for (const auto& s2 : conj) {
      if (s1 == s2) continue;
      std::vector<Vertex> next(static_cast<std::size_t>(p.n));
      for (Pos t = 1; t <= u.size(); ++t)
        next[static_cast<std::size_t>(u.at(t))] = u.at(t % p.n + 1);
      std::swap(next[static_cast<std::size_t>(s1.first)], next[static_cast<std::size_t>(s1.second)]);
      std::swap(next[static_cast<std::size_t>(s2.first)], next[static_cast<std::size_t>(s2.second)]);
      std::vector<Vertex> walk{0};
      Vertex cur = 0;
      bool closed_early = false;
      for (Vertex step = 1; step < p.n && !closed_early; ++step) {
        cur = next[static_cast<std::size_t>(cur)];
        if (cur == 0) closed_early = true;
        walk.push_back(cur);
      }
      if (!closed_early && next[static_cast<std::size_t>(walk.back())] == 0) results.insert(walk);
    }
  }
  return results;
}

std::set<std::vector<Vertex>> neighbor_set(const DeBruijnCycle& u) {
  std::set<std::vector<Vertex>> out;
  for (const auto& nb : neighbors(u)) out.insert(nb.verts);
  return out;
}

}  // namespace

TEST_CASE("split at a conjugate pair") {
  const auto s8 = split(cycle(8, 2, {0, 1, 3, 7, 6, 5, 2, 4}), 2, 6);
  CHECK(s8.outer == std::vector<Vertex>{0, 1, 2, 4});
  CHECK(s8.inner == std::vector<Vertex>{3, 7, 6, 5});

  const auto s6 = split(cycle(6, 3, {0, 2, 1, 5, 3, 4}), 2, 6);
  CHECK(s6.outer == std::vector<Vertex>{0, 2});
  CHECK(s6.inner == std::vector<Vertex>{1, 5, 3, 4});

  // Smallest case: conjugate pairs of 0,1,3,2 sit at positions (1,4) and
  // (2,3); the split at (2,3) pinches off the self-loop at vertex 3.
  const auto s4 = split(cycle(4, 2, {0, 1, 3, 2}), 2, 3);
  CHECK(s4.outer == std::vector<Vertex>{0, 1, 2});
  CHECK(s4.inner == std::vector<Vertex>{3});

  CHECK_THROWS_AS(split(cycle(4, 2, {0, 1, 3, 2}), 2, 4), invalid_input);
  CHECK_THROWS_AS(split(cycle(8, 2, {0, 1, 3, 7, 6, 5, 2, 4}), 2, 5), invalid_input);
}

TEST_CASE("split partitions the vertex set into two valid cycles") {
  for (auto [n, d] : std::vector<std::pair<Vertex, Vertex>>{{8, 2}, {16, 2}, {9, 3}, {12, 4}}) {
    const DigraphParams p(n, d);
    for (const auto& u : collect_cycles(p)) {
      for (const auto& [a, b] : conjugate_position_pairs(u)) {
        const auto s = split(u, a, b);
        REQUIRE(static_cast<Vertex>(s.outer.size() + s.inner.size()) == n);
        std::set<Vertex> all(s.outer.begin(), s.outer.end());
        all.insert(s.inner.begin(), s.inner.end());
        REQUIRE(static_cast<Vertex>(all.size()) == n);
        for (const auto& part : {s.outer, s.inner})
          for (std::size_t t = 0; t < part.size(); ++t)
            REQUIRE(is_edge(p, part[t], part[(t + 1) % part.size()]));
      }
    }
  }
}

TEST_CASE("apply_move reproduces the worked examples") {
  // (8,2): cross at vertices (1,5), join at (6,2).
  const auto u8 = cycle(8, 2, {0, 1, 3, 7, 6, 5, 2, 4});
  CHECK(apply_move(u8, CrossJoinMove{2, 6, 5, 7}).verts ==
        std::vector<Vertex>{0, 1, 2, 5, 3, 7, 6, 4});

  // (6,3): the join pair shares vertex 4 with the cross pair, so the swap
  // order matters; the stated order is the valid one.
  const auto u6 = cycle(6, 3, {0, 2, 1, 5, 3, 4});
  CHECK(apply_move(u6, CrossJoinMove{2, 6, 6, 1}).verts ==
        std::vector<Vertex>{0, 1, 5, 3, 4, 2});

  const auto u16 = cycle(16, 2, golden::kSeed16);
  CHECK(apply_move(u16, CrossJoinMove{7, 13, 10, 15}).verts == golden::kWalkLargest16[1]);
}

TEST_CASE("apply_move validates its move") {
  const auto u = cycle(8, 2, {0, 1, 3, 7, 6, 5, 2, 4});
  // non-conjugate cross
  CHECK_THROWS_AS(apply_move(u, CrossJoinMove{2, 5, 4, 7}), invalid_input);
  // join does not span the split
  CHECK_THROWS_AS(apply_move(u, CrossJoinMove{2, 6, 7, 1}), invalid_input);
  CHECK_THROWS_AS(apply_move(u, CrossJoinMove{2, 6, 3, 5}), invalid_input);
  // join equals cross
  CHECK_THROWS_AS(apply_move(u, CrossJoinMove{2, 6, 6, 2}), invalid_input);
  // positions out of range
  CHECK_THROWS_AS(apply_move(u, CrossJoinMove{0, 6, 5, 7}), invalid_input);
  CHECK_THROWS_AS(apply_move(u, CrossJoinMove{2, 9, 5, 7}), invalid_input);
  // cross-joins need complete conjugacy
  const auto u10 = greedy_generate(DigraphParams(10, 4), Preference::largest);
  REQUIRE(u10.has_value());
  CHECK_THROWS_AS(enumerate_moves(*u10), unsupported_operation);
}

TEST_CASE("segment route agrees with the successor-swap route") {
  for (auto [n, d] : std::vector<std::pair<Vertex, Vertex>>{{16, 2}, {9, 3}, {12, 3}}) {
    for (const auto& u : collect_cycles(DigraphParams(n, d))) {
      for (const auto& m : enumerate_moves(u)) {
        if (m.p_out <= m.a) continue;
        REQUIRE(apply_move_by_segments(u, m) == apply_move(u, m));
      }
    }
  }
}

TEST_CASE("enumerate_moves on the smallest digraphs") {
  // 0,1,3,2 has conjugate position pairs (1,4) and (2,3); each interleaves
  // the other, so no join spans a split and there are no moves at all.
  CHECK(enumerate_moves(cycle(4, 2, {0, 1, 3, 2})).empty());

  const auto m8 = enumerate_moves(cycle(8, 2, {0, 1, 3, 7, 6, 5, 2, 4}));
  CHECK(std::find(m8.begin(), m8.end(), CrossJoinMove{2, 6, 5, 7}) != m8.end());

  const auto m6 = enumerate_moves(cycle(6, 3, {0, 2, 1, 5, 3, 4}));
  CHECK(std::find(m6.begin(), m6.end(), CrossJoinMove{2, 6, 6, 1}) != m6.end());

  // Deterministic ascending order.
  CHECK(std::is_sorted(m8.begin(), m8.end()));
  CHECK(std::is_sorted(m6.begin(), m6.end()));
}

TEST_CASE("neighbors match the brute-force double-swap oracle") {
  for (auto [n, d] : std::vector<std::pair<Vertex, Vertex>>{{4, 2}, {8, 2}, {16, 2}, {6, 3}, {9, 3}}) {
    for (const auto& u : collect_cycles(DigraphParams(n, d)))
      REQUIRE(neighbor_set(u) == brute_force_neighbor_set(u));
  }
}

TEST_CASE("neighbor counts for the order-4 binary cycles") {
  std::multiset<std::size_t> counts;
  for (const auto& u : collect_cycles(DigraphParams(16, 2))) {
    const auto nb = neighbors(u);
    counts.insert(nb.size());
    const bool expected = nb.size() == 7 || nb.size() == 10;
    CHECK(expected);
  }
  CHECK(counts.count(7) == 8);
  CHECK(counts.count(10) == 8);
}

TEST_CASE("neighbor relation is symmetric and irreflexive") {
  for (auto [n, d] : std::vector<std::pair<Vertex, Vertex>>{{16, 2}, {9, 3}, {12, 3}}) {
    const auto cycles = collect_cycles(DigraphParams(n, d));
    for (const auto& u : cycles) {
      const auto nb = neighbors(u);
      CHECK_FALSE(std::binary_search(nb.begin(), nb.end(), u));
      for (const auto& v : nb) {
        const auto back = neighbors(v);
        REQUIRE(std::binary_search(back.begin(), back.end(), u));
      }
    }
  }
}

TEST_CASE("moves of binary cycles use four distinct positions and commute") {
  for (const auto& u : collect_cycles(DigraphParams(16, 2))) {
    for (const auto& m : enumerate_moves(u)) {
      std::set<Pos> positions{m.a, m.b, m.p_in, m.p_out};
      REQUIRE(positions.size() == 4);
      // Swapping the roles of the two pairs gives the same cycle.
      const Pos a2 = std::min(m.p_in, m.p_out);
      const Pos b2 = std::max(m.p_in, m.p_out);
      const bool a_inside = m.a > a2 && m.a <= b2;
      const CrossJoinMove swapped{a2, b2, a_inside ? m.a : m.b, a_inside ? m.b : m.a};
      REQUIRE(apply_move(u, swapped) == apply_move(u, m));
    }
  }
}

TEST_CASE("every move has an inverse that undoes it") {
  for (const auto& u : collect_cycles(DigraphParams(16, 2))) {
    for (const auto& m : enumerate_moves(u)) {
      const auto w = apply_move(u, m);
      const auto inverse = move_from_vertices(
          w, {u.at(m.p_in), u.at(m.p_out)}, {u.at(m.a), u.at(m.b)});
      REQUIRE(apply_move(w, inverse) == u);
    }
  }
}

TEST_CASE("neighbor census") {
  const auto h16 = neighbor_histogram(DigraphParams(16, 2));
  REQUIRE(h16.size() == 2);
  CHECK(h16.at(7) == 8);
  CHECK(h16.at(10) == 8);

  for (auto [n, d] : std::vector<std::pair<Vertex, Vertex>>{{16, 2}, {12, 3}}) {
    const auto h = neighbor_histogram(DigraphParams(n, d));
    std::int64_t total = 0;
    for (const auto& [count, freq] : h) total += freq;
    CHECK(total == static_cast<std::int64_t>(collect_cycles(DigraphParams(n, d)).size()));
  }
}

TEST_CASE("census is deterministic across thread counts") {
  const auto base = neighbor_histogram(DigraphParams(16, 2), 1);
  for (int threads : {2, 3, 8}) CHECK(neighbor_histogram(DigraphParams(16, 2), threads) == base);
}

TEST_CASE("cross-join graph construction") {
  const auto g16 = build_crossjoin_graph(DigraphParams(16, 2));
  REQUIRE(g16.nodes.size() == 16);
  std::multiset<std::size_t> degrees;
  for (const auto& adj : g16.adjacency) degrees.insert(adj.size());
  CHECK(degrees.count(7) == 8);
  CHECK(degrees.count(10) == 8);

  CHECK(build_crossjoin_graph(DigraphParams(8, 2)).nodes.size() == 2);
  CHECK(build_crossjoin_graph(DigraphParams(6, 3)).nodes.size() == 4);

  // The lone (4,2) cycle has no moves: one node, no edges, trivially connected.
  const auto g4 = build_crossjoin_graph(DigraphParams(4, 2));
  REQUIRE(g4.nodes.size() == 1);
  CHECK(g4.adjacency[0].empty());
  CHECK(is_connected(g4) == std::pair<bool, std::int64_t>{true, 1});

  CHECK_THROWS_AS(build_crossjoin_graph(DigraphParams(16, 2), 15), budget_exceeded);
}

TEST_CASE("connectivity of the cross-join graph") {
  for (auto [n, d] : std::vector<std::pair<Vertex, Vertex>>{{6, 2}, {8, 2}, {10, 2}, {12, 2},
                                                            {16, 2}, {6, 3}, {9, 3}, {12, 3}}) {
    const auto g = build_crossjoin_graph(DigraphParams(n, d));
    const auto [connected, components] = is_connected(g);
    INFO("N=" << n << " d=" << d);
    CHECK(connected);
    CHECK(components == 1);
  }
  CHECK(is_connected(CrossJoinGraph{DigraphParams(4, 2), {}, {}}) ==
        std::pair<bool, std::int64_t>{true, 0});
}

TEST_CASE("some neighbor always gets strictly closer to the destination") {
  for (auto [n, d] : std::vector<std::pair<Vertex, Vertex>>{{8, 2}, {16, 2}, {9, 3}}) {
    const auto cycles = collect_cycles(DigraphParams(n, d));
    std::vector<std::vector<DeBruijnCycle>> nbs;
    for (const auto& u : cycles) nbs.push_back(neighbors(u));
    for (std::size_t i = 0; i < cycles.size(); ++i)
      for (const auto& v : cycles) {
        if (cycles[i] == v) continue;
        const auto base = distance(cycles[i], v);
        const bool improves = std::any_of(nbs[i].begin(), nbs[i].end(), [&](const auto& w) {
          return distance(w, v) < base;
        });
        REQUIRE(improves);
      }
  }
}

TEST_CASE("cross-join paths reach the destination with decreasing distance") {
  const auto u = cycle(8, 2, {0, 1, 3, 7, 6, 5, 2, 4});
  const auto v = cycle(8, 2, {0, 1, 2, 5, 3, 7, 6, 4});
  CHECK(crossjoin_path(u, u).empty());
  const auto single = crossjoin_path(u, v);
  REQUIRE(single.size() == 1);
  CHECK(single[0].cycle == v);
  CHECK(single[0].move == CrossJoinMove{2, 6, 5, 7});

  for (auto [n, d] : std::vector<std::pair<Vertex, Vertex>>{{16, 2}, {9, 3}}) {
    const auto cycles = collect_cycles(DigraphParams(n, d));
    for (const auto& a : cycles)
      for (const auto& b : cycles) {
        if (a == b) continue;
        const auto steps = crossjoin_path(a, b);
        REQUIRE(!steps.empty());
        REQUIRE(static_cast<Vertex>(steps.size()) <= n);
        REQUIRE(steps.back().cycle == b);
        DeBruijnCycle prev = a;
        for (const auto& st : steps) {
          REQUIRE(apply_move(prev, st.move) == st.cycle);
          REQUIRE(distance(st.cycle, b) < distance(prev, b));
          prev = st.cycle;
        }
      }
  }

  CHECK_THROWS_AS(crossjoin_path(u, cycle(16, 2, golden::kSeed16)), invalid_input);
}

TEST_CASE("move construction from vertex pairs") {
  const auto u = cycle(8, 2, {0, 1, 3, 7, 6, 5, 2, 4});
  CHECK(move_from_vertices(u, {1, 5}, {6, 2}) == CrossJoinMove{2, 6, 5, 7});
  CHECK(move_from_vertices(u, {5, 1}, {2, 6}) == CrossJoinMove{2, 6, 5, 7});
  CHECK_THROWS_AS(move_from_vertices(u, {1, 5}, {7, 6}), invalid_input);
  CHECK_THROWS_AS(move_from_vertices(u, {1, 9}, {6, 2}), invalid_input);
}
