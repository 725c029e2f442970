#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <sstream>
#include <string>

#include "debruijn/io.hpp"
#include "golden_data.hpp"

using namespace debruijn;

TEST_CASE("vertex list round trip") {
  CHECK(format_vertex_list({0, 1, 3, 2}) == "0,1,3,2");
  CHECK(parse_vertex_list("0,1,3,2") == std::vector<Vertex>{0, 1, 3, 2});
  CHECK(parse_vertex_list("0, 1, 3, 2") == std::vector<Vertex>{0, 1, 3, 2});
  CHECK_THROWS_AS(parse_vertex_list("0,,1"), invalid_input);
  CHECK_THROWS_AS(parse_vertex_list("0,1,x"), invalid_input);
  CHECK_THROWS_AS(parse_vertex_list(""), invalid_input);
}

TEST_CASE("edge table text matches the published layout") {
  const DigraphParams p(12, 4);
  const auto text = edge_table_to_text(edge_table(p));
  std::istringstream lines(text);
  std::string line;
  std::getline(lines, line);
  CHECK(line == "0 -> 0, 1, 2, 3");
  for (int skip = 0; skip < 10; ++skip) std::getline(lines, line);
  std::getline(lines, line);
  CHECK(line == "11 -> 8, 9, 10, 11");
}

TEST_CASE("edge table json") {
  const DigraphParams p(10, 4);
  const auto j = nlohmann::json::parse(edge_table_to_json(p, edge_table(p)));
  CHECK(j["N"] == 10);
  CHECK(j["d"] == 4);
  CHECK(j["rows"][2] == nlohmann::json::array({8, 9, 0, 1}));
}

TEST_CASE("edge table dot") {
  const DigraphParams p(8, 2);
  const auto dot = edge_table_to_dot(p, edge_table(p));
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("  7 -> 6;") != std::string::npos);
  CHECK(dot.find("  7 -> 7;") != std::string::npos);
}

TEST_CASE("cycles file round trip") {
  const DigraphParams p(8, 2);
  const auto cycles = collect_cycles(p);
  const auto text = cycles_to_jsonl(p, cycles);
  std::istringstream in(text);
  const auto back = read_cycles_jsonl(in);
  CHECK(back.params == p);
  CHECK(back.cycles == cycles);

  std::istringstream empty("");
  CHECK_THROWS_AS(read_cycles_jsonl(empty), invalid_input);
  std::istringstream broken("{\"N\":8,\"d\":2}\n[0,1,3,7,6,5,4,2]\n");
  CHECK_THROWS_AS(read_cycles_jsonl(broken), invalid_input);
}

TEST_CASE("histogram csv fills the whole observed range") {
  std::map<std::int64_t, std::int64_t> h{{7, 8}, {10, 8}};
  CHECK(histogram_to_csv(h) == "n,f\n7,8\n8,0\n9,0\n10,8\n");
  CHECK(histogram_to_csv({}) == "n,f\n");
}

TEST_CASE("move serialization round trip") {
  const CrossJoinMove m{2, 6, 5, 7};
  CHECK(move_to_string(m) == "cross=2,6;join=5,7");
  CHECK(parse_move("cross=2,6;join=5,7") == m);
  CHECK_THROWS_AS(parse_move("cross=2,6"), invalid_input);
  CHECK_THROWS_AS(parse_move("join=5,7;cross=2,6"), invalid_input);
}

TEST_CASE("cross-join graph serialization") {
  const auto g = build_crossjoin_graph(DigraphParams(8, 2));
  const auto dot = crossjoin_graph_to_dot(g);
  CHECK(dot.find("graph crossjoin_8_2 {") != std::string::npos);
  CHECK(dot.find("0 -- 1;") != std::string::npos);
  const auto j = nlohmann::json::parse(crossjoin_graph_to_json(g));
  CHECK(j["nodes"].size() == 2);
  CHECK(j["edges"].size() == 1);
}

TEST_CASE("walk serialization round trip") {
  const auto seed = validate(DigraphParams(16, 2), golden::kSeed16);
  const auto r = hamilton_path(seed, JoinRule::largest);
  std::istringstream in(hamilton_to_jsonl(r));
  const auto back = read_hamilton_jsonl(in);
  CHECK(back.params == r.params);
  CHECK(back.rule == r.rule);
  CHECK(back.cycles == r.cycles);
  CHECK(back.moves == r.moves);
  CHECK(back.closed == r.closed);
  CHECK(back.exhausted == r.exhausted);
}

TEST_CASE("walk text annotates the outgoing move") {
  const auto seed = validate(DigraphParams(16, 2), golden::kSeed16);
  const auto r = hamilton_path(seed, JoinRule::largest);
  const auto text = hamilton_to_text(r);
  std::istringstream lines(text);
  std::string first, marks;
  std::getline(lines, first);
  std::getline(lines, marks);
  CHECK(first == " 1) 0, 1, 3, 7, 15, 14, 13, 11, 6, 12, 9, 2, 5, 10, 4, 8");
  // Move 1 crosses positions 7 and 13 and joins 10 and 15.
  REQUIRE(marks.size() <= first.size());
  CHECK(marks[first.find("13")] == '^');
  CHECK(marks[first.find(" 5,") + 1] == '^');
  CHECK(marks[first.find("12")] == '_');
  CHECK(marks[first.find(" 4,") + 1] == '_');
  CHECK(text.find("closed: false") != std::string::npos);
  CHECK(text.find("count: 16") != std::string::npos);
}

TEST_CASE("join rule names") {
  CHECK(join_rule_name(JoinRule::largest) == "largest");
  CHECK(parse_join_rule("smallest") == JoinRule::smallest);
  CHECK_THROWS_AS(parse_join_rule("biggest"), invalid_input);
}
