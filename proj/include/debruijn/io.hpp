#pragma once

#include <istream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "debruijn/crossjoin.hpp"
#include "debruijn/cycle.hpp"
#include "debruijn/graph.hpp"
#include "debruijn/hamilton.hpp"

namespace debruijn {

// ---------------------------------------------------------------------------
// vertex lists: "0,1,3,7,6,5,2,4"

inline std::string format_vertex_list(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) out << ',';
    out << vs[i];
  }
  return out.str();
}

inline std::vector<Vertex> parse_vertex_list(const std::string& text) {
  std::vector<Vertex> out;
  std::string token;
  std::istringstream in(text);
  while (std::getline(in, token, ',')) {
    try {
      std::size_t used = 0;
      const Vertex v = std::stoll(token, &used);
      while (used < token.size() && std::isspace(static_cast<unsigned char>(token[used]))) ++used;
      if (used != token.size()) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw invalid_input("bad vertex list entry '" + token + "'");
    }
  }
  if (out.empty()) throw invalid_input("empty vertex list");
  return out;
}

// ---------------------------------------------------------------------------
// edge table

inline std::string edge_table_to_text(const std::vector<std::vector<Vertex>>& rows) {
  std::ostringstream out;
  for (std::size_t x = 0; x < rows.size(); ++x) {
    out << x << " -> ";
    for (std::size_t i = 0; i < rows[x].size(); ++i) {
      if (i) out << ", ";
      out << rows[x][i];
    }
    out << '\n';
  }
  return out.str();
}

inline std::string edge_table_to_dot(const DigraphParams& p,
                                     const std::vector<std::vector<Vertex>>& rows) {
  std::ostringstream out;
  out << "digraph debruijn_" << p.n << "_" << p.d << " {\n";
  for (std::size_t x = 0; x < rows.size(); ++x)
    for (Vertex y : rows[x]) out << "  " << x << " -> " << y << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string edge_table_to_json(const DigraphParams& p,
                                      const std::vector<std::vector<Vertex>>& rows) {
  nlohmann::json j;
  j["N"] = p.n;
  j["d"] = p.d;
  j["rows"] = rows;
  return j.dump();
}

// ---------------------------------------------------------------------------
// cycle collections; the JSON-lines form is a {"N":...,"d":...} header line
// followed by one JSON array per cycle.

inline std::string cycles_to_text(const std::vector<DeBruijnCycle>& cycles) {
  std::ostringstream out;
  for (const auto& c : cycles) out << format_vertex_list(c.verts) << '\n';
  return out.str();
}

inline std::string cycles_to_json(const DigraphParams& p, const std::vector<DeBruijnCycle>& cycles) {
  nlohmann::json j;
  j["N"] = p.n;
  j["d"] = p.d;
  auto& arr = j["cycles"] = nlohmann::json::array();
  for (const auto& c : cycles) arr.push_back(c.verts);
  return j.dump();
}

inline std::string cycles_to_jsonl(const DigraphParams& p,
                                   const std::vector<DeBruijnCycle>& cycles) {
  std::ostringstream out;
  out << nlohmann::json{{"N", p.n}, {"d", p.d}}.dump() << '\n';
  for (const auto& c : cycles) out << nlohmann::json(c.verts).dump() << '\n';
  return out.str();
}

struct CyclesFile {
  DigraphParams params;
  std::vector<DeBruijnCycle> cycles;
};

inline CyclesFile read_cycles_jsonl(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw invalid_input("cycles file is empty");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("bad cycles file header: ") + e.what());
  }
  if (!header.contains("N") || !header.contains("d"))
    throw invalid_input("cycles file header must carry N and d");
  CyclesFile f{DigraphParams(header["N"].get<Vertex>(), header["d"].get<Vertex>()), {}};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw invalid_input(std::string("bad cycles file line: ") + e.what());
    }
    f.cycles.push_back(validate(f.params, row.get<std::vector<Vertex>>()));
  }
  return f;
}

// ---------------------------------------------------------------------------
// neighbor census: CSV with header n,f; rows cover the whole integer range
// between the smallest and largest observed counts, zeros included.

inline std::string histogram_to_csv(const std::map<std::int64_t, std::int64_t>& hist) {
  std::ostringstream out;
  out << "n,f\n";
  if (!hist.empty()) {
    const std::int64_t lo = hist.begin()->first;
    const std::int64_t hi = hist.rbegin()->first;
    for (std::int64_t n = lo; n <= hi; ++n) {
      const auto it = hist.find(n);
      out << n << ',' << (it == hist.end() ? 0 : it->second) << '\n';
    }
  }
  return out.str();
}

// ---------------------------------------------------------------------------
// cross-join graph

inline std::string crossjoin_graph_to_dot(const CrossJoinGraph& g) {
  std::ostringstream out;
  out << "graph crossjoin_" << g.params.n << "_" << g.params.d << " {\n";
  for (std::size_t i = 0; i < g.nodes.size(); ++i)
    out << "  " << i << " [label=\"" << format_vertex_list(g.nodes[i].verts) << "\"];\n";
  for (std::size_t i = 0; i < g.adjacency.size(); ++i)
    for (std::int64_t j : g.adjacency[i])
      if (static_cast<std::int64_t>(i) < j) out << "  " << i << " -- " << j << ";\n";
  out << "}\n";
  return out.str();
}

inline std::string crossjoin_graph_to_json(const CrossJoinGraph& g) {
  nlohmann::json j;
  j["N"] = g.params.n;
  j["d"] = g.params.d;
  auto& nodes = j["nodes"] = nlohmann::json::array();
  for (const auto& c : g.nodes) nodes.push_back(c.verts);
  auto& edges = j["edges"] = nlohmann::json::array();
  for (std::size_t i = 0; i < g.adjacency.size(); ++i)
    for (std::int64_t n : g.adjacency[i])
      if (static_cast<std::int64_t>(i) < n)
        edges.push_back(nlohmann::json::array({static_cast<std::int64_t>(i), n}));
  return j.dump();
}

// ---------------------------------------------------------------------------
// moves: "cross=2,6;join=5,7" with 1-based positions, join listed p_in,p_out.

inline std::string move_to_string(const CrossJoinMove& m) {
  std::ostringstream out;
  out << "cross=" << m.a << ',' << m.b << ";join=" << m.p_in << ',' << m.p_out;
  return out.str();
}

inline CrossJoinMove parse_move(const std::string& text) {
  CrossJoinMove m;
  char sep = 0;
  std::istringstream in(text);
  std::string word;
  if (!std::getline(in, word, '=') || word != "cross" || !(in >> m.a) || !(in >> sep) ||
      sep != ',' || !(in >> m.b) || !(in >> sep) || sep != ';' || !std::getline(in, word, '=') ||
      word != "join" || !(in >> m.p_in) || !(in >> sep) || sep != ',' || !(in >> m.p_out))
    throw invalid_input("bad move '" + text + "', expected cross=a,b;join=p_in,p_out");
  return m;
}

// ---------------------------------------------------------------------------
// hamiltonian walk results

inline std::string join_rule_name(JoinRule r) {
  return r == JoinRule::largest ? "largest" : "smallest";
}

inline JoinRule parse_join_rule(const std::string& s) {
  if (s == "largest") return JoinRule::largest;
  if (s == "smallest") return JoinRule::smallest;
  throw invalid_input("join rule must be 'largest' or 'smallest', got '" + s + "'");
}

inline std::string hamilton_to_jsonl(const HamiltonPathResult& r) {
  std::ostringstream out;
  out << nlohmann::json{{"N", r.params.n},
                        {"d", r.params.d},
                        {"join_rule", join_rule_name(r.rule)},
                        {"closed", r.closed},
                        {"exhausted", r.exhausted},
                        {"count", r.cycles.size()}}
             .dump()
      << '\n';
  for (std::size_t k = 0; k < r.cycles.size(); ++k) {
    nlohmann::json line;
    line["cycle"] = r.cycles[k].verts;
    if (k > 0) {
      const auto& m = r.moves[k - 1];
      line["move"] = {{"cross", {m.a, m.b}}, {"join", {m.p_in, m.p_out}}};
    }
    out << line.dump() << '\n';
  }
  return out.str();
}

inline HamiltonPathResult read_hamilton_jsonl(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw invalid_input("walk file is empty");
  nlohmann::json header;
  try {
    header = nlohmann::json::parse(line);
  } catch (const nlohmann::json::exception& e) {
    throw invalid_input(std::string("bad walk file header: ") + e.what());
  }
  if (!header.contains("N") || !header.contains("d"))
    throw invalid_input("walk file header must carry N and d");
  HamiltonPathResult r{DigraphParams(header["N"].get<Vertex>(), header["d"].get<Vertex>()),
                       parse_join_rule(header.value("join_rule", "largest")),
                       {},
                       {},
                       header.value("closed", false),
                       header.value("exhausted", false)};
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    nlohmann::json row;
    try {
      row = nlohmann::json::parse(line);
    } catch (const nlohmann::json::exception& e) {
      throw invalid_input(std::string("bad walk file line: ") + e.what());
    }
    if (!row.contains("cycle")) throw invalid_input("walk file line lacks a cycle");
    r.cycles.push_back(validate(r.params, row["cycle"].get<std::vector<Vertex>>()));
    if (r.cycles.size() > 1) {
      if (!row.contains("move"))
        throw invalid_input("walk file line " + std::to_string(r.cycles.size()) + " lacks a move");
      const auto& mv = row["move"];
      r.moves.push_back(CrossJoinMove{mv["cross"][0].get<Pos>(), mv["cross"][1].get<Pos>(),
                                      mv["join"][0].get<Pos>(), mv["join"][1].get<Pos>()});
    }
  }
  return r;
}

/// Human-readable listing: one numbered line per cycle, with the positions of
/// the outgoing move marked on an annotation line below it (^ cross pair,
/// _ join pair, * both).
inline std::string hamilton_to_text(const HamiltonPathResult& r) {
  std::ostringstream out;
  const int label_width = static_cast<int>(std::to_string(r.cycles.size()).size());
  for (std::size_t k = 0; k < r.cycles.size(); ++k) {
    std::string label = std::to_string(k + 1);
    label.insert(0, static_cast<std::size_t>(label_width) - label.size(), ' ');
    std::string line = label + ") ";
    std::vector<std::size_t> starts;
    const auto& vs = r.cycles[k].verts;
    for (std::size_t i = 0; i < vs.size(); ++i) {
      if (i) line += ", ";
      starts.push_back(line.size());
      line += std::to_string(vs[i]);
    }
    out << line << '\n';
    if (k < r.moves.size()) {
      const auto& m = r.moves[k];
      std::string marks(line.size(), ' ');
      const auto put = [&](Pos pos, char c) {
        auto& slot = marks[starts[static_cast<std::size_t>(pos - 1)]];
        slot = slot == ' ' ? c : '*';
      };
      put(m.a, '^');
      put(m.b, '^');
      put(m.p_in, '_');
      put(m.p_out, '_');
      while (!marks.empty() && marks.back() == ' ') marks.pop_back();
      out << marks << '\n';
    }
  }
  out << "count: " << r.cycles.size() << '\n';
  out << "closed: " << (r.closed ? "true" : "false") << '\n';
  out << "exhausted: " << (r.exhausted ? "true" : "false") << '\n';
  return out.str();
}

}  // namespace debruijn
