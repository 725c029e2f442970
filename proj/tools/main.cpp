// Command-line front end: edge tables, cycle enumeration, exact counts,
// cross-join operations and the hamiltonian walk over the cross-join graph.
//
// Exit codes: 0 success, 2 input/validation error, 3 resource budget
// exceeded, 4 internal invariant violation.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "debruijn/counting.hpp"
#include "debruijn/crossjoin.hpp"
#include "debruijn/cycle.hpp"
#include "debruijn/graph.hpp"
#include "debruijn/hamilton.hpp"
#include "debruijn/io.hpp"

namespace {

using namespace debruijn;

struct GlobalOpts {
  Vertex n = 0;
  Vertex d = 0;
  std::string format = "text";
  std::string out;
  int threads = 1;
  std::int64_t budget = kDefaultCycleBudget;

  DigraphParams params() const { return DigraphParams(n, d); }
};

void add_params(CLI::App* cmd, GlobalOpts& o) {
  cmd->add_option("--n", o.n, "vertex count N")->required();
  cmd->add_option("--d", o.d, "out-degree / alphabet size d")->required();
}

void add_format(CLI::App* cmd, GlobalOpts& o, const std::vector<std::string>& choices) {
  cmd->add_option("--format", o.format, "output format")
      ->check(CLI::IsMember(choices))
      ->default_val(choices.front());
}

void add_out(CLI::App* cmd, GlobalOpts& o) {
  cmd->add_option("--out", o.out, "write output to this file instead of stdout");
}

void add_threads(CLI::App* cmd, GlobalOpts& o) {
  cmd->add_option("--threads", o.threads, "worker thread count")
      ->check(CLI::PositiveNumber)
      ->default_val(1);
}

void add_budget(CLI::App* cmd, GlobalOpts& o) {
  cmd->add_option("--budget", o.budget, "maximum number of cycles to enumerate")
      ->check(CLI::PositiveNumber)
      ->default_val(kDefaultCycleBudget);
}

void emit(const GlobalOpts& o, const std::string& text) {
  if (o.out.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw invalid_input("cannot open output file '" + o.out + "'");
  f << text;
}

DeBruijnCycle load_cycle(const GlobalOpts& o, const std::string& inline_list,
                         const std::string& file, std::int64_t index) {
  if (!inline_list.empty()) return validate(o.params(), parse_vertex_list(inline_list));
  if (file.empty()) throw invalid_input("provide a cycle inline or via a file");
  std::ifstream in(file);
  if (!in) throw invalid_input("cannot open cycles file '" + file + "'");
  const CyclesFile cf = read_cycles_jsonl(in);
  if (!(cf.params == o.params()))
    throw invalid_input("cycles file is for " + cf.params.str() + ", requested " +
                        o.params().str());
  if (index < 0 || index >= static_cast<std::int64_t>(cf.cycles.size()))
    throw invalid_input("cycle index " + std::to_string(index) + " out of range, file holds " +
                        std::to_string(cf.cycles.size()));
  return cf.cycles[static_cast<std::size_t>(index)];
}

// --- command bodies --------------------------------------------------------

void run_edges(const GlobalOpts& o) {
  const auto p = o.params();
  const auto rows = edge_table(p);
  if (o.format == "dot")
    emit(o, edge_table_to_dot(p, rows));
  else if (o.format == "json")
    emit(o, edge_table_to_json(p, rows));
  else
    emit(o, edge_table_to_text(rows));
}

void run_cycles(const GlobalOpts& o, bool count_only) {
  const auto p = o.params();
  const auto cycles = collect_cycles_parallel(p, o.threads, o.budget);
  if (count_only) {
    std::ostringstream out;
    out << cycles.size() << '\n';
    if (const auto k = power_order(p)) {
      const CycleCount expected = count_formula(p.d, *k);
      out << "formula " << expected << ' '
          << (expected == CycleCount(cycles.size()) ? "AGREE" : "DISAGREE") << '\n';
    }
    emit(o, out.str());
    return;
  }
  if (o.format == "text")
    emit(o, cycles_to_text(cycles));
  else if (o.format == "json")
    emit(o, cycles_to_json(p, cycles));
  else
    emit(o, cycles_to_jsonl(p, cycles));
}

void run_counts_debruijn(const GlobalOpts& o, std::int64_t d, std::int64_t k) {
  emit(o, count_formula(d, k).str() + "\n");
}

void run_counts_chang(const GlobalOpts& o, std::int64_t k) {
  emit(o, chang_count(k).str() + "\n");
}

void run_distance(const GlobalOpts& o, const std::string& u_list, const std::string& v_list) {
  const auto p = o.params();
  const auto u = validate(p, parse_vertex_list(u_list));
  const auto v = validate(p, parse_vertex_list(v_list));
  emit(o, std::to_string(distance(u, v)) + "\n");
}

struct MoveSpec {
  std::string cross_vertices, join_vertices, cross_positions, join_positions;
};

CrossJoinMove resolve_move(const DeBruijnCycle& u, const MoveSpec& s) {
  const auto pair_of = [](const std::string& text, const char* what) {
    const auto vs = parse_vertex_list(text);
    if (vs.size() != 2) throw invalid_input(std::string(what) + " needs exactly two values");
    return std::pair<Vertex, Vertex>{vs[0], vs[1]};
  };
  if (!s.cross_vertices.empty() || !s.join_vertices.empty()) {
    if (s.cross_vertices.empty() || s.join_vertices.empty())
      throw invalid_input("--cross-vertices and --join-vertices go together");
    return move_from_vertices(u, pair_of(s.cross_vertices, "--cross-vertices"),
                              pair_of(s.join_vertices, "--join-vertices"));
  }
  if (s.cross_positions.empty() || s.join_positions.empty())
    throw invalid_input("provide --cross-vertices/--join-vertices or "
                        "--cross-positions/--join-positions");
  const auto [a, b] = pair_of(s.cross_positions, "--cross-positions");
  const auto [p_in, p_out] = pair_of(s.join_positions, "--join-positions");
  return CrossJoinMove{a, b, p_in, p_out};
}

void run_crossjoin_apply(const GlobalOpts& o, const DeBruijnCycle& u, const MoveSpec& spec) {
  const auto result = apply_move(u, resolve_move(u, spec));
  if (o.format == "json")
    emit(o, nlohmann::json(result.verts).dump() + "\n");
  else
    emit(o, format_vertex_list(result.verts) + "\n");
}

void run_crossjoin_neighbors(const GlobalOpts& o, const DeBruijnCycle& u, bool count_only) {
  const auto nb = neighbors(u);
  if (count_only) {
    emit(o, std::to_string(nb.size()) + "\n");
    return;
  }
  if (o.format == "json")
    emit(o, cycles_to_json(u.params, nb));
  else if (o.format == "jsonl")
    emit(o, cycles_to_jsonl(u.params, nb));
  else
    emit(o, cycles_to_text(nb));
}

void run_crossjoin_histogram(const GlobalOpts& o) {
  emit(o, histogram_to_csv(neighbor_histogram(o.params(), o.threads, o.budget)));
}

void run_crossjoin_connectivity(const GlobalOpts& o) {
  const auto g = build_crossjoin_graph(o.params(), o.budget, o.threads);
  const auto [connected, components] = is_connected(g);
  if (o.format == "dot") {
    emit(o, crossjoin_graph_to_dot(g));
    return;
  }
  if (o.format == "json") {
    nlohmann::json j = nlohmann::json::parse(crossjoin_graph_to_json(g));
    j["connected"] = connected;
    j["components"] = components;
    emit(o, j.dump() + "\n");
    return;
  }
  std::ostringstream out;
  out << (connected ? "connected" : "disconnected") << ", " << components << " component"
      << (components == 1 ? "" : "s") << ", " << g.nodes.size() << " node"
      << (g.nodes.size() == 1 ? "" : "s");
  if (g.nodes.empty()) out << " (no cycles exist)";
  out << '\n';
  emit(o, out.str());
}

void run_crossjoin_path(const GlobalOpts& o, const std::string& u_list,
                        const std::string& v_list) {
  const auto p = o.params();
  const auto u = validate(p, parse_vertex_list(u_list));
  const auto v = validate(p, parse_vertex_list(v_list));
  const auto steps = crossjoin_path(u, v);
  std::ostringstream out;
  for (std::size_t i = 0; i < steps.size(); ++i)
    out << "step " << i + 1 << ": " << move_to_string(steps[i].move) << " -> "
        << format_vertex_list(steps[i].cycle.verts) << '\n';
  out << "steps: " << steps.size() << '\n';
  emit(o, out.str());
}

void run_hamilton_run(const GlobalOpts& o, const DeBruijnCycle& seed, const std::string& rule) {
  const auto result = hamilton_path(seed, parse_join_rule(rule));
  check_result(result);
  if (o.format == "jsonl")
    emit(o, hamilton_to_jsonl(result));
  else
    emit(o, hamilton_to_text(result));
}

void run_hamilton_verify(const GlobalOpts& o, const std::string& file) {
  std::ifstream in(file);
  if (!in) throw invalid_input("cannot open walk file '" + file + "'");
  const auto r = read_hamilton_jsonl(in);
  const bool ok = is_hamiltonian_path(r, r.params, o.budget);
  emit(o, std::string("hamiltonian: ") + (ok ? "true" : "false") + "\n");
}

void run_hamilton_find_seed(const GlobalOpts& o, const std::string& rule) {
  const auto seed = find_cycle_seed(o.params(), parse_join_rule(rule), o.budget);
  emit(o, (seed ? format_vertex_list(seed->verts) : std::string("none")) + "\n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized de Bruijn digraphs, cross-join operations and "
               "hamiltonian walks over the cross-join graph"};
  app.require_subcommand(1);

  GlobalOpts o;
  bool count_only = false;
  std::int64_t cd = 0, ck = 0;
  std::string u_list, v_list, cycle_list, cycle_file, rule = "largest", in_file;
  std::int64_t cycle_index = 0;
  MoveSpec spec;

  auto* edges = app.add_subcommand("edges", "print the adjacency rows of the digraph");
  add_params(edges, o);
  add_format(edges, o, {"text", "dot", "json"});
  add_out(edges, o);

  auto* cycles = app.add_subcommand("cycles", "enumerate all de Bruijn cycles");
  add_params(cycles, o);
  cycles->add_flag("--count-only", count_only, "print only the cycle count");
  add_format(cycles, o, {"jsonl", "text", "json"});
  add_out(cycles, o);
  add_threads(cycles, o);
  add_budget(cycles, o);

  auto* counts = app.add_subcommand("counts", "exact closed-form counts");
  counts->require_subcommand(1);
  auto* counts_db = counts->add_subcommand("debruijn", "number of de Bruijn cycles of order k");
  counts_db->add_option("--d", cd, "alphabet size")->required();
  counts_db->add_option("--k", ck, "order")->required();
  auto* counts_ch = counts->add_subcommand("chang", "cross-join pairs of a maximal-period LFSR");
  counts_ch->add_option("--k", ck, "order")->required();

  auto* dist = app.add_subcommand("distance", "N minus the longest common prefix of two cycles");
  add_params(dist, o);
  dist->add_option("--u", u_list, "first cycle, comma separated")->required();
  dist->add_option("--v", v_list, "second cycle, comma separated")->required();

  auto* cj = app.add_subcommand("crossjoin", "cross-join operations");
  cj->require_subcommand(1);

  auto* cj_apply = cj->add_subcommand("apply", "apply one cross-join move");
  add_params(cj_apply, o);
  cj_apply->add_option("--cycle", cycle_list, "source cycle, comma separated")->required();
  cj_apply->add_option("--cross-vertices", spec.cross_vertices, "cross pair as vertices a,b");
  cj_apply->add_option("--join-vertices", spec.join_vertices, "join pair as vertices p,q");
  cj_apply->add_option("--cross-positions", spec.cross_positions, "cross pair as 1-based positions");
  cj_apply->add_option("--join-positions", spec.join_positions,
                       "join pair as 1-based positions p_in,p_out");
  add_format(cj_apply, o, {"text", "json"});
  add_out(cj_apply, o);

  auto* cj_nb = cj->add_subcommand("neighbors", "all cycles one cross-join away");
  add_params(cj_nb, o);
  cj_nb->add_option("--cycle", cycle_list, "source cycle, comma separated");
  cj_nb->add_option("--cycle-file", cycle_file, "JSON-lines cycles file");
  cj_nb->add_option("--cycle-index", cycle_index, "which cycle of the file")->default_val(0);
  cj_nb->add_flag("--count-only", count_only, "print only the neighbor count");
  add_format(cj_nb, o, {"text", "json", "jsonl"});
  add_out(cj_nb, o);

  auto* cj_hist = cj->add_subcommand("histogram", "neighbor-count census over all cycles");
  add_params(cj_hist, o);
  add_format(cj_hist, o, {"csv"});
  add_out(cj_hist, o);
  add_threads(cj_hist, o);
  add_budget(cj_hist, o);

  auto* cj_conn = cj->add_subcommand("connectivity", "components of the cross-join graph");
  add_params(cj_conn, o);
  add_format(cj_conn, o, {"text", "json", "dot"});
  add_out(cj_conn, o);
  add_threads(cj_conn, o);
  add_budget(cj_conn, o);

  auto* cj_path = cj->add_subcommand("path", "distance-decreasing cross-join walk u -> v");
  add_params(cj_path, o);
  cj_path->add_option("--u", u_list, "start cycle")->required();
  cj_path->add_option("--v", v_list, "destination cycle")->required();
  add_out(cj_path, o);

  auto* ham = app.add_subcommand("hamilton", "hamiltonian walks over the cross-join graph");
  ham->require_subcommand(1);

  auto* ham_run = ham->add_subcommand("run", "walk the cross-join graph from a seed");
  add_params(ham_run, o);
  ham_run->add_option("--seed", cycle_list, "seed cycle, comma separated");
  ham_run->add_option("--seed-file", cycle_file, "JSON-lines cycles file");
  ham_run->add_option("--seed-index", cycle_index, "which cycle of the file")->default_val(0);
  ham_run->add_option("--join-rule", rule, "join pair preference")
      ->check(CLI::IsMember({"largest", "smallest"}))
      ->default_val("largest");
  add_format(ham_run, o, {"text", "jsonl"});
  add_out(ham_run, o);

  auto* ham_verify = ham->add_subcommand("verify", "check a saved walk covers everything");
  ham_verify->add_option("--in", in_file, "JSON-lines walk file")->required();
  add_budget(ham_verify, o);
  add_out(ham_verify, o);

  auto* ham_seed = ham->add_subcommand("find-cycle-seed",
                                       "first seed whose walk closes into a hamiltonian cycle");
  add_params(ham_seed, o);
  ham_seed->add_option("--join-rule", rule, "join pair preference")
      ->check(CLI::IsMember({"largest", "smallest"}))
      ->default_val("largest");
  add_budget(ham_seed, o);
  add_out(ham_seed, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (edges->parsed()) run_edges(o);
    if (cycles->parsed()) run_cycles(o, count_only);
    if (counts_db->parsed()) run_counts_debruijn(o, cd, ck);
    if (counts_ch->parsed()) run_counts_chang(o, ck);
    if (dist->parsed()) run_distance(o, u_list, v_list);
    if (cj_apply->parsed())
      run_crossjoin_apply(o, validate(o.params(), parse_vertex_list(cycle_list)), spec);
    if (cj_nb->parsed())
      run_crossjoin_neighbors(o, load_cycle(o, cycle_list, cycle_file, cycle_index), count_only);
    if (cj_hist->parsed()) run_crossjoin_histogram(o);
    if (cj_conn->parsed()) run_crossjoin_connectivity(o);
    if (cj_path->parsed()) run_crossjoin_path(o, u_list, v_list);
    if (ham_run->parsed())
      run_hamilton_run(o, load_cycle(o, cycle_list, cycle_file, cycle_index), rule);
    if (ham_verify->parsed()) run_hamilton_verify(o, in_file);
    if (ham_seed->parsed()) run_hamilton_find_seed(o, rule);
  } catch (const invalid_input& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const unsupported_operation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const budget_exceeded& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  } catch (const invariant_violation& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}
