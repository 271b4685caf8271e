// phanoi: command-line front end.
//
// Exit status: 0 success, 1 verification failure, 2 internal consistency
// failure, 3 resource limit or overflow, 64 bad argument value.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include "phanoi/analysis.hpp"
#include "phanoi/errors.hpp"
#include "phanoi/sequences.hpp"
#include "phanoi/solver.hpp"
#include "phanoi/stategraph.hpp"
#include "phanoi/verify.hpp"

namespace {

using namespace phanoi;
namespace seq = phanoi::sequences;
namespace an = phanoi::analysis;

constexpr int kExitVerify = 1;
constexpr int kExitConsistency = 2;
constexpr int kExitResource = 3;
constexpr int kExitUsage = 64;

struct Global {
  std::string format = "text";
  std::string out;
  int oracle_cap = solver::kDefaultOracleCap;
};

class ConsistencyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(g.out, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open " + g.out);
  f << text;
}

void require_format(const Global& g, std::initializer_list<std::string_view> allowed) {
  for (auto a : allowed) {
    if (g.format == a) return;
  }
  throw std::invalid_argument("format '" + g.format + "' is not available for this command");
}

std::string padded(const std::string& s, std::size_t w) { return std::string(w > s.size() ? w - s.size() : 0, ' ') + s; }

// ---- seq ----

int cmd_seq(const Global& g, int max_n) {
  require_format(g, {"text", "csv", "json"});
  if (max_n < 0) throw std::invalid_argument("--max must be non-negative");
  const auto table = seq::coupled_counts(max_n);
  if (auto d = seq::first_discrepancy(table, seq::higher_order_counts(max_n))) {
    throw ConsistencyError("higher-order route disagrees: " + d->describe());
  }
  if (auto d = seq::first_closed_form_discrepancy(max_n, seq::ClosedFormReading::kGrouped)) {
    throw ConsistencyError("closed-form route disagrees: " + d->describe());
  }
  if (g.format == "csv") {
    emit(g, seq::to_csv(table));
  } else if (g.format == "json") {
    emit(g, seq::to_json(table));
  } else {
    std::size_t w = 2;
    for (const auto& r : table.rows) w = std::max(w, r.h3.str().size());
    std::string out = padded("n", 4);
    for (const char* h : {"h3", "h4", "a", "b", "c", "d"}) out += " " + padded(h, w);
    out += "\n";
    for (const auto& r : table.rows) {
      out += padded(std::to_string(r.n), 4);
      for (const auto* v : {&r.h3, &r.h4, &r.a, &r.b, &r.c, &r.d}) out += " " + padded(v->str(), w);
      out += "\n";
    }
    emit(g, out);
  }
  return 0;
}

// ---- solve ----

int cmd_solve(const Global& g, const std::string& task_name, int n, const std::string& what) {
  require_format(g, {"text", "csv", "json"});
  if (what != "moves" && what != "states") throw std::invalid_argument("--emit must be moves or states");
  const Task task = parse_task(task_name);
  const auto sequence = solver::solve(task, n);
  const auto rep = solver::verify_sequence(sequence, g.oracle_cap);
  if (!rep.ok) throw ConsistencyError(std::string("generated sequence failed verification: ") + std::string(solver::name(rep.kind)) + ", " + rep.detail);
  const bool states = what == "states";

  std::vector<std::string> words;
  if (states) {
    State s = sequence.start;
    words.push_back(s.word());
    for (const Move& m : sequence.moves) {
      s = apply(s, m);
      words.push_back(s.word());
    }
  }
  std::string out;
  if (g.format == "json") {
    nlohmann::ordered_json j;
    j["task"] = std::string(1, task_char(task));
    j["n"] = n;
    j["length"] = sequence.moves.size();
    nlohmann::ordered_json moves = nlohmann::ordered_json::array();
    for (const Move& m : sequence.moves) moves.push_back({m.disc, to_int(m.from), to_int(m.to)});
    j["moves"] = std::move(moves);
    if (states) j["states"] = words;
    out = j.dump(2) + "\n";
  } else if (g.format == "csv") {
    out = states ? "step,disc,from,to,state\n" : "step,disc,from,to\n";
    for (std::size_t i = 0; i < sequence.moves.size(); ++i) {
      const Move& m = sequence.moves[i];
      out += std::to_string(i + 1) + "," + std::to_string(m.disc) + "," + to_char(m.from) + "," + to_char(m.to);
      if (states) out += "," + words[i + 1];
      out += "\n";
    }
  } else {
    if (states) out += words[0] + "\n";
    for (std::size_t i = 0; i < sequence.moves.size(); ++i) {
      out += to_string(sequence.moves[i]) + "\n";
      if (states) out += words[i + 1] + "\n";
    }
  }
  emit(g, out);
  return 0;
}

// ---- graph ----

std::string metrics_text(const graph::GraphMetrics& m) {
  std::ostringstream o;
  o << "n " << m.n << "\nvertices " << m.vertices << "\nedges " << m.edges << "\ndelta " << m.min_degree
    << "\nDelta " << m.max_degree << "\navg_degree " << m.average_degree.str() << " (" << std::setprecision(10)
    << m.average_degree.convert_to<double>() << ")\nkappa " << m.kappa << "\nlambda " << m.lambda << "\n"
    << (m.diameter_exact ? "diameter " : "diameter_lower_bound ") << m.diameter << "\nomega " << m.omega
    << "\nchi " << m.chi << "\nchi_prime " << m.chi_prime << "\n";
  return o.str();
}

int cmd_graph(const Global& g, int n, int pegs, const std::string& export_kind, bool stats) {
  require_format(g, {"text", "json", "dot"});
  const auto graph_obj = pegs == 0 ? graph::StateGraph::parity(n) : graph::StateGraph::classical(pegs, n);
  std::string out;
  std::string kind = export_kind;
  if (kind.empty() && g.format == "dot") kind = "dot";
  if (kind == "dot") {
    out += graph::to_dot(graph_obj);
  } else if (kind == "edges") {
    out += graph::to_edge_list(graph_obj);
  } else if (kind == "json") {
    stats = true;
  } else if (!kind.empty()) {
    throw std::invalid_argument("--export must be dot, edges or json");
  }
  if (stats || kind.empty()) {
    const auto m = graph::compute_metrics(graph_obj);
    out += (g.format == "json" || kind == "json") ? graph::to_json(m) : metrics_text(m);
  }
  emit(g, out);
  return 0;
}

// ---- verify ----

int cmd_verify(const Global& g, const std::string& suite, int max_n) {
  require_format(g, {"text", "json"});
  const auto report = verify::run(verify::parse_suite(suite), {max_n, g.oracle_cap});
  emit(g, g.format == "json" ? verify::to_json(report) : verify::to_text(report));
  return report.ok() ? 0 : kExitVerify;
}

// ---- ratios ----

std::string decimal(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

int cmd_ratios(const Global& g, int k_max, int table_n, bool log10) {
  require_format(g, {"text", "csv", "json"});
  if (table_n >= 0) {
    const auto rows = an::comparison_table(table_n);
    emit(g, g.format == "json" ? an::comparison_json(rows, log10) : an::comparison_csv(rows, log10));
    return 0;
  }
  if (k_max < 1) throw std::invalid_argument("--k must be at least 1");
  const auto counts = seq::coupled_counts(2 * k_max + 1);
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  std::string csv =
      "sequence,k,even_ratio,even_decimal,even_limit,even_error,odd_ratio,odd_decimal,odd_limit,odd_error,"
      "within_1e-3,two_step_even,two_step_odd,envelope_even,envelope_odd\n";
  std::string text;
  for (seq::Sequence s : seq::kParitySequences) {
    const auto col = counts.column(s);
    for (const auto& r : an::subsequence_ratios(s, k_max)) {
      const auto i = static_cast<std::size_t>(2 * r.k);
      const std::string two_even = col[i - 2] == 0 ? "" : an::Rational(col[i], col[i - 2]).str();
      const std::string two_odd = an::Rational(col[i + 1], col[i - 1]).str();
      const double env_even = an::Rational(col[i], an::BigInt(1) << r.k).convert_to<double>();
      const double env_odd = an::Rational(col[i + 1], an::BigInt(1) << r.k).convert_to<double>() / std::sqrt(2.0);
      const bool within = r.even_error < 1e-3 && r.odd_error < 1e-3;
      const std::string name(seq::name(s));
      csv += name + "," + std::to_string(r.k) + "," + r.even_over_odd.str() + "," +
             decimal(r.even_over_odd.convert_to<double>()) + "," + r.limits.even_over_odd.str() + "," +
             decimal(r.even_error) + "," + r.odd_over_even.str() + "," + decimal(r.odd_over_even.convert_to<double>()) +
             "," + r.limits.odd_over_even.str() + "," + decimal(r.odd_error) + "," + (within ? "true" : "false") + "," +
             two_even + "," + two_odd + "," + decimal(env_even) + "," + decimal(env_odd) + "\n";
      text += name + " k=" + std::to_string(r.k) + "  x2k/x2k-1=" + r.even_over_odd.str() + " (" +
              decimal(r.even_over_odd.convert_to<double>()) + ", limit " + r.limits.even_over_odd.str() + ", err " +
              decimal(r.even_error) + ")  x2k+1/x2k=" + r.odd_over_even.str() + " (" +
              decimal(r.odd_over_even.convert_to<double>()) + ", limit " + r.limits.odd_over_even.str() + ", err " +
              decimal(r.odd_error) + ")  " + (within ? "pass" : "outside 1e-3") + "\n";
      nlohmann::ordered_json j;
      j["sequence"] = name;
      j["k"] = r.k;
      j["even_ratio"] = r.even_over_odd.str();
      j["even_limit"] = r.limits.even_over_odd.str();
      j["even_error"] = r.even_error;
      j["odd_ratio"] = r.odd_over_even.str();
      j["odd_limit"] = r.limits.odd_over_even.str();
      j["odd_error"] = r.odd_error;
      j["within_1e-3"] = within;
      j["two_step_even"] = two_even.empty() ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(two_even);
      j["two_step_odd"] = two_odd;
      j["envelope_even"] = env_even;
      j["envelope_odd"] = env_odd;
      arr.push_back(std::move(j));
    }
  }
  emit(g, g.format == "json" ? arr.dump(2) + "\n" : g.format == "csv" ? csv : text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parity-constrained four-peg Tower of Hanoi: counts, solutions, state graphs, checks"};
  app.require_subcommand(1);
  Global g;
  app.add_option("--format", g.format, "Output format: text, csv, json or dot (per command)");
  app.add_option("--out", g.out, "Write output to this file instead of stdout");
  app.add_option("--oracle-cap", g.oracle_cap, "Largest n for breadth-first oracle checks")->check(CLI::Range(0, 20));

  int seq_max = 14;
  auto* seq_cmd = app.add_subcommand("seq", "Optimal move counts h3, h4, a, b, c, d");
  seq_cmd->add_option("--max", seq_max, "Largest n")->capture_default_str();

  std::string task;
  int solve_n = 0;
  std::string emit_kind = "moves";
  auto* solve_cmd = app.add_subcommand("solve", "Optimal move sequence for one task");
  solve_cmd->add_option("--task", task, "a, b, c or d")->required();
  solve_cmd->add_option("--n", solve_n, "Disc count")->required();
  solve_cmd->add_option("--emit", emit_kind, "moves or states")->capture_default_str();

  int graph_n = 0;
  int pegs = 0;
  std::string export_kind;
  bool stats = false;
  auto* graph_cmd = app.add_subcommand("graph", "State graph exports and metrics");
  graph_cmd->add_option("--n", graph_n, "Disc count")->required();
  graph_cmd->add_option("--classical", pegs, "Build the classical graph with 3 or 4 pegs instead");
  graph_cmd->add_option("--export", export_kind, "dot, edges or json");
  graph_cmd->add_flag("--stats", stats, "Print the metrics block");

  std::string suite = "all";
  int verify_max = 10;
  auto* verify_cmd = app.add_subcommand("verify", "Run invariant suites");
  verify_cmd->add_option("--suite", suite, "sequences, solver, graph, analysis or all")->capture_default_str();
  verify_cmd->add_option("--max", verify_max, "Largest n used by the suites")->capture_default_str();

  int k_max = 30;
  int table_n = -1;
  bool log10 = false;
  auto* ratios_cmd = app.add_subcommand("ratios", "Subsequence ratios, two-step ratios, growth envelope");
  ratios_cmd->add_option("--k", k_max, "Largest k")->capture_default_str();
  ratios_cmd->add_option("--table", table_n, "Emit the comparison table up to this n instead");
  ratios_cmd->add_flag("--log10", log10, "log10 columns in the comparison table");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (seq_cmd->parsed()) return cmd_seq(g, seq_max);
    if (solve_cmd->parsed()) return cmd_solve(g, task, solve_n, emit_kind);
    if (graph_cmd->parsed()) return cmd_graph(g, graph_n, pegs, export_kind, stats);
    if (verify_cmd->parsed()) return cmd_verify(g, suite, verify_max);
    if (ratios_cmd->parsed()) return cmd_ratios(g, k_max, table_n, log10);
  } catch (const ConsistencyError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const OverflowError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitResource;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConsistency;
  }
  return 0;
}
