#include "phanoi/verify.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "phanoi/analysis.hpp"
#include "phanoi/errors.hpp"
#include "phanoi/reference_values.hpp"
#include "phanoi/sequences.hpp"
#include "phanoi/stategraph.hpp"

namespace phanoi::verify {

namespace seq = phanoi::sequences;

namespace {

class Collector {
 public:
  Collector(Report& r, std::string suite) : report_(r), suite_(std::move(suite)) {}

  void check(std::string name, bool passed, std::string detail = "") {
    report_.rows.push_back({suite_, std::move(name), RowKind::kCheck, passed, std::move(detail)});
  }
  void finding(std::string name, bool holds, std::string detail) {
    report_.rows.push_back({suite_, std::move(name), RowKind::kFinding, holds, std::move(detail)});
  }

 private:
  Report& report_;
  std::string suite_;
};

std::string range(int lo, int hi) { return "n=" + std::to_string(lo) + ".." + std::to_string(hi); }

void sequences_suite(Report& report, const Options& opt) {
  Collector c(report, "sequences");
  const int table_max = 14;
  const auto t = seq::coupled_counts(table_max);
  std::string mismatch;
  const seq::Sequence order[] = {seq::Sequence::kH3, seq::Sequence::kH4, seq::Sequence::kA,
                                 seq::Sequence::kB,  seq::Sequence::kC,  seq::Sequence::kD};
  for (std::size_t i = 0; i < 6 && mismatch.empty(); ++i) {
    for (int n = 0; n <= table_max; ++n) {
      if (t.at(n).get(order[i]) != reference::kCounts[i][static_cast<std::size_t>(n)]) {
        mismatch = std::string(seq::name(order[i])) + "_" + std::to_string(n);
        break;
      }
    }
  }
  c.check("count_table_reproduction", mismatch.empty(), mismatch.empty() ? range(0, table_max) : "first mismatch " + mismatch);

  const int route_max = std::min(std::max(opt.n_max, 200), seq::kMaxN);
  const auto ref = seq::coupled_counts(route_max);
  const auto ho = seq::first_discrepancy(ref, seq::higher_order_counts(route_max));
  c.check("higher_order_matches_coupled", !ho, ho ? ho->describe() : range(0, route_max));
  const auto cf = seq::first_closed_form_discrepancy(route_max, seq::ClosedFormReading::kGrouped);
  c.check("closed_form_matches_coupled", !cf, cf ? cf->describe() : range(0, route_max));

  bool h4_frame_stewart = true;
  for (int n = 0; n <= route_max && h4_frame_stewart; ++n) h4_frame_stewart = ref.at(n).h4 <= ref.at(n).h3;
  c.check("h4_at_most_h3", h4_frame_stewart);

  const auto seed = seq::first_discrepancy(seq::coupled_counts(20), seq::higher_order_counts(20, seq::SeedSet::kAsPrinted));
  c.finding("higher_order_printed_seeds", !seed, seed ? seed->describe() : "consistent");
  const auto printed = seq::first_closed_form_discrepancy(route_max, seq::ClosedFormReading::kAsPrinted);
  c.finding("closed_form_printed_exponent", !printed, printed ? printed->describe() : "consistent");
}

void solver_suite(Report& report, const Options& opt) {
  Collector c(report, "solver");
  const int replay_max = std::max(opt.n_max, 0);
  for (Task task : kAllTasks) {
    const std::string t(1, task_char(task));
    std::string failure;
    for (int n = 0; n <= replay_max && failure.empty(); ++n) {
      const auto rep = solver::verify_sequence(solver::solve(task, n), -1);
      if (!rep.ok) failure = "n=" + std::to_string(n) + ": " + rep.detail;
    }
    c.check("replay_" + t, failure.empty(), failure.empty() ? range(0, replay_max) : failure);
  }

  std::string mid_failure;
  for (int n = 1; n <= replay_max && mid_failure.empty(); ++n) {
    const auto moves = solver::solve(Task::kA, n).moves;
    const auto half = static_cast<std::size_t>(seq::coupled_counts(n - 1).at(n - 1).b);
    State s(n);
    for (std::size_t i = 0; i < half; ++i) s = apply(s, moves[i]);
    State want = task_target(Task::kB, n);
    want.set_peg(n, Peg::kN1);
    if (s != want) mid_failure = "n=" + std::to_string(n) + " reached " + s.word();
  }
  c.check("full_transfer_midpoint", mid_failure.empty(), mid_failure);

  const int oracle_max = std::min(replay_max, opt.oracle_cap);
  std::string oracle_failure;
  std::string multi;
  for (Task task : kAllTasks) {
    for (int n = 0; n <= oracle_max; ++n) {
      const auto r = solver::bfs_distance(n, State(n), task_target(task, n), opt.oracle_cap);
      const auto want = seq::coupled_counts(n).at(n).get(seq::kParitySequences[static_cast<std::size_t>(task)]);
      if (oracle_failure.empty() && (!r.reachable || want != r.distance)) {
        oracle_failure = std::string(1, task_char(task)) + "_" + std::to_string(n);
      }
      if (r.shortest_path_count != 1) {
        multi += (multi.empty() ? "" : " ") + std::string(1, task_char(task)) + "_" + std::to_string(n) + ":" +
                 std::to_string(r.shortest_path_count);
      }
    }
  }
  c.check("bfs_distance_matches_recurrence", oracle_failure.empty(),
          oracle_failure.empty() ? range(0, oracle_max) : "first mismatch " + oracle_failure);
  c.finding("shortest_paths_unique", multi.empty(), multi.empty() ? "all unique" : "multiple shortest paths " + multi);
}

void graph_suite(Report& report, const Options& opt) {
  using namespace phanoi::graph;
  Collector c(report, "graph");
  const int m = std::max(opt.n_max, 0);
  const int edge_max = std::min(m, 10);

  std::string edge_failure;
  for (int n = 0; n <= edge_max && edge_failure.empty(); ++n) {
    const auto want = reference::kEdgesParity[static_cast<std::size_t>(n)];
    const auto built = StateGraph::parity(n).edge_count();
    if (built != want || edge_count_recurrence(n) != want || edge_count_closed(n) != want) {
      edge_failure = "n=" + std::to_string(n);
    }
  }
  c.check("parity_edge_counts", edge_failure.empty(), edge_failure.empty() ? range(0, edge_max) : edge_failure);

  const int classical_max = std::min(m, 7);
  std::string classical_failure;
  for (int n = 0; n <= classical_max && classical_failure.empty(); ++n) {
    const auto i = static_cast<std::size_t>(n);
    const auto p = reference::kEdgesParity[i];
    const auto h3 = StateGraph::classical(3, n).edge_count();
    const auto h4 = StateGraph::classical(4, n).edge_count();
    if (h3 != reference::kEdgesH3[i] || h4 != reference::kEdgesH4[i] || h3 > p || p > h4) {
      classical_failure = "n=" + std::to_string(n);
    }
  }
  c.check("classical_edge_counts", classical_failure.empty(), classical_failure.empty() ? range(0, classical_max) : classical_failure);

  std::string degree_failure;
  std::string p2_detail;
  for (int n = 1; n <= edge_max && degree_failure.empty(); ++n) {
    const auto g = StateGraph::parity(n);
    const auto d = degree_profile(g);
    const int want_max = n == 1 ? 2 : n == 2 ? 4 : 5;
    const bool perfect_deg2 = g.degree(0) == 2 && g.degree(static_cast<Vertex>(g.vertex_count() - 1)) == 2;
    if (d.min != 2 || d.max != want_max || !perfect_deg2 || average_degree(g) != average_degree_formula(n)) {
      degree_failure = "n=" + std::to_string(n);
    }
    if (n == 2) p2_detail = d.histogram.size() == 1 ? "regular" : "degrees 2..4 present";
  }
  c.check("degrees", degree_failure.empty(), degree_failure.empty() ? range(1, edge_max) : degree_failure);
  if (m >= 2) c.finding("p2_four_regular", p2_detail == "regular", p2_detail);

  std::string conn_failure;
  for (int n = 1; n <= std::min(m, 9) && conn_failure.empty(); ++n) {
    const auto r = connectivity(StateGraph::parity(n));
    if (r.kappa != 2 || r.lambda != 2) conn_failure = "n=" + std::to_string(n);
  }
  c.check("connectivity_kappa_lambda_2", conn_failure.empty(), conn_failure);

  std::string ham_failure;
  for (int n = 1; n <= std::min(m, 9) && ham_failure.empty(); ++n) {
    const auto g = StateGraph::parity(n);
    const auto p = hamiltonian_path_perfect(n);
    const auto s = hamiltonian_path_separated(n, Peg::kN1);
    const bool ok = validate(g, p).ok && validate(g, s).ok && validate(g, hamiltonian_cycle(n)).ok &&
                    p.order.back() == pow3(n) - 1 && s.order.back() == (pow3(n) - 1) / 2 &&
                    s.order.size() - 1 == pow3(n) - 1;
    if (!ok) ham_failure = "n=" + std::to_string(n);
  }
  c.check("hamiltonian_certificates", ham_failure.empty(), ham_failure);

  std::string color_failure;
  for (int n = 1; n <= std::min(m, 8) && color_failure.empty(); ++n) {
    const auto g = StateGraph::parity(n);
    const auto col = vertex_coloring(g);
    const auto cl = clique_scan(g);
    if (!is_proper(g, col.colors) || col.color_count != 3 || cl.omega != 3 || cl.has_k4 ||
        !cl.triangles_move_one_disc || !cl.triangle_discs_small) {
      color_failure = "n=" + std::to_string(n);
    }
  }
  for (int n = 2; n <= edge_max && color_failure.empty(); ++n) {
    if (!peg_pair_classes(StateGraph::parity(n)).proper) color_failure = "edge classes n=" + std::to_string(n);
  }
  if (m >= 2 && color_failure.empty() && exact_chromatic_index(StateGraph::parity(2)) != 4) color_failure = "chi'(P2)";
  c.check("cliques_and_colorings", color_failure.empty(), color_failure);

  try {
    c.check("k33_subdivision", nonplanarity_witness().ok());
  } catch (const WitnessFailed& e) {
    c.check("k33_subdivision", false, e.what());
  }

  std::string sub_failure;
  std::string literal;
  for (int n = 1; n <= std::min(m, 8) && sub_failure.empty(); ++n) {
    const auto g = StateGraph::parity(n);
    const auto r = sub_hanoi_embedding(g);
    const auto lockout = removal_components(g, RemovalMode::kParityPegLockout);
    if (!r.isomorphic || r.shared.size() != 1 || (n <= 3 ? lockout != 1 : lockout < 2)) {
      sub_failure = "n=" + std::to_string(n);
    }
    literal += (literal.empty() ? "" : " ") + std::to_string(removal_components(g, RemovalMode::kEmbeddedSet));
  }
  c.check("sub_hanoi_and_removal", sub_failure.empty(), sub_failure);
  if (m >= 4) {
    bool literal_holds = true;
    std::istringstream in(literal);
    int k = 0;
    for (int n = 1; in >> k; ++n) {
      if (n >= 4 && k < 2) literal_holds = false;
    }
    c.finding("removal_of_embedded_set_disconnects", literal_holds, "components n=1..: " + literal);
  }

  std::string sym_failure;
  for (int n = 2; n <= std::min(m, 6) && sym_failure.empty(); ++n) {
    const auto r = automorphism_check(StateGraph::parity(n));
    if (!r.neutral_swap_is_automorphism || !r.parity_swap_witness || r.preserving_peg_permutations != 2) {
      sym_failure = "n=" + std::to_string(n);
    }
  }
  for (int n = 1; n <= std::min(m, 7) && sym_failure.empty(); ++n) {
    if (!embeds_in_classical(StateGraph::parity(n), StateGraph::classical(4, n))) sym_failure = "embed n=" + std::to_string(n);
  }
  c.check("symmetry_and_inclusion", sym_failure.empty(), sym_failure);

  // Diameters and the bounds around them.
  const int diam_max = std::min(m, 8);
  std::string lower_fail;
  std::string four_n_fail;
  std::string upper_fail;
  std::string explicit_fail;
  std::string values;
  for (int n = 1; n <= diam_max; ++n) {
    const auto dp = diameter_exact(StateGraph::parity(n));
    values += (values.empty() ? "" : " ") + std::to_string(dp);
    if (4 * n - 7 > static_cast<int>(dp)) four_n_fail += " n=" + std::to_string(n);
    if (static_cast<std::uint64_t>(dp) > (1ULL << ((n + 1) / 2)) - 1) explicit_fail += " n=" + std::to_string(n);
    if (n <= 7) {
      const auto d4 = diameter_exact(StateGraph::classical(4, n));
      const auto d3 = diameter_exact(StateGraph::classical(3, (n + 1) / 2));
      if (d4 > dp) lower_fail += " n=" + std::to_string(n);
      if (dp > d3) upper_fail += " n=" + std::to_string(n) + "(" + std::to_string(dp) + ">" + std::to_string(d3) + ")";
    }
  }
  if (diam_max >= 1) {
    c.check("diameter_at_least_four_peg", lower_fail.empty(), "diam " + values + lower_fail);
    c.finding("diameter_at_least_4n_minus_7", four_n_fail.empty(), four_n_fail.empty() ? "holds" : "fails at" + four_n_fail);
    c.finding("diameter_at_most_three_peg_half", upper_fail.empty(), upper_fail.empty() ? "holds" : "fails at" + upper_fail);
    c.finding("diameter_at_most_2_pow_half_minus_1", explicit_fail.empty(),
              explicit_fail.empty() ? "holds" : "fails at" + explicit_fail);
  }
}

void analysis_suite(Report& report, const Options&) {
  namespace an = phanoi::analysis;
  Collector c(report, "analysis");
  std::string ratio_failure;
  std::string product_failure;
  std::string two_step_failure;
  std::string envelope_failure;
  for (seq::Sequence s : seq::kParitySequences) {
    const std::string name(seq::name(s));
    const auto r = an::subsequence_ratios(s, 60);
    if (r[29].even_error >= 1e-3 || r[29].odd_error >= 1e-3 || r[59].even_error >= 1e-6 || r[59].odd_error >= 1e-6) {
      ratio_failure += " " + name;
    }
    const auto lim = an::printed_limits(s);
    if (lim.even_over_odd * lim.odd_over_even != 2) product_failure += " " + name;
    const auto two = an::two_step_ratios(s, 60).back().value;
    if (std::abs((two - 2).convert_to<double>()) >= 1e-3) two_step_failure += " " + name;
    const auto env = an::growth_envelope(s, 200);
    if (!env.bounded(0.1, 10) || an::growth_envelope(s, 60).even_last_step >= 1e-6) envelope_failure += " " + name;
  }
  c.check("subsequence_ratio_limits", ratio_failure.empty(), ratio_failure);
  c.check("limit_products_equal_2", product_failure.empty(), product_failure);
  c.check("two_step_ratio_near_2", two_step_failure.empty(), two_step_failure);
  c.check("sqrt2_envelope", envelope_failure.empty(), envelope_failure);
  c.check("h3_outgrows_envelope", !an::growth_envelope(seq::Sequence::kH3, 200).bounded(0.1, 10));
  const auto b = an::comparative_bounds(200);
  c.check("comparative_bounds", b.ok(),
          b.ok() ? "n=0..200"
                 : "sandwich failure " + std::to_string(b.first_sandwich_failure) + ", max failure " +
                       std::to_string(b.first_max_failure));
  const auto f = an::min_bcd_above_h4(7, 200);
  std::string detail = "n=7..200";
  for (int n : f.counterexamples) detail += " counterexample " + std::to_string(n);
  const auto small = an::min_bcd_above_h4(0, 6);
  if (!small.holds()) {
    detail += "; fails below 7 at";
    for (int n : small.counterexamples) detail += " " + std::to_string(n);
  }
  c.finding("min_bcd_at_least_h4", f.holds(), detail);
}

}  // namespace

Suite parse_suite(std::string_view s) {
  if (s == "sequences") return Suite::kSequences;
  if (s == "solver") return Suite::kSolver;
  if (s == "graph") return Suite::kGraph;
  if (s == "analysis") return Suite::kAnalysis;
  if (s == "all") return Suite::kAll;
  throw std::invalid_argument("unknown suite '" + std::string(s) + "'");
}

std::string_view name(Suite s) {
  switch (s) {
    case Suite::kSequences: return "sequences";
    case Suite::kSolver: return "solver";
    case Suite::kGraph: return "graph";
    case Suite::kAnalysis: return "analysis";
    case Suite::kAll: return "all";
  }
  return "?";
}

bool Report::ok() const { return first_failure() == nullptr; }

const Row* Report::first_failure() const {
  for (const auto& r : rows) {
    if (r.kind == RowKind::kCheck && !r.passed) return &r;
  }
  return nullptr;
}

Report run(Suite suite, const Options& opt) {
  Report r;
  const bool all = suite == Suite::kAll;
  if (all || suite == Suite::kSequences) sequences_suite(r, opt);
  if (all || suite == Suite::kSolver) solver_suite(r, opt);
  if (all || suite == Suite::kGraph) graph_suite(r, opt);
  if (all || suite == Suite::kAnalysis) analysis_suite(r, opt);
  return r;
}

std::string to_text(const Report& r) {
  std::string out;
  for (const auto& row : r.rows) {
    const char* tag = row.kind == RowKind::kCheck ? (row.passed ? "PASS   " : "FAIL   ") : (row.passed ? "HOLDS  " : "REFUTED");
    out += std::string(tag) + " " + row.suite + "/" + row.name;
    if (!row.detail.empty()) out += "  " + row.detail;
    out += "\n";
  }
  const Row* f = r.first_failure();
  out += f ? "result: FAIL (first failure " + f->suite + "/" + f->name + ")\n" : "result: PASS\n";
  return out;
}

std::string to_json(const Report& r) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"suite", row.suite},
                    {"name", row.name},
                    {"kind", row.kind == RowKind::kCheck ? "check" : "finding"},
                    {"passed", row.passed},
                    {"detail", row.detail}});
  }
  nlohmann::ordered_json j;
  j["ok"] = r.ok();
  j["rows"] = std::move(rows);
  if (const Row* f = r.first_failure()) j["first_failure"] = f->suite + "/" + f->name;
  return j.dump(2) + "\n";
}

}  // namespace phanoi::verify
