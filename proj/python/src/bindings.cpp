// pybind11 surface. Big integers cross as Python ints, rationals as
// (numerator, denominator) pairs; the package wraps those in Fraction.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "phanoi/analysis.hpp"
#include "phanoi/core.hpp"
#include "phanoi/errors.hpp"
#include "phanoi/sequences.hpp"
#include "phanoi/solver.hpp"
#include "phanoi/stategraph.hpp"
#include "phanoi/verify.hpp"

namespace py = pybind11;
using namespace phanoi;
namespace seq = phanoi::sequences;

namespace {

py::int_ to_py(const seq::BigInt& x) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(x.str().c_str(), nullptr, 10));
}

py::tuple to_py(const seq::Rational& q) {
  return py::make_tuple(to_py(boost::multiprecision::numerator(q)), to_py(boost::multiprecision::denominator(q)));
}

seq::Route parse_route(const std::string& s) {
  if (s == "coupled") return seq::Route::kCoupled;
  if (s == "higher-order") return seq::Route::kHigherOrder;
  if (s == "closed-form") return seq::Route::kClosedForm;
  throw std::invalid_argument("unknown route '" + s + "'");
}

py::dict counts(int max_n, const std::string& route) {
  seq::CountTable t;
  switch (parse_route(route)) {
    case seq::Route::kCoupled: t = seq::coupled_counts(max_n); break;
    case seq::Route::kHigherOrder: t = seq::higher_order_counts(max_n); break;
    case seq::Route::kClosedForm: t = seq::closed_form_counts(max_n); break;
  }
  py::dict out;
  for (auto s : {seq::Sequence::kH3, seq::Sequence::kH4, seq::Sequence::kA, seq::Sequence::kB, seq::Sequence::kC,
                 seq::Sequence::kD}) {
    py::list col;
    for (const auto& v : t.column(s)) col.append(to_py(v));
    out[py::str(std::string(seq::name(s)))] = col;
  }
  return out;
}

using MoveTuple = std::tuple<int, int, int>;

std::vector<MoveTuple> solve(const std::string& task, int n) {
  std::vector<MoveTuple> out;
  solver::for_each_move(parse_task(task), n,
                        [&](const Move& m) { out.emplace_back(m.disc, to_int(m.from), to_int(m.to)); });
  return out;
}

Peg peg_from_int(int p) {
  if (p < 0 || p > 3) throw std::invalid_argument("peg must be 0..3");
  return static_cast<Peg>(p);
}

py::dict check_moves(const std::string& task, int n, const std::optional<std::vector<MoveTuple>>& moves,
                     int oracle_cap) {
  auto s = solver::solve(parse_task(task), n);
  if (moves) {
    s.moves.clear();
    for (const auto& [d, f, t] : *moves) s.moves.push_back({d, peg_from_int(f), peg_from_int(t)});
  }
  const auto r = solver::verify_sequence(s, oracle_cap);
  py::dict out;
  out["ok"] = r.ok;
  out["kind"] = std::string(solver::name(r.kind));
  out["step"] = r.step;
  out["detail"] = r.detail;
  if (r.oracle) {
    out["distance"] = r.oracle->distance;
    out["shortest_paths"] = r.oracle->shortest_path_count;
  }
  return out;
}

py::object bfs(int n, const std::string& source, const std::string& target, int cap) {
  const auto r = solver::bfs_distance(n, State::from_word(source), State::from_word(target), cap);
  if (!r.reachable) return py::none();
  return py::make_tuple(r.distance, r.shortest_path_count);
}

graph::StateGraph make_graph(int n, int classical) {
  if (classical == 0) return graph::StateGraph::parity(n);
  return graph::StateGraph::classical(classical, n);
}

py::dict metrics(int n) {
  const auto m = graph::compute_metrics(graph::StateGraph::parity(n));
  py::dict out;
  out["n"] = m.n;
  out["vertices"] = m.vertices;
  out["edges"] = m.edges;
  out["min_degree"] = m.min_degree;
  out["max_degree"] = m.max_degree;
  out["average_degree"] = to_py(m.average_degree);
  out["kappa"] = m.kappa;
  out["lambda"] = m.lambda;
  out["diameter"] = m.diameter;
  out["diameter_exact"] = m.diameter_exact;
  out["omega"] = m.omega;
  out["chi"] = m.chi;
  out["chi_prime"] = m.chi_prime;
  return out;
}

std::vector<std::pair<std::string, std::string>> edges(int n, int classical) {
  const auto g = make_graph(n, classical);
  std::vector<std::pair<std::string, std::string>> out;
  for (const auto& [u, v] : g.edges()) out.emplace_back(g.label(u), g.label(v));
  return out;
}

py::list ratios(const std::string& sequence, int k_max) {
  py::list out;
  for (const auto& r : analysis::subsequence_ratios(seq::parse_sequence(sequence), k_max)) {
    py::dict row;
    row["k"] = r.k;
    row["even_over_odd"] = to_py(r.even_over_odd);
    row["odd_over_even"] = to_py(r.odd_over_even);
    row["limit_even_over_odd"] = to_py(r.limits.even_over_odd);
    row["limit_odd_over_even"] = to_py(r.limits.odd_over_even);
    row["even_error"] = r.even_error;
    row["odd_error"] = r.odd_error;
    out.append(row);
  }
  return out;
}

std::string run_verify(const std::string& suite, int n_max, int oracle_cap) {
  verify::Options opt;
  opt.n_max = n_max;
  opt.oracle_cap = oracle_cap;
  return verify::to_json(verify::run(verify::parse_suite(suite), opt));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  auto base = py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<IllegalMove>(m, "IllegalMove", base.ptr());
  py::register_exception<OverflowError>(m, "Overflow", base.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", base.ptr());

  m.def("counts", &counts, py::arg("max_n"), py::arg("route") = "coupled");
  m.def("solve", &solve, py::arg("task"), py::arg("n"));
  m.def("check_moves", &check_moves, py::arg("task"), py::arg("n"), py::arg("moves") = py::none(),
        py::arg("oracle_cap") = solver::kDefaultOracleCap);
  m.def("bfs", &bfs, py::arg("n"), py::arg("source"), py::arg("target"),
        py::arg("cap") = solver::kDefaultOracleCap);
  m.def("metrics", &metrics, py::arg("n"));
  m.def("edges", &edges, py::arg("n"), py::arg("classical") = 0);
  m.def("ratios", &ratios, py::arg("sequence"), py::arg("k_max"));
  m.def("run_verify", &run_verify, py::arg("suite") = "all", py::arg("n_max") = 10,
        py::arg("oracle_cap") = solver::kDefaultOracleCap);
}
