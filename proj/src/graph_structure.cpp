#include <algorithm>
#include <array>
#include <numeric>

#include <json.hpp>

#include "phanoi/errors.hpp"
#include "phanoi/stategraph.hpp"

namespace phanoi::graph {

namespace {

using Order = std::vector<std::uint64_t>;

Order shifted(const Order& part, std::uint64_t offset, bool reverse) {
  Order out(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) out[i] = offset + part[reverse ? part.size() - 1 - i : i];
  return out;
}

Order join(std::initializer_list<Order> parts) {
  Order out;
  for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
  return out;
}

// Digit 0 <-> 2 on every disc: swaps the neutral pegs.
Order mirrored(const Order& part, int n) {
  Order out(part.size());
  for (std::size_t i = 0; i < part.size(); ++i) out[i] = pow3(n) - 1 - part[i];
  return out;
}

// 0^n ~> 3^n through copy 0, copy p(n), copy 3.
Order perfect_path(int n) {
  if (n == 0) return {0};
  const Order inner = perfect_path(n - 1);
  const std::uint64_t b = pow3(n - 1);
  return join({shifted(inner, 0, false), shifted(inner, b, true), shifted(inner, 2 * b, false)});
}

// 0^n ~> separated state through copy 0, copy 3, copy p(n).
Order separated_path(int n) {
  if (n == 0) return {0};
  const Order inner = separated_path(n - 1);
  const std::uint64_t b = pow3(n - 1);
  return join({shifted(inner, 0, false), shifted(inner, 2 * b, true), shifted(inner, b, false)});
}

void self_check(const HamiltonianCertificate& c) {
  const std::uint64_t count = pow3(c.n);
  if (c.order.size() != count) throw CertificateInvalid("certificate does not cover all vertices");
  std::vector<bool> seen(count, false);
  for (std::uint64_t v : c.order) {
    if (v >= count || seen[v]) throw CertificateInvalid("certificate repeats or leaves the vertex set");
    seen[v] = true;
  }
  auto step_ok = [n = c.n](std::uint64_t a, std::uint64_t b) {
    bool found = false;
    for_each_move_index(n, a, [&](std::uint64_t w, int, int, int) { found = found || w == b; });
    return found;
  };
  for (std::size_t i = 1; i < c.order.size(); ++i) {
    if (!step_ok(c.order[i - 1], c.order[i])) throw CertificateInvalid("certificate step " + std::to_string(i) + " is not a move");
  }
  if (c.kind == PathKind::kCycle && c.order.size() > 2 && !step_ok(c.order.back(), c.order.front())) {
    throw CertificateInvalid("certificate cycle does not close");
  }
}

void require_positive(int n) {
  if (n < 1) throw std::invalid_argument("Hamiltonian certificates need n >= 1");
  if (n > kMaxIndexedDiscs) throw CapExceeded("certificate too large");
}

}  // namespace

HamiltonianCertificate hamiltonian_path_perfect(int n) {
  require_positive(n);
  HamiltonianCertificate c{PathKind::kPath, n, perfect_path(n)};
  self_check(c);
  return c;
}

HamiltonianCertificate hamiltonian_path_separated(int n, Peg source) {
  require_positive(n);
  if (source != Peg::kN1 && source != Peg::kN2) throw std::invalid_argument("source must be a neutral peg");
  Order order = separated_path(n);
  if (source == Peg::kN2) order = mirrored(order, n);
  HamiltonianCertificate c{PathKind::kPath, n, std::move(order)};
  self_check(c);
  return c;
}

HamiltonianCertificate hamiltonian_cycle(int n) {
  require_positive(n);
  const std::uint64_t b = pow3(n - 1);
  const Order from_n1 = separated_path(n - 1);
  const Order from_n2 = mirrored(from_n1, n - 1);
  const Order perfect = perfect_path(n - 1);
  HamiltonianCertificate c{PathKind::kCycle, n,
                           join({shifted(from_n2, 0, true), shifted(perfect, b, true), shifted(from_n1, 2 * b, false)})};
  self_check(c);
  return c;
}

CertificateCheck validate(const StateGraph& g, const HamiltonianCertificate& c) {
  if (g.flavor() != Flavor::kParity || g.discs() != c.n) return {false, "graph does not match certificate"};
  if (c.order.size() != g.vertex_count()) {
    return {false, "length " + std::to_string(c.order.size()) + " != " + std::to_string(g.vertex_count())};
  }
  std::vector<bool> seen(g.vertex_count(), false);
  for (std::uint64_t v : c.order) {
    if (v >= g.vertex_count() || seen[v]) return {false, "vertex " + std::to_string(v) + " repeated or out of range"};
    seen[v] = true;
  }
  for (std::size_t i = 1; i < c.order.size(); ++i) {
    if (!g.adjacent(static_cast<Vertex>(c.order[i - 1]), static_cast<Vertex>(c.order[i]))) {
      return {false, "step " + std::to_string(i) + " is not an edge"};
    }
  }
  if (c.kind == PathKind::kCycle && c.order.size() > 1 &&
      !g.adjacent(static_cast<Vertex>(c.order.back()), static_cast<Vertex>(c.order.front()))) {
    return {false, "cycle does not close"};
  }
  return {true, ""};
}

// ---- sub-Hanoi ----

LockedClass largest_lock(int n) { return n % 2 == 0 ? LockedClass::kOddLocked : LockedClass::kEvenLocked; }

namespace {

bool disc_locked(int disc, LockedClass locked) {
  return (disc % 2 == 1) == (locked == LockedClass::kOddLocked);
}

std::vector<bool> locked_mask(const StateGraph& g, LockedClass locked) {
  std::vector<bool> in(g.vertex_count(), false);
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    bool ok = true;
    for (int d = 1; d <= g.discs() && ok; ++d) {
      if (disc_locked(d, locked)) ok = g.peg_of(v, d) == to_int(parity_peg(d));
    }
    in[v] = ok;
  }
  return in;
}

void require_parity(const StateGraph& g) {
  if (g.flavor() != Flavor::kParity) throw std::invalid_argument("parity graph required");
}

}  // namespace

std::vector<Vertex> locked_vertex_set(const StateGraph& g, LockedClass locked) {
  require_parity(g);
  const auto mask = locked_mask(g, locked);
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (mask[v]) out.push_back(v);
  }
  return out;
}

SubHanoiReport sub_hanoi_embedding(const StateGraph& g) {
  require_parity(g);
  const int n = g.discs();
  if (n < 1) throw std::invalid_argument("sub-Hanoi embedding needs n >= 1");
  const LockedClass lock = largest_lock(n);
  SubHanoiReport r;
  r.vertices = locked_vertex_set(g, lock);
  std::vector<int> free;
  for (int d = 1; d <= n; ++d) {
    if (!disc_locked(d, lock)) free.push_back(d);
  }
  r.free_discs = static_cast<int>(free.size());

  // Relabel: the k-th free disc becomes disc k of H3, its peg digit
  // {0, parity peg, 3} -> {0, 1, 2}.
  const StateGraph h3 = StateGraph::classical(3, r.free_discs);
  std::vector<Vertex> image(g.vertex_count(), 0);
  std::vector<bool> hit(h3.vertex_count(), false);
  bool bijective = r.vertices.size() == h3.vertex_count();
  for (Vertex v : r.vertices) {
    std::uint64_t idx = 0;
    std::uint64_t weight = 1;
    for (int d : free) {
      idx += static_cast<std::uint64_t>(peg_digit(static_cast<Peg>(g.peg_of(v, d)), d)) * weight;
      weight *= 3;
    }
    image[v] = static_cast<Vertex>(idx);
    if (hit[idx]) bijective = false;
    hit[idx] = true;
  }
  std::vector<bool> inside(g.vertex_count(), false);
  for (Vertex v : r.vertices) inside[v] = true;
  std::uint64_t induced_edges = 0;
  bool edges_map = true;
  for (Vertex u : r.vertices) {
    for (Vertex w : g.neighbors(u)) {
      if (w <= u || !inside[w]) continue;
      ++induced_edges;
      if (!h3.adjacent(image[u], image[w])) edges_map = false;
    }
  }
  r.isomorphic = bijective && edges_map && induced_edges == h3.edge_count();

  const auto other = locked_mask(
      g, lock == LockedClass::kOddLocked ? LockedClass::kEvenLocked : LockedClass::kOddLocked);
  for (Vertex v : r.vertices) {
    if (other[v]) r.shared.push_back(v);
  }
  return r;
}

std::string_view name(RemovalMode m) {
  return m == RemovalMode::kEmbeddedSet ? "embedded_set" : "parity_peg_lockout";
}

std::size_t removal_components(const StateGraph& g, RemovalMode mode) {
  require_parity(g);
  const LockedClass lock = largest_lock(g.discs());
  std::vector<bool> removed;
  if (mode == RemovalMode::kEmbeddedSet) {
    removed = locked_mask(g, lock);
  } else {
    removed.assign(g.vertex_count(), false);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      for (int d = 1; d <= g.discs(); ++d) {
        if (disc_locked(d, lock) && g.peg_of(v, d) == to_int(parity_peg(d))) removed[v] = true;
      }
    }
  }
  return component_count(g, removed);
}

bool embeds_in_classical(const StateGraph& parity, const StateGraph& four_peg) {
  require_parity(parity);
  if (four_peg.flavor() != Flavor::kClassical || four_peg.pegs() != 4 || four_peg.discs() != parity.discs()) {
    throw std::invalid_argument("expected the 4-peg classical graph on the same disc count");
  }
  for (const auto& [u, v] : parity.edges()) {
    if (!four_peg.adjacent(four_peg.vertex_of(parity.label(u)), four_peg.vertex_of(parity.label(v)))) return false;
  }
  return true;
}

// ---- symmetry ----

AutomorphismReport automorphism_check(const StateGraph& g) {
  require_parity(g);
  AutomorphismReport r;
  const int n = g.discs();
  const auto last = static_cast<Vertex>(g.vertex_count() - 1);
  const auto edges = g.edges();
  r.neutral_swap_is_automorphism = std::all_of(edges.begin(), edges.end(), [&](const Edge& e) {
    return g.adjacent(last - e.first, last - e.second);
  });

  auto feasible_word = [n](const std::string& w) {
    for (int d = 1; d <= n; ++d) {
      if (!peg_allows(d, static_cast<Peg>(w[static_cast<std::size_t>(n - d)] - '0'))) return false;
    }
    return true;
  };
  for (Vertex v = 0; v < g.vertex_count() && !r.parity_swap_witness; ++v) {
    std::string w = g.label(v);
    for (char& ch : w) ch = ch == '1' ? '2' : ch == '2' ? '1' : ch;
    if (!feasible_word(w)) r.parity_swap_witness = g.label(v) + " -> " + w;
  }

  std::array<int, 4> perm = {0, 1, 2, 3};
  std::vector<std::string> labels(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels[v] = g.label(v);
  do {
    std::vector<Vertex> image(g.vertex_count());
    bool ok = true;
    for (Vertex v = 0; v < g.vertex_count() && ok; ++v) {
      std::string w = labels[v];
      for (char& ch : w) ch = static_cast<char>('0' + perm[static_cast<std::size_t>(ch - '0')]);
      if (!feasible_word(w)) {
        ok = false;
      } else {
        image[v] = g.vertex_of(w);
      }
    }
    for (std::size_t i = 0; i < edges.size() && ok; ++i) ok = g.adjacent(image[edges[i].first], image[edges[i].second]);
    if (ok) ++r.preserving_peg_permutations;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return r;
}

// ---- K3,3 ----

NonplanarityReport nonplanarity_witness() {
  static const std::vector<std::string> kVertices = {"032", "012", "013", "002", "010", "213", "003", "033",
                                                     "030", "210", "212", "232", "233", "310", "312"};
  static const std::vector<std::pair<std::string, std::string>> kDeleted = {
      {"210", "212"}, {"013", "012"}, {"012", "032"}, {"030", "033"}};
  static const std::vector<std::string> kRed = {"032", "012", "013"};
  static const std::vector<std::string> kBlue = {"002", "010", "213"};
  static const std::vector<std::vector<std::string>> kPaths = {
      {"032", "002"},
      {"032", "030", "010"},
      {"032", "033", "233", "232", "212", "213"},
      {"012", "010"},
      {"012", "002"},
      {"012", "312", "310", "210", "213"},
      {"013", "010"},
      {"013", "213"},
      {"013", "003", "002"},
  };

  NonplanarityReport r;
  const StateGraph g = StateGraph::parity(3);
  r.states_feasible = std::all_of(kVertices.begin(), kVertices.end(), [](const std::string& w) {
    try {
      State::from_word(w);
      return true;
    } catch (const std::invalid_argument&) {
      return false;
    }
  });
  if (!r.states_feasible) {
    r.detail = "a listed state is infeasible";
    throw WitnessFailed(r.detail);
  }
  auto is_deleted = [](const std::string& a, const std::string& b) {
    return std::any_of(kDeleted.begin(), kDeleted.end(), [&](const auto& e) {
      return (e.first == a && e.second == b) || (e.first == b && e.second == a);
    });
  };
  auto listed = [](const std::string& w) { return std::find(kVertices.begin(), kVertices.end(), w) != kVertices.end(); };

  r.deleted_edges_present = std::all_of(kDeleted.begin(), kDeleted.end(), [&](const auto& e) {
    return listed(e.first) && listed(e.second) && g.adjacent(g.vertex_of(e.first), g.vertex_of(e.second));
  });

  r.paths_present = true;
  for (const auto& p : kPaths) {
    for (std::size_t i = 1; i < p.size(); ++i) {
      if (!listed(p[i - 1]) || !listed(p[i]) || is_deleted(p[i - 1], p[i]) ||
          !g.adjacent(g.vertex_of(p[i - 1]), g.vertex_of(p[i]))) {
        r.paths_present = false;
        r.detail = "missing edge " + p[i - 1] + " - " + p[i];
      }
    }
  }

  // One path per red/blue pair; interiors pairwise disjoint and free of branch vertices.
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<std::string> interior;
  for (const auto& p : kPaths) {
    pairs.emplace_back(p.front(), p.back());
    interior.insert(interior.end(), p.begin() + 1, p.end() - 1);
  }
  std::sort(pairs.begin(), pairs.end());
  std::vector<std::pair<std::string, std::string>> expected;
  for (const auto& a : kRed) {
    for (const auto& b : kBlue) expected.emplace_back(a, b);
  }
  std::sort(expected.begin(), expected.end());
  std::vector<std::string> sorted_interior = interior;
  std::sort(sorted_interior.begin(), sorted_interior.end());
  const bool interiors_distinct =
      std::adjacent_find(sorted_interior.begin(), sorted_interior.end()) == sorted_interior.end();
  const bool avoid_branches = std::none_of(interior.begin(), interior.end(), [&](const std::string& w) {
    return std::find(kRed.begin(), kRed.end(), w) != kRed.end() || std::find(kBlue.begin(), kBlue.end(), w) != kBlue.end();
  });
  r.paths_disjoint = pairs == expected && interiors_distinct && avoid_branches;
  if (!r.ok()) {
    if (r.detail.empty()) r.detail = "subdivision paths do not form K3,3";
    throw WitnessFailed(r.detail);
  }
  r.detail = "K3,3 subdivision with branch sets {032,012,013} and {002,010,213}";
  return r;
}

std::string to_json(const GraphMetrics& m) {
  nlohmann::ordered_json j;
  j["n"] = m.n;
  j["vertices"] = m.vertices;
  j["edges"] = m.edges;
  j["delta"] = m.min_degree;
  j["Delta"] = m.max_degree;
  j["avg_degree"] = static_cast<double>(m.average_degree);
  j["avg_degree_exact"] = m.average_degree.str();
  j["kappa"] = m.kappa;
  j["lambda"] = m.lambda;
  j[m.diameter_exact ? "diameter" : "diameter_lower_bound"] = m.diameter;
  j["omega"] = m.omega;
  j["chi"] = m.chi;
  j["chi_prime"] = m.chi_prime;
  return j.dump(2) + "\n";
}

}  // namespace phanoi::graph
