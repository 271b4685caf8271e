#include "phanoi/stategraph.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <numeric>

#include "phanoi/errors.hpp"

namespace phanoi::graph {

using sequences::BigInt;
using sequences::Rational;

namespace {

constexpr Vertex kNone = std::numeric_limits<Vertex>::max();
constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();

// 6 peg pairs in the order 01, 02, 03, 12, 13, 23.
int pair_id(int a, int b) {
  if (a > b) std::swap(a, b);
  static constexpr int kId[4][4] = {{-1, 0, 1, 2}, {0, -1, 3, 4}, {1, 3, -1, 5}, {2, 4, 5, -1}};
  return kId[a][b];
}

BigInt pow_big(int base, int e) { return boost::multiprecision::pow(BigInt(base), static_cast<unsigned>(e)); }

void check_n(int n) {
  if (n < 0) throw std::invalid_argument("disc count must be non-negative");
  if (n > sequences::kMaxN) throw OverflowError("n beyond " + std::to_string(sequences::kMaxN));
}

}  // namespace

StateGraph::StateGraph(Flavor f, int n, int pegs, int width)
    : flavor_(f), n_(n), pegs_(pegs), width_(width), weight_(static_cast<std::size_t>(n) + 1, 1) {
  const std::uint64_t radix = f == Flavor::kParity ? 3 : static_cast<std::uint64_t>(pegs);
  for (int d = 1; d <= n; ++d) weight_[static_cast<std::size_t>(d)] = d == 1 ? 1 : weight_[static_cast<std::size_t>(d) - 1] * radix;
  const std::uint64_t count = n == 0 ? 1 : weight_[static_cast<std::size_t>(n)] * radix;
  adj_.assign(count * static_cast<std::uint64_t>(width), kNone);
  degree_.assign(count, 0);
}

void StateGraph::add_neighbor(Vertex u, Vertex v) {
  adj_[static_cast<std::size_t>(u) * width_ + degree_[u]] = v;
  ++degree_[u];
  if (u < v) ++edges_;
}

StateGraph StateGraph::parity(int n, int cap) {
  if (n < 0) throw std::invalid_argument("disc count must be non-negative");
  if (n > cap) throw CapExceeded("graph cap is n <= " + std::to_string(cap) + ", requested n = " + std::to_string(n));
  StateGraph g(Flavor::kParity, n, 4, 5);
  const auto count = static_cast<Vertex>(g.vertex_count());
  for (Vertex v = 0; v < count; ++v) {
    for_each_move_index(n, v, [&](std::uint64_t w, int, int, int) { g.add_neighbor(v, static_cast<Vertex>(w)); });
  }
  return g;
}

StateGraph StateGraph::classical(int pegs, int n, int cap) {
  if (pegs != 3 && pegs != 4) throw std::invalid_argument("classical graphs are built for 3 or 4 pegs");
  if (n < 0) throw std::invalid_argument("disc count must be non-negative");
  std::uint64_t count = 1;
  for (int i = 0; i < n; ++i) {
    count *= static_cast<std::uint64_t>(pegs);
    if (count > pow3(cap)) {
      throw CapExceeded("classical graph with " + std::to_string(pegs) + " pegs and n = " + std::to_string(n) +
                        " exceeds the vertex cap 3^" + std::to_string(cap));
    }
  }
  StateGraph g(Flavor::kClassical, n, pegs, pegs * (pegs - 1) / 2);
  std::vector<int> digit(static_cast<std::size_t>(n) + 1);
  for (Vertex v = 0; v < count; ++v) {
    std::array<int, 4> top = {0, 0, 0, 0};
    std::uint64_t rest = v;
    for (int d = 1; d <= n; ++d) {
      digit[static_cast<std::size_t>(d)] = static_cast<int>(rest % static_cast<std::uint64_t>(pegs));
      rest /= static_cast<std::uint64_t>(pegs);
      auto& t = top[static_cast<std::size_t>(digit[static_cast<std::size_t>(d)])];
      if (t == 0) t = d;
    }
    for (int d = 1; d <= n; ++d) {
      const int from = digit[static_cast<std::size_t>(d)];
      if (top[static_cast<std::size_t>(from)] != d) continue;
      for (int to = 0; to < pegs; ++to) {
        const int t = top[static_cast<std::size_t>(to)];
        if (to == from || (t != 0 && t < d)) continue;
        const std::uint64_t w = g.weight_[static_cast<std::size_t>(d)];
        g.add_neighbor(v, static_cast<Vertex>(v - static_cast<std::uint64_t>(from) * w + static_cast<std::uint64_t>(to) * w));
      }
    }
  }
  return g;
}

bool StateGraph::adjacent(Vertex u, Vertex v) const {
  for (Vertex w : neighbors(u)) {
    if (w == v) return true;
  }
  return false;
}

int StateGraph::peg_of(Vertex v, int disc) const {
  const std::uint64_t radix = flavor_ == Flavor::kParity ? 3 : static_cast<std::uint64_t>(pegs_);
  const int digit = static_cast<int>((v / weight_[static_cast<std::size_t>(disc)]) % radix);
  return flavor_ == Flavor::kParity ? to_int(digit_peg(digit, disc)) : digit;
}

std::string StateGraph::label(Vertex v) const {
  std::string out;
  out.reserve(static_cast<std::size_t>(n_));
  for (int d = n_; d >= 1; --d) out += static_cast<char>('0' + peg_of(v, d));
  return out;
}

Vertex StateGraph::vertex_of(std::string_view word) const {
  if (static_cast<int>(word.size()) != n_) throw std::invalid_argument("word length differs from disc count");
  if (flavor_ == Flavor::kParity) return static_cast<Vertex>(encode(State::from_word(word)).value);
  std::uint64_t v = 0;
  for (int d = 1; d <= n_; ++d) {
    const int p = word[static_cast<std::size_t>(n_ - d)] - '0';
    if (p < 0 || p >= pegs_) throw std::invalid_argument("bad state word '" + std::string(word) + "'");
    v += static_cast<std::uint64_t>(p) * weight_[static_cast<std::size_t>(d)];
  }
  return static_cast<Vertex>(v);
}

Move StateGraph::move_between(Vertex u, Vertex v) const {
  for (int d = 1; d <= n_; ++d) {
    const int a = peg_of(u, d);
    const int b = peg_of(v, d);
    if (a != b) return {d, static_cast<Peg>(a), static_cast<Peg>(b)};
  }
  throw std::invalid_argument("vertices are equal");
}

std::vector<Edge> StateGraph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_);
  for (Vertex u = 0; u < vertex_count(); ++u) {
    std::vector<Vertex> higher;
    for (Vertex v : neighbors(u)) {
      if (v > u) higher.push_back(v);
    }
    std::sort(higher.begin(), higher.end());
    for (Vertex v : higher) out.emplace_back(u, v);
  }
  return out;
}

// ---- counts ----

BigInt edge_count_recurrence(int n) {
  check_n(n);
  BigInt e = 0;
  for (int k = 1; k <= n; ++k) e = 3 * e + (BigInt(1) << (k / 2 + 1)) + 1;
  return e;
}

BigInt edge_count_closed(int n) {
  check_n(n);
  const BigInt numerator = n % 2 == 0 ? pow_big(3, n + 3) - 20 * (BigInt(1) << (n / 2)) - 7
                                      : pow_big(3, n + 3) - 32 * (BigInt(1) << ((n - 1) / 2)) - 7;
  if (numerator % 14 != 0) {
    throw NonIntegralClosedForm("edge closed form is not divisible by 14 at n = " + std::to_string(n));
  }
  return numerator / 14;
}

std::vector<std::uint64_t> edges_by_disc(const StateGraph& g) {
  std::vector<std::uint64_t> out(static_cast<std::size_t>(g.discs()) + 1, 0);
  for (const auto& [u, v] : g.edges()) ++out[static_cast<std::size_t>(g.move_between(u, v).disc)];
  return out;
}

Rational average_degree(const StateGraph& g) {
  return Rational(BigInt(2 * g.edge_count()), BigInt(g.vertex_count()));
}

Rational average_degree_formula(int n) {
  check_n(n);
  const BigInt p3 = pow_big(3, n);
  const Rational tail = n % 2 == 0 ? Rational(20 * (BigInt(1) << (n / 2)), 7 * p3)
                                   : Rational(32 * (BigInt(1) << ((n - 1) / 2)), 7 * p3);
  return Rational(27, 7) - tail - Rational(BigInt(1), p3);
}

DegreeProfile degree_profile(const StateGraph& g) {
  DegreeProfile p;
  p.min = std::numeric_limits<int>::max();
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    const int d = g.degree(v);
    p.min = std::min(p.min, d);
    p.max = std::max(p.max, d);
    ++p.histogram[d];
  }
  return p;
}

// ---- connectivity ----

std::size_t component_count(const StateGraph& g, const std::vector<bool>& removed) {
  const std::size_t count = g.vertex_count();
  std::vector<bool> seen(count, false);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (Vertex s = 0; s < count; ++s) {
    if (seen[s] || removed[s]) continue;
    ++components;
    seen[s] = true;
    stack.push_back(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(u)) {
        if (!seen[w] && !removed[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
  }
  return components;
}

namespace {

// Connected after deleting `cut` edges?
bool connected_without(const StateGraph& g, const std::vector<Edge>& cut) {
  auto banned = [&cut](Vertex a, Vertex b) {
    const Edge e = a < b ? Edge{a, b} : Edge{b, a};
    return std::find(cut.begin(), cut.end(), e) != cut.end();
  };
  std::vector<bool> seen(g.vertex_count(), false);
  std::vector<Vertex> stack = {0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex w : g.neighbors(u)) {
      if (seen[w] || banned(u, w)) continue;
      seen[w] = true;
      ++reached;
      stack.push_back(w);
    }
  }
  return reached == g.vertex_count();
}

}  // namespace

ConnectivityReport connectivity(const StateGraph& g) {
  ConnectivityReport r;
  const std::size_t count = g.vertex_count();
  if (count == 1) {
    r.connected = true;
    return r;
  }
  // Iterative Tarjan from vertex 0.
  std::vector<std::uint32_t> disc(count, 0), low(count, 0);
  std::vector<Vertex> parent(count, kNone);
  std::vector<std::uint8_t> next(count, 0);
  std::vector<bool> cut_vertex(count, false);
  std::vector<Vertex> stack = {0};
  std::uint32_t timer = 1;
  int root_children = 0;
  disc[0] = low[0] = timer++;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    const auto nbrs = g.neighbors(u);
    if (next[u] < nbrs.size()) {
      const Vertex w = nbrs[next[u]++];
      if (w == parent[u]) continue;
      if (disc[w] == 0) {
        parent[w] = u;
        disc[w] = low[w] = timer++;
        if (u == 0) ++root_children;
        stack.push_back(w);
      } else {
        low[u] = std::min(low[u], disc[w]);
      }
      continue;
    }
    stack.pop_back();
    const Vertex p = parent[u];
    if (p == kNone) continue;
    low[p] = std::min(low[p], low[u]);
    if (low[u] > disc[p]) r.bridges.push_back(p < u ? Edge{p, u} : Edge{u, p});
    if (p != 0 && low[u] >= disc[p]) cut_vertex[p] = true;
  }
  if (root_children > 1) cut_vertex[0] = true;
  r.connected = std::all_of(disc.begin(), disc.end(), [](std::uint32_t t) { return t != 0; });
  for (Vertex v = 0; v < count; ++v) {
    if (cut_vertex[v]) r.articulation_points.push_back(v);
  }
  std::sort(r.bridges.begin(), r.bridges.end());
  if (!r.connected) return r;

  // Cuts around the perfect state on the last peg.
  const auto perfect = static_cast<Vertex>(count - 1);
  for (Vertex w : g.neighbors(perfect)) {
    r.vertex_cut.push_back(w);
    r.edge_cut.push_back(w < perfect ? Edge{w, perfect} : Edge{perfect, w});
  }
  std::sort(r.vertex_cut.begin(), r.vertex_cut.end());
  std::sort(r.edge_cut.begin(), r.edge_cut.end());

  const bool complete = g.degree(perfect) == static_cast<int>(count - 1) &&
                        std::all_of(r.vertex_cut.begin(), r.vertex_cut.end(),
                                    [&](Vertex v) { return g.degree(v) == static_cast<int>(count - 1); });
  const int kappa_low = r.articulation_points.empty() ? std::min<int>(2, static_cast<int>(count) - 1) : 1;
  int kappa_high = static_cast<int>(count) - 1;
  if (!complete) {
    std::vector<bool> removed(count, false);
    for (Vertex v : r.vertex_cut) removed[v] = true;
    if (component_count(g, removed) > 1) kappa_high = static_cast<int>(r.vertex_cut.size());
  }
  r.kappa = kappa_low == kappa_high ? kappa_low : -1;

  const int lambda_low = r.bridges.empty() ? 2 : 1;
  const int lambda_high = connected_without(g, r.edge_cut) ? -1 : static_cast<int>(r.edge_cut.size());
  r.lambda = lambda_low == lambda_high ? lambda_low : -1;
  return r;
}

// ---- distances ----

namespace {

std::uint32_t bfs_into(const StateGraph& g, Vertex source, std::vector<std::uint32_t>& dist,
                       std::vector<Vertex>& queue) {
  std::fill(dist.begin(), dist.end(), kUnreached);
  queue.clear();
  dist[source] = 0;
  queue.push_back(source);
  std::uint32_t ecc = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    ecc = dist[u];
    for (Vertex w : g.neighbors(u)) {
      if (dist[w] == kUnreached) {
        dist[w] = dist[u] + 1;
        queue.push_back(w);
      }
    }
  }
  if (queue.size() != g.vertex_count()) throw std::domain_error("graph is disconnected");
  return ecc;
}

}  // namespace

std::vector<std::uint32_t> bfs_distances(const StateGraph& g, Vertex source) {
  std::vector<std::uint32_t> dist(g.vertex_count());
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  bfs_into(g, source, dist, queue);
  return dist;
}

std::uint32_t diameter_exact(const StateGraph& g) {
  if (g.vertex_count() > kExactDiameterVertices) {
    throw CapExceeded("exact diameter is limited to " + std::to_string(kExactDiameterVertices) + " vertices");
  }
  std::vector<std::uint32_t> dist(g.vertex_count());
  std::vector<Vertex> queue;
  queue.reserve(g.vertex_count());
  std::uint32_t best = 0;
  for (Vertex s = 0; s < g.vertex_count(); ++s) best = std::max(best, bfs_into(g, s, dist, queue));
  return best;
}

std::uint32_t diameter_lower_bound(const StateGraph& g) {
  std::vector<Vertex> sources = {0, static_cast<Vertex>(g.vertex_count() - 1)};
  if (g.flavor() == Flavor::kParity) sources.push_back(static_cast<Vertex>((g.vertex_count() - 1) / 2));
  std::vector<std::uint32_t> dist(g.vertex_count());
  std::vector<Vertex> queue;
  std::uint32_t best = 0;
  for (Vertex s : sources) best = std::max(best, bfs_into(g, s, dist, queue));
  return best;
}

// ---- cliques ----

CliqueReport clique_scan(const StateGraph& g) {
  CliqueReport r;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (v <= u) continue;
      for (Vertex w : g.neighbors(v)) {
        if (w <= v || !g.adjacent(u, w)) continue;
        ++r.triangles;
        if (!r.triangle) r.triangle = std::vector<Vertex>{u, v, w};
        const int d1 = g.move_between(u, v).disc;
        const int d2 = g.move_between(v, w).disc;
        const int d3 = g.move_between(u, w).disc;
        if (d1 != d2 || d2 != d3) r.triangles_move_one_disc = false;
        if (d1 > 2 || d2 > 2 || d3 > 2) r.triangle_discs_small = false;
        for (Vertex x : g.neighbors(w)) {
          if (x > w && g.adjacent(u, x) && g.adjacent(v, x)) r.has_k4 = true;
        }
      }
    }
  }
  if (r.has_k4) {
    r.omega = 4;  // at least; never reached on the parity graphs
  } else if (r.triangles > 0) {
    r.omega = 3;
  } else {
    r.omega = g.edge_count() > 0 ? 2 : 1;
  }
  return r;
}

// ---- colorings ----

bool is_proper(const StateGraph& g, const std::vector<int>& colors) {
  if (colors.size() != g.vertex_count()) return false;
  for (Vertex u = 0; u < g.vertex_count(); ++u) {
    for (Vertex v : g.neighbors(u)) {
      if (colors[u] == colors[v]) return false;
    }
  }
  return true;
}

namespace {

int count_colors(const std::vector<int>& colors) {
  return colors.empty() ? 0 : *std::max_element(colors.begin(), colors.end()) + 1;
}

std::vector<int> dsatur(const StateGraph& g) {
  const std::size_t count = g.vertex_count();
  std::vector<int> color(count, -1);
  std::vector<std::uint32_t> saturation_mask(count, 0);
  for (std::size_t step = 0; step < count; ++step) {
    Vertex best = kNone;
    int best_sat = -1;
    for (Vertex v = 0; v < count; ++v) {
      if (color[v] >= 0) continue;
      const int sat = __builtin_popcount(saturation_mask[v]);
      if (sat > best_sat || (sat == best_sat && g.degree(v) > g.degree(best))) {
        best = v;
        best_sat = sat;
      }
    }
    int c = 0;
    while (saturation_mask[best] >> c & 1U) ++c;
    color[best] = c;
    for (Vertex w : g.neighbors(best)) saturation_mask[w] |= 1U << c;
  }
  return color;
}

bool color_backtrack(const StateGraph& g, std::vector<int>& color, Vertex v, int k) {
  if (v == g.vertex_count()) return true;
  for (int c = 0; c < k; ++c) {
    bool ok = true;
    for (Vertex w : g.neighbors(v)) {
      if (w < v && color[w] == c) ok = false;
    }
    if (!ok) continue;
    color[v] = c;
    if (color_backtrack(g, color, v + 1, k)) return true;
  }
  color[v] = -1;
  return false;
}

}  // namespace

VertexColoring vertex_coloring(const StateGraph& g) {
  VertexColoring out;
  const int radix = g.flavor() == Flavor::kParity ? 3 : g.pegs();
  out.colors.resize(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    int sum = 0;
    for (std::uint64_t rest = v; rest > 0; rest /= static_cast<std::uint64_t>(radix)) {
      sum += static_cast<int>(rest % static_cast<std::uint64_t>(radix));
    }
    out.colors[v] = sum % radix;
  }
  out.method = "digit_sum";
  if (!is_proper(g, out.colors)) {
    out.colors = dsatur(g);
    out.method = "dsatur";
    if (!is_proper(g, out.colors)) throw ColoringFailed("no proper coloring found");
  }
  out.color_count = count_colors(out.colors);
  return out;
}

int exact_chromatic_number(const StateGraph& g, std::size_t max_vertices) {
  if (g.vertex_count() > max_vertices) throw CapExceeded("exact coloring limited to " + std::to_string(max_vertices) + " vertices");
  for (int k = 1;; ++k) {
    std::vector<int> color(g.vertex_count(), -1);
    if (color_backtrack(g, color, 0, k)) return k;
  }
}

std::string_view peg_pair_name(int cls) {
  static constexpr std::string_view kNames[] = {"01", "02", "03", "12", "13", "23"};
  return kNames[static_cast<std::size_t>(cls)];
}

EdgeClasses peg_pair_classes(const StateGraph& g) {
  EdgeClasses out;
  out.edges = g.edges();
  out.classes.reserve(out.edges.size());
  std::array<bool, 6> present{};
  std::vector<std::uint8_t> seen(g.vertex_count(), 0);
  out.proper = true;
  for (const auto& [u, v] : out.edges) {
    const Move m = g.move_between(u, v);
    const int c = pair_id(to_int(m.from), to_int(m.to));
    out.classes.push_back(c);
    present[static_cast<std::size_t>(c)] = true;
    const auto bit = static_cast<std::uint8_t>(1U << c);
    if ((seen[u] & bit) || (seen[v] & bit)) out.proper = false;
    seen[u] |= bit;
    seen[v] |= bit;
  }
  for (int c = 0; c < 6; ++c) {
    if (present[static_cast<std::size_t>(c)]) out.used.push_back(c);
  }
  return out;
}

namespace {

bool edge_backtrack(const std::vector<Edge>& edges, std::vector<std::uint32_t>& mask, std::size_t i, int k) {
  if (i == edges.size()) return true;
  const auto [u, v] = edges[i];
  for (int c = 0; c < k; ++c) {
    const std::uint32_t bit = 1U << c;
    if ((mask[u] | mask[v]) & bit) continue;
    mask[u] |= bit;
    mask[v] |= bit;
    if (edge_backtrack(edges, mask, i + 1, k)) return true;
    mask[u] &= ~bit;
    mask[v] &= ~bit;
  }
  return false;
}

}  // namespace

int exact_chromatic_index(const StateGraph& g, std::size_t max_edges) {
  if (g.edge_count() > max_edges) throw CapExceeded("exact edge coloring limited to " + std::to_string(max_edges) + " edges");
  const auto edges = g.edges();
  if (edges.empty()) return 0;
  for (int k = degree_profile(g).max;; ++k) {
    std::vector<std::uint32_t> mask(g.vertex_count(), 0);
    if (edge_backtrack(edges, mask, 0, k)) return k;
  }
}

// ---- metrics and exports ----

GraphMetrics compute_metrics(const StateGraph& g) {
  GraphMetrics m;
  m.n = g.discs();
  m.vertices = g.vertex_count();
  m.edges = g.edge_count();
  const auto deg = degree_profile(g);
  m.min_degree = deg.min;
  m.max_degree = deg.max;
  m.average_degree = average_degree(g);
  const auto conn = connectivity(g);
  m.kappa = conn.kappa;
  m.lambda = conn.lambda;
  m.diameter_exact = g.vertex_count() <= kExactDiameterVertices;
  m.diameter = m.diameter_exact ? diameter_exact(g) : diameter_lower_bound(g);
  const auto cliques = clique_scan(g);
  m.omega = cliques.omega;
  m.chi = std::max(vertex_coloring(g).color_count, m.omega);
  if (m.edges == 0) {
    m.chi_prime = 0;
  } else {
    const auto cls = peg_pair_classes(g);
    if (cls.proper && static_cast<int>(cls.used.size()) == m.max_degree) {
      m.chi_prime = m.max_degree;
    } else if (m.edges <= 64) {
      m.chi_prime = exact_chromatic_index(g);
    } else {
      m.chi_prime = -1;
    }
  }
  return m;
}

std::string to_dot(const StateGraph& g) {
  std::string name = g.flavor() == Flavor::kParity ? "P_" : "H" + std::to_string(g.pegs()) + "_";
  name += std::to_string(g.discs());
  std::vector<std::string> labels(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) labels[v] = g.label(v);
  std::vector<std::pair<std::string, std::string>> lines;
  for (const auto& [u, v] : g.edges()) {
    lines.emplace_back(std::min(labels[u], labels[v]), std::max(labels[u], labels[v]));
  }
  std::sort(lines.begin(), lines.end());
  std::vector<std::string> nodes = labels;
  std::sort(nodes.begin(), nodes.end());

  std::string out = "graph " + name + " {\n";
  for (const auto& l : nodes) out += "  \"" + l + "\";\n";
  for (const auto& [a, b] : lines) out += "  \"" + a + "\" -- \"" + b + "\";\n";
  out += "}\n";
  return out;
}

std::string to_edge_list(const StateGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) out += std::to_string(u) + ' ' + std::to_string(v) + '\n';
  return out;
}

}  // namespace phanoi::graph
