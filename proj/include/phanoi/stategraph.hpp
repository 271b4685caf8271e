#pragma once

// State graphs of the parity-constrained puzzle and of the classical m-peg
// puzzle, with the structural checks run on them.
//
// Vertices are dense indices. For the parity graph the index is the StateIndex
// of core.hpp; for the classical graph it is the base-m number whose digit at
// weight m^(d-1) is the peg of disc d.

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "phanoi/core.hpp"
#include "phanoi/sequences.hpp"

namespace phanoi::graph {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;  // always first < second

inline constexpr int kDefaultGraphCap = 13;
// Largest vertex count for which all-sources BFS is run.
inline constexpr std::size_t kExactDiameterVertices = 16384;

enum class Flavor { kParity, kClassical };

class StateGraph {
 public:
  // Throws CapExceeded when n > cap.
  static StateGraph parity(int n, int cap = kDefaultGraphCap);
  // pegs in {3, 4}; throws CapExceeded when pegs^n exceeds 3^cap.
  static StateGraph classical(int pegs, int n, int cap = kDefaultGraphCap);

  Flavor flavor() const { return flavor_; }
  int discs() const { return n_; }
  int pegs() const { return pegs_; }
  std::size_t vertex_count() const { return degree_.size(); }
  std::uint64_t edge_count() const { return edges_; }

  std::span<const Vertex> neighbors(Vertex v) const {
    return {adj_.data() + static_cast<std::size_t>(v) * width_, degree_[v]};
  }
  int degree(Vertex v) const { return degree_[v]; }
  bool adjacent(Vertex u, Vertex v) const;

  // Peg (0..pegs-1) holding `disc` in vertex v.
  int peg_of(Vertex v, int disc) const;
  // Pegs written s_n ... s_1, the same word format as State::word().
  std::string label(Vertex v) const;
  Vertex vertex_of(std::string_view word) const;
  // The move along edge {u, v}, oriented u -> v.
  Move move_between(Vertex u, Vertex v) const;

  // Ascending (u, v) with u < v.
  std::vector<Edge> edges() const;

 private:
  StateGraph(Flavor f, int n, int pegs, int width);
  void add_neighbor(Vertex u, Vertex v);

  Flavor flavor_;
  int n_;
  int pegs_;
  int width_;
  std::uint64_t edges_ = 0;
  std::vector<std::uint64_t> weight_;  // weight_[d] = radix^(d-1)
  std::vector<Vertex> adj_;
  std::vector<std::uint8_t> degree_;
};

// ---- counts ----

sequences::BigInt edge_count_recurrence(int n);
// Throws NonIntegralClosedForm if the division by 14 is not exact.
sequences::BigInt edge_count_closed(int n);
// Number of edges moving each disc; entry 0 is unused.
std::vector<std::uint64_t> edges_by_disc(const StateGraph& g);

sequences::Rational average_degree(const StateGraph& g);
// The branch formula 27/7 - c * 2^e / 3^n - 1/3^n.
sequences::Rational average_degree_formula(int n);

struct DegreeProfile {
  int min = 0;
  int max = 0;
  std::map<int, std::uint64_t> histogram;
};
DegreeProfile degree_profile(const StateGraph& g);

// ---- connectivity ----

struct ConnectivityReport {
  bool connected = false;
  std::vector<Vertex> articulation_points;
  std::vector<Edge> bridges;
  std::vector<Vertex> vertex_cut;  // removing these disconnects the graph
  std::vector<Edge> edge_cut;      // removing these disconnects the graph
  int kappa = 0;   // -1 when the bounds below do not meet
  int lambda = 0;  // -1 when the bounds below do not meet
};
// Lower bound from the absence of cut vertices and bridges, upper bound from
// the cuts around the perfect state 3^n. For K3 (n = 1) kappa is |V| - 1.
ConnectivityReport connectivity(const StateGraph& g);

std::size_t component_count(const StateGraph& g, const std::vector<bool>& removed);

// ---- distances ----

std::vector<std::uint32_t> bfs_distances(const StateGraph& g, Vertex source);
// All-sources BFS. Throws CapExceeded when vertex_count > kExactDiameterVertices.
std::uint32_t diameter_exact(const StateGraph& g);
// Largest eccentricity over the perfect and parity-separated states.
std::uint32_t diameter_lower_bound(const StateGraph& g);

// ---- cliques and colorings ----

struct CliqueReport {
  std::uint64_t triangles = 0;
  std::optional<std::vector<Vertex>> triangle;  // first triangle found
  bool has_k4 = false;
  bool triangles_move_one_disc = true;
  bool triangle_discs_small = true;  // every triangle moves disc 1 or disc 2
  int omega = 0;
};
CliqueReport clique_scan(const StateGraph& g);

struct VertexColoring {
  std::vector<int> colors;
  int color_count = 0;
  std::string method;
};
bool is_proper(const StateGraph& g, const std::vector<int>& colors);
// Digit sum mod 3, verified, with a DSATUR fallback. Throws ColoringFailed.
VertexColoring vertex_coloring(const StateGraph& g);
// Smallest k admitting a proper coloring, by backtracking. For small graphs only.
int exact_chromatic_number(const StateGraph& g, std::size_t max_vertices = 64);

struct EdgeClasses {
  std::vector<Edge> edges;
  std::vector<int> classes;  // parallel to edges; 0 = {0,1} ... 4 = {2,3}, see peg_pair_name
  std::vector<int> used;     // class ids present
  bool proper = false;
};
std::string_view peg_pair_name(int cls);
EdgeClasses peg_pair_classes(const StateGraph& g);
int exact_chromatic_index(const StateGraph& g, std::size_t max_edges = 64);

// ---- Hamiltonian certificates ----

enum class PathKind { kPath, kCycle };

struct HamiltonianCertificate {
  PathKind kind = PathKind::kPath;
  int n = 0;
  std::vector<std::uint64_t> order;  // StateIndex values
};

HamiltonianCertificate hamiltonian_path_perfect(int n);
// From source^n (source N1 or N2) to the parity-separated state; 3^n - 1 moves.
HamiltonianCertificate hamiltonian_path_separated(int n, Peg source);
HamiltonianCertificate hamiltonian_cycle(int n);

struct CertificateCheck {
  bool ok = false;
  std::string detail;
};
CertificateCheck validate(const StateGraph& g, const HamiltonianCertificate& c);

// ---- embedded sub-Hanoi graphs ----

// Free discs move on {0, parity peg, 3}; locked discs stay on their parity
// peg. kOddLocked frees the even discs and vice versa.
enum class LockedClass { kOddLocked, kEvenLocked };

std::vector<Vertex> locked_vertex_set(const StateGraph& g, LockedClass locked);
// The larger of the two sets: odd discs locked for even n, even discs for odd n.
LockedClass largest_lock(int n);

struct SubHanoiReport {
  std::vector<Vertex> vertices;
  int free_discs = 0;
  bool isomorphic = false;  // induced subgraph equals H3^free_discs under relabeling
  std::vector<Vertex> shared;  // intersection of the two locked sets
};
SubHanoiReport sub_hanoi_embedding(const StateGraph& g);

// kEmbeddedSet deletes the vertices of the largest locked set. kParityPegLockout
// deletes every state with a disc of the locked class on its parity peg, which
// isolates the copies reachable only through those placements.
enum class RemovalMode { kEmbeddedSet, kParityPegLockout };
std::string_view name(RemovalMode m);
std::size_t removal_components(const StateGraph& g, RemovalMode mode);

// Every edge of the parity graph is an edge of the classical 4-peg graph
// under identity labeling.
bool embeds_in_classical(const StateGraph& parity, const StateGraph& four_peg);

// ---- symmetry ----

struct AutomorphismReport {
  bool neutral_swap_is_automorphism = false;
  std::optional<std::string> parity_swap_witness;  // feasible word mapped to an infeasible one
  int preserving_peg_permutations = 0;             // out of 24
};
AutomorphismReport automorphism_check(const StateGraph& g);

// ---- K3,3 subdivision in P^3 ----

struct NonplanarityReport {
  bool states_feasible = false;
  bool deleted_edges_present = false;
  bool paths_present = false;
  bool paths_disjoint = false;
  bool ok() const { return states_feasible && deleted_edges_present && paths_present && paths_disjoint; }
  std::string detail;
};
// Throws WitnessFailed when the witness does not check out.
NonplanarityReport nonplanarity_witness();

// ---- metrics and exports ----

struct GraphMetrics {
  int n = 0;
  std::size_t vertices = 0;
  std::uint64_t edges = 0;
  int min_degree = 0;
  int max_degree = 0;
  sequences::Rational average_degree;
  int kappa = 0;
  int lambda = 0;
  std::uint32_t diameter = 0;
  bool diameter_exact = false;
  int omega = 0;
  int chi = 0;
  int chi_prime = 0;
};
GraphMetrics compute_metrics(const StateGraph& g);

std::string to_dot(const StateGraph& g);
std::string to_edge_list(const StateGraph& g);
std::string to_json(const GraphMetrics& m);

}  // namespace phanoi::graph
