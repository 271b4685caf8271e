#include "phanoi/solver.hpp"

#include <deque>
#include <initializer_list>
#include <limits>

#include "phanoi/errors.hpp"
#include "phanoi/sequences.hpp"

namespace phanoi::solver {

namespace {

Peg other_neutral(Peg p) { return swap_neutral(p); }

std::vector<int> discs_below(int limit, int parity) {
  std::vector<int> out;
  for (int d = parity == 0 ? 2 : 1; d < limit; d += 2) out.push_back(d);
  return out;
}

// Every procedure runs its phases forward, or backward with each phase and
// each single move reversed. Running a generator reversed yields the exact
// reverse path, which is how gather is obtained from the separation.
class Generator {
 public:
  explicit Generator(const MoveVisitor& visit) : visit_(visit) {}

  using Phase = std::function<void(bool)>;

  void phases(bool rev, std::initializer_list<Phase> list) {
    if (!rev) {
      for (const auto& p : list) p(false);
    } else {
      for (auto it = std::rbegin(list); it != std::rend(list); ++it) (*it)(true);
    }
  }

  void move(bool rev, int disc, Peg from, Peg to) { visit_(rev ? Move{disc, to, from} : Move{disc, from, to}); }

  void transfer(bool rev, std::span<const int> discs, Peg from, Peg to, Peg aux) {
    if (discs.empty()) return;
    const auto smaller = discs.first(discs.size() - 1);
    phases(rev, {[&](bool r) { transfer(r, smaller, from, aux, to); },
                 [&](bool r) { move(r, discs.back(), from, to); },
                 [&](bool r) { transfer(r, smaller, aux, to, from); }});
  }

  // 0/3-rooted tower of discs 1..n on x -> parity separated on pegs 1 and 2.
  void separate(bool rev, int n, Peg x, Peg y) {
    if (n == 0) return;
    const Peg own = parity_peg(n);
    const auto same = discs_below(n, n % 2);
    if (n % 2 == 0) {
      phases(rev, {[&](bool r) { odd_to_parity_even_to_neutral(r, n - 1, x, y); },
                   [&](bool r) { move(r, n, x, own); },
                   [&](bool r) { transfer(r, same, y, own, x); }});
    } else {
      phases(rev, {[&](bool r) { odd_to_neutral_even_to_parity(r, n - 1, x, y); },
                   [&](bool r) { move(r, n, x, own); },
                   [&](bool r) { transfer(r, same, y, own, x); }});
    }
  }

  // Objective (c): odd discs to O, even discs to the other neutral peg y.
  void odd_to_parity_even_to_neutral(bool rev, int n, Peg x, Peg y) {
    if (n == 0) return;
    if (n == 1) {
      move(rev, 1, x, Peg::kOdd);
      return;
    }
    if (n % 2 == 0) {
      const auto evens = discs_below(n, 0);
      phases(rev, {[&](bool r) { separate(r, n - 1, x, y); },
                   [&](bool r) { move(r, n, x, y); },
                   [&](bool r) { transfer(r, evens, Peg::kEven, y, x); }});
      return;
    }
    const auto odds = discs_below(n - 1, 1);
    const auto evens = discs_below(n - 1, 0);
    phases(rev, {[&](bool r) { separate(r, n - 2, x, y); },
                 [&](bool r) { move(r, n - 1, x, y); },
                 [&](bool r) { transfer(r, odds, Peg::kOdd, y, x); },
                 [&](bool r) { move(r, n, x, Peg::kOdd); },
                 [&](bool r) { transfer(r, odds, y, Peg::kOdd, x); },
                 [&](bool r) { transfer(r, evens, Peg::kEven, y, x); }});
  }

  // Objective (d): odd discs to the other neutral peg y, even discs to E.
  void odd_to_neutral_even_to_parity(bool rev, int n, Peg x, Peg y) {
    if (n == 0) return;
    if (n % 2 == 1) {
      const auto odds = discs_below(n, 1);
      phases(rev, {[&](bool r) { separate(r, n - 1, x, y); },
                   [&](bool r) { move(r, n, x, y); },
                   [&](bool r) { transfer(r, odds, Peg::kOdd, y, x); }});
      return;
    }
    const auto evens = discs_below(n - 1, 0);
    const auto odds = discs_below(n - 1, 1);
    phases(rev, {[&](bool r) { separate(r, n - 2, x, y); },
                 [&](bool r) { move(r, n - 1, x, y); },
                 [&](bool r) { transfer(r, evens, Peg::kEven, y, x); },
                 [&](bool r) { move(r, n, x, Peg::kEven); },
                 [&](bool r) { transfer(r, evens, y, Peg::kEven, x); },
                 [&](bool r) { transfer(r, odds, Peg::kOdd, y, x); }});
  }

  // Parity-separated discs 1..n -> tower on `target`.
  void gather(bool rev, int n, Peg target) { separate(!rev, n, target, other_neutral(target)); }

  // Objective (a): whole tower from x to y.
  void full_transfer(bool rev, int n, Peg x, Peg y) {
    if (n == 0) return;
    phases(rev, {[&](bool r) { separate(r, n - 1, x, y); },
                 [&](bool r) { move(r, n, x, y); },
                 [&](bool r) { gather(r, n - 1, y); }});
  }

 private:
  const MoveVisitor& visit_;
};

std::vector<Move> collect(const std::function<void(Generator&)>& body) {
  std::vector<Move> out;
  const MoveVisitor sink = [&out](const Move& m) { out.push_back(m); };
  Generator g(sink);
  body(g);
  return out;
}

}  // namespace

std::vector<Move> three_peg_transfer(std::span<const int> discs, Peg from, Peg to, Peg aux) {
  return collect([&](Generator& g) { g.transfer(false, discs, from, to, aux); });
}

void for_each_move(Task task, int n, const MoveVisitor& visit) {
  if (n < 0) throw std::invalid_argument("disc count must be non-negative");
  Generator g(visit);
  switch (task) {
    case Task::kA: g.full_transfer(false, n, Peg::kN1, Peg::kN2); break;
    case Task::kB: g.separate(false, n, Peg::kN1, Peg::kN2); break;
    case Task::kC: g.odd_to_parity_even_to_neutral(false, n, Peg::kN1, Peg::kN2); break;
    case Task::kD: g.odd_to_neutral_even_to_parity(false, n, Peg::kN1, Peg::kN2); break;
  }
}

MoveSequence solve(Task task, int n) {
  MoveSequence seq{task, n, {}, State(n), task_target(task, n)};
  for_each_move(task, n, [&seq](const Move& m) { seq.moves.push_back(m); });
  return seq;
}

std::vector<Move> gather(int n, Peg target) {
  if (target != Peg::kN1 && target != Peg::kN2) throw std::invalid_argument("gather target must be a neutral peg");
  return collect([&](Generator& g) { g.gather(false, n, target); });
}

OracleResult bfs_distance(int n, const State& source, const State& target, int cap) {
  if (n > cap) {
    throw CapExceeded("oracle cap is n <= " + std::to_string(cap) + ", requested n = " + std::to_string(n));
  }
  if (source.discs() != n || target.discs() != n) throw std::invalid_argument("state disc count differs from n");
  const std::uint64_t src = encode(source).value;
  const std::uint64_t dst = encode(target).value;
  const std::size_t count = pow3(n);
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> dist(count, kUnseen);
  std::vector<std::uint64_t> paths(count, 0);
  std::deque<std::uint64_t> queue;
  dist[src] = 0;
  paths[src] = 1;
  queue.push_back(src);
  while (!queue.empty()) {
    const std::uint64_t u = queue.front();
    queue.pop_front();
    if (dist[dst] != kUnseen && dist[u] >= dist[dst]) break;
    for_each_move_index(n, u, [&](std::uint64_t v, int, int, int) {
      if (dist[v] == kUnseen) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
      if (dist[v] == dist[u] + 1) {
        if (paths[v] > std::numeric_limits<std::uint64_t>::max() - paths[u]) {
          throw OverflowError("shortest-path count exceeds 64 bits");
        }
        paths[v] += paths[u];
      }
    });
  }
  if (dist[dst] == kUnseen) return {};
  return {true, dist[dst], paths[dst]};
}

std::string_view name(FailureKind k) {
  switch (k) {
    case FailureKind::kNone: return "none";
    case FailureKind::kStartMismatch: return "start_mismatch";
    case FailureKind::kIllegalMove: return "illegal_move";
    case FailureKind::kEndpointMismatch: return "endpoint_mismatch";
    case FailureKind::kLengthMismatch: return "length_mismatch";
    case FailureKind::kNotShortest: return "not_shortest";
  }
  return "?";
}

VerifyReport verify_sequence(const MoveSequence& seq, int oracle_cap) {
  VerifyReport rep;
  auto fail = [&rep](FailureKind k, std::string detail) {
    rep.ok = false;
    rep.kind = k;
    rep.detail = std::move(detail);
    return rep;
  };
  try {
    if (seq.start != State(seq.n)) return fail(FailureKind::kStartMismatch, "start is " + seq.start.word());
    State s = seq.start;
    for (std::size_t i = 0; i < seq.moves.size(); ++i) {
      if (!is_legal(s, seq.moves[i])) {
        rep.step = i;
        return fail(FailureKind::kIllegalMove, "move " + std::to_string(i) + " (" + to_string(seq.moves[i]) +
                                                   ") is illegal in " + s.word());
      }
      s = apply(s, seq.moves[i]);
    }
    if (s != seq.end) return fail(FailureKind::kEndpointMismatch, "replay ends at " + s.word() + ", expected " + seq.end.word());
    if (seq.end != task_target(seq.task, seq.n)) {
      return fail(FailureKind::kEndpointMismatch, "declared end " + seq.end.word() + " is not the task target");
    }
    const auto want = sequences::coupled_counts(seq.n).at(seq.n).get(
        sequences::kParitySequences[static_cast<std::size_t>(seq.task)]);
    if (want != seq.moves.size()) {
      return fail(FailureKind::kLengthMismatch,
                  "length " + std::to_string(seq.moves.size()) + " differs from recurrence value " + want.str());
    }
    if (seq.n <= oracle_cap) {
      rep.oracle = bfs_distance(seq.n, seq.start, seq.end, oracle_cap);
      if (!rep.oracle->reachable || rep.oracle->distance != seq.moves.size()) {
        return fail(FailureKind::kNotShortest, "BFS distance is " + std::to_string(rep.oracle->distance));
      }
    }
  } catch (const std::exception& e) {
    return fail(FailureKind::kIllegalMove, e.what());
  }
  return rep;
}

}  // namespace phanoi::solver
