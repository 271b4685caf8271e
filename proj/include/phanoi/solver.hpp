#pragma once

// Explicit optimal move sequences for the four objectives, and an exhaustive
// breadth-first oracle over the state graph used to check them.

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "phanoi/core.hpp"

namespace phanoi::solver {

struct MoveSequence {
  Task task = Task::kA;
  int n = 0;
  std::vector<Move> moves;
  State start;
  State end;
};

using MoveVisitor = std::function<void(const Move&)>;

// Classical recursive transfer of a same-parity sub-tower. `discs` must be
// ascending; the result has 2^|discs| - 1 moves. Legality depends on the
// ambient state and is only checked on replay.
std::vector<Move> three_peg_transfer(std::span<const int> discs, Peg from, Peg to, Peg aux);

// Streams the moves of the optimal sequence for `task` from 0^n, in order.
void for_each_move(Task task, int n, const MoveVisitor& visit);
MoveSequence solve(Task task, int n);

// Reverse of the parity separation, re-rooted so the discs 1..n end stacked
// on `target` (N1 or N2). Needs discs 1..n parity-separated on pegs 1 and 2.
std::vector<Move> gather(int n, Peg target);

struct OracleResult {
  bool reachable = false;
  std::uint64_t distance = 0;
  std::uint64_t shortest_path_count = 0;
};

inline constexpr int kDefaultOracleCap = 13;

// Shortest-path distance and number of distinct shortest paths in P^n,
// counted level by level over the breadth-first DAG. Throws CapExceeded when
// n > cap.
OracleResult bfs_distance(int n, const State& source, const State& target, int cap = kDefaultOracleCap);

enum class FailureKind { kNone, kStartMismatch, kIllegalMove, kEndpointMismatch, kLengthMismatch, kNotShortest };
std::string_view name(FailureKind k);

struct VerifyReport {
  bool ok = true;
  FailureKind kind = FailureKind::kNone;
  std::size_t step = 0;  // index of the first offending move for kIllegalMove
  std::string detail;
  std::optional<OracleResult> oracle;  // present when n <= oracle cap
};

// Replays the sequence and checks legality, endpoints, the length against the
// recurrence value and, for n <= oracle_cap, against the BFS distance. Never throws.
VerifyReport verify_sequence(const MoveSequence& seq, int oracle_cap = kDefaultOracleCap);

}  // namespace phanoi::solver
