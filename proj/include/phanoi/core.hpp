#pragma once

// State and move model of the parity-constrained four-peg puzzle.
//
// Pegs are coded 0 = N1 (neutral), 1 = E (even discs only), 2 = O (odd discs
// only), 3 = N2 (neutral). Disc 1 is the smallest. A state assigns one peg to
// every disc; the stacking order on each peg is implied, so any word that
// respects the parity rule is a legal state.

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace phanoi {

enum class Peg : std::uint8_t { kN1 = 0, kEven = 1, kOdd = 2, kN2 = 3 };

constexpr int to_int(Peg p) { return static_cast<int>(p); }
constexpr char to_char(Peg p) { return static_cast<char>('0' + to_int(p)); }
Peg peg_from_int(int v);

// Peg 1 for even discs, peg 2 for odd discs.
constexpr Peg parity_peg(int disc) { return disc % 2 == 0 ? Peg::kEven : Peg::kOdd; }
constexpr Peg forbidden_peg(int disc) {
  return static_cast<Peg>(3 - to_int(parity_peg(disc)));
}
constexpr bool peg_allows(int disc, Peg p) { return p != forbidden_peg(disc); }

// The 0 <-> 3 swap of the neutral pegs; parity pegs are fixed.
constexpr Peg swap_neutral(Peg p) {
  switch (p) {
    case Peg::kN1: return Peg::kN2;
    case Peg::kN2: return Peg::kN1;
    default: return p;
  }
}

// Objectives: (a) full transfer N1 -> N2, (b) parity separation onto E/O,
// (c) odds to O and evens to N2, (d) odds to N2 and evens to E.
enum class Task : std::uint8_t { kA, kB, kC, kD };
inline constexpr std::array<Task, 4> kAllTasks = {Task::kA, Task::kB, Task::kC, Task::kD};
char task_char(Task t);
Task parse_task(std::string_view s);

struct Move {
  int disc = 0;
  Peg from = Peg::kN1;
  Peg to = Peg::kN1;

  Move reversed() const { return {disc, to, from}; }
  friend bool operator==(const Move&, const Move&) = default;
};

std::string to_string(const Move& m);  // "disc from->to"

class State {
 public:
  // All n discs on N1.
  explicit State(int n = 0);

  // Word s_n ... s_1 as digits, e.g. "032" (disc 3 on N1, disc 2 on N2, disc 1 on O).
  static State from_word(std::string_view word);
  // pegs[i] is the peg of disc i+1.
  static State from_pegs(const std::vector<Peg>& pegs);

  int discs() const { return n_; }
  Peg peg(int disc) const;
  void set_peg(int disc, Peg p);
  State with_peg(int disc, Peg p) const;

  bool feasible() const;
  std::string word() const;

  friend bool operator==(const State&, const State&) = default;

 private:
  static constexpr int kDiscsPerWord = 32;

  int n_;
  std::vector<std::uint64_t> words_;
};

bool is_legal(const State& s, const Move& m);
// Throws IllegalMove when !is_legal(s, m).
State apply(const State& s, const Move& m);
// Ascending disc, then ascending target peg.
std::vector<Move> enumerate_legal_moves(const State& s);

// Dense base-3 vertex numbering: the digit of disc d sits at weight 3^(d-1)
// and maps its peg through {0 -> 0, p(d) -> 1, 3 -> 2}.
struct StateIndex {
  std::uint64_t value = 0;
  friend bool operator==(const StateIndex&, const StateIndex&) = default;
};

inline constexpr int kMaxIndexedDiscs = 40;

namespace detail {
constexpr std::array<std::uint64_t, kMaxIndexedDiscs + 1> make_pow3() {
  std::array<std::uint64_t, kMaxIndexedDiscs + 1> t{};
  t[0] = 1;
  for (int i = 1; i <= kMaxIndexedDiscs; ++i) t[i] = t[i - 1] * 3;
  return t;
}
inline constexpr auto kPow3 = make_pow3();
}  // namespace detail

// 3^k for 0 <= k <= kMaxIndexedDiscs.
constexpr std::uint64_t pow3(int k) { return detail::kPow3[static_cast<std::size_t>(k)]; }

constexpr int peg_digit(Peg p, int disc) {
  if (p == Peg::kN1) return 0;
  if (p == Peg::kN2) return 2;
  return p == parity_peg(disc) ? 1 : -1;
}
constexpr Peg digit_peg(int digit, int disc) {
  return digit == 0 ? Peg::kN1 : digit == 2 ? Peg::kN2 : parity_peg(disc);
}
StateIndex encode(const State& s);
State decode(int n, StateIndex idx);

struct CanonicalStates {
  State initial;  // 0^n
  State perfect;  // 3^n
  State target_a;
  State target_b;
  State target_c;
  State target_d;

  const State& target(Task t) const;
};

CanonicalStates canonical_states(int n);
State task_target(Task t, int n);

// Visits every legal move out of vertex `idx` of the n-disc graph as
// fn(neighbor_index, disc, from_digit, to_digit), ascending disc then target.
template <class Fn>
void for_each_move_index(int n, std::uint64_t idx, Fn&& fn) {
  std::array<int, kMaxIndexedDiscs + 1> digit{};
  std::array<int, 4> top = {0, 0, 0, 0};  // smallest disc on each peg, 0 if empty
  std::uint64_t rest = idx;
  for (int d = 1; d <= n; ++d) {
    digit[d] = static_cast<int>(rest % 3);
    rest /= 3;
    const int p = to_int(digit_peg(digit[d], d));
    if (top[p] == 0) top[p] = d;
  }
  for (int d = 1; d <= n; ++d) {
    const int from = to_int(digit_peg(digit[d], d));
    if (top[from] != d) continue;
    for (int to_digit = 0; to_digit < 3; ++to_digit) {
      if (to_digit == digit[d]) continue;
      const int to = to_int(digit_peg(to_digit, d));
      if (top[to] != 0 && top[to] < d) continue;
      const std::uint64_t w = pow3(d - 1);
      const std::uint64_t next = idx - static_cast<std::uint64_t>(digit[d]) * w +
                                 static_cast<std::uint64_t>(to_digit) * w;
      fn(next, d, digit[d], to_digit);
    }
  }
}

}  // namespace phanoi
