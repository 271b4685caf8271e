#include "phanoi/core.hpp"

#include <stdexcept>

#include "phanoi/errors.hpp"

namespace phanoi {

Peg peg_from_int(int v) {
  if (v < 0 || v > 3) throw std::invalid_argument("peg id out of range: " + std::to_string(v));
  return static_cast<Peg>(v);
}

char task_char(Task t) { return static_cast<char>('a' + static_cast<int>(t)); }

Task parse_task(std::string_view s) {
  if (s.size() == 1 && s[0] >= 'a' && s[0] <= 'd') return static_cast<Task>(s[0] - 'a');
  throw std::invalid_argument("unknown task '" + std::string(s) + "' (expected a, b, c or d)");
}

std::string to_string(const Move& m) {
  std::string out = std::to_string(m.disc);
  out += ' ';
  out += to_char(m.from);
  out += "->";
  out += to_char(m.to);
  return out;
}

State::State(int n) : n_(n), words_(static_cast<std::size_t>((n + kDiscsPerWord - 1) / kDiscsPerWord), 0) {
  if (n < 0) throw std::invalid_argument("disc count must be non-negative");
}

State State::from_pegs(const std::vector<Peg>& pegs) {
  State s(static_cast<int>(pegs.size()));
  for (std::size_t i = 0; i < pegs.size(); ++i) s.set_peg(static_cast<int>(i) + 1, pegs[i]);
  return s;
}

State State::from_word(std::string_view word) {
  State s(static_cast<int>(word.size()));
  const int n = s.discs();
  for (int i = 0; i < n; ++i) {
    const char ch = word[static_cast<std::size_t>(i)];
    if (ch < '0' || ch > '3') throw std::invalid_argument("bad state word '" + std::string(word) + "'");
    s.set_peg(n - i, static_cast<Peg>(ch - '0'));
  }
  if (!s.feasible()) throw std::invalid_argument("state word '" + std::string(word) + "' violates the parity rule");
  return s;
}

Peg State::peg(int disc) const {
  const auto i = static_cast<std::size_t>(disc - 1);
  return static_cast<Peg>((words_[i / kDiscsPerWord] >> (2 * (i % kDiscsPerWord))) & 3U);
}

void State::set_peg(int disc, Peg p) {
  if (disc < 1 || disc > n_) throw std::out_of_range("disc " + std::to_string(disc) + " out of range");
  const auto i = static_cast<std::size_t>(disc - 1);
  const unsigned shift = 2 * (i % kDiscsPerWord);
  auto& w = words_[i / kDiscsPerWord];
  w = (w & ~(std::uint64_t{3} << shift)) | (static_cast<std::uint64_t>(to_int(p)) << shift);
}

State State::with_peg(int disc, Peg p) const {
  State out = *this;
  out.set_peg(disc, p);
  return out;
}

bool State::feasible() const {
  for (int d = 1; d <= n_; ++d) {
    if (!peg_allows(d, peg(d))) return false;
  }
  return true;
}

std::string State::word() const {
  std::string out(static_cast<std::size_t>(n_), '0');
  for (int d = 1; d <= n_; ++d) out[static_cast<std::size_t>(n_ - d)] = to_char(peg(d));
  return out;
}

bool is_legal(const State& s, const Move& m) {
  if (m.disc < 1 || m.disc > s.discs()) return false;
  if (m.from == m.to) return false;
  if (!peg_allows(m.disc, m.from) || !peg_allows(m.disc, m.to)) return false;
  if (s.peg(m.disc) != m.from) return false;
  for (int k = 1; k < m.disc; ++k) {
    const Peg p = s.peg(k);
    if (p == m.from || p == m.to) return false;
  }
  return true;
}

State apply(const State& s, const Move& m) {
  if (!is_legal(s, m)) {
    throw IllegalMove("illegal move " + to_string(m) + " in state " + s.word());
  }
  return s.with_peg(m.disc, m.to);
}

std::vector<Move> enumerate_legal_moves(const State& s) {
  std::vector<Move> out;
  std::array<int, 4> top = {0, 0, 0, 0};
  for (int d = 1; d <= s.discs(); ++d) {
    auto& t = top[static_cast<std::size_t>(to_int(s.peg(d)))];
    if (t == 0) t = d;
  }
  for (int d = 1; d <= s.discs(); ++d) {
    const Peg from = s.peg(d);
    if (top[static_cast<std::size_t>(to_int(from))] != d) continue;
    for (int to = 0; to < 4; ++to) {
      const Peg target = static_cast<Peg>(to);
      if (target == from || !peg_allows(d, target)) continue;
      const int t = top[static_cast<std::size_t>(to)];
      if (t != 0 && t < d) continue;
      out.push_back({d, from, target});
    }
  }
  return out;
}

StateIndex encode(const State& s) {
  if (s.discs() > kMaxIndexedDiscs) {
    throw CapExceeded("state index supports at most " + std::to_string(kMaxIndexedDiscs) + " discs");
  }
  std::uint64_t v = 0;
  for (int d = s.discs(); d >= 1; --d) {
    const int digit = peg_digit(s.peg(d), d);
    if (digit < 0) throw std::invalid_argument("cannot index infeasible state " + s.word());
    v = v * 3 + static_cast<std::uint64_t>(digit);
  }
  return {v};
}

State decode(int n, StateIndex idx) {
  if (n > kMaxIndexedDiscs) {
    throw CapExceeded("state index supports at most " + std::to_string(kMaxIndexedDiscs) + " discs");
  }
  if (idx.value >= pow3(n)) throw std::out_of_range("state index out of range");
  State s(n);
  std::uint64_t rest = idx.value;
  for (int d = 1; d <= n; ++d) {
    s.set_peg(d, digit_peg(static_cast<int>(rest % 3), d));
    rest /= 3;
  }
  return s;
}

const State& CanonicalStates::target(Task t) const {
  switch (t) {
    case Task::kA: return target_a;
    case Task::kB: return target_b;
    case Task::kC: return target_c;
    case Task::kD: return target_d;
  }
  return target_a;
}

CanonicalStates canonical_states(int n) {
  CanonicalStates c{State(n), State(n), State(n), State(n), State(n), State(n)};
  for (int d = 1; d <= n; ++d) {
    const bool odd = d % 2 == 1;
    c.perfect.set_peg(d, Peg::kN2);
    c.target_a.set_peg(d, Peg::kN2);
    c.target_b.set_peg(d, parity_peg(d));
    c.target_c.set_peg(d, odd ? Peg::kOdd : Peg::kN2);
    c.target_d.set_peg(d, odd ? Peg::kN2 : Peg::kEven);
  }
  return c;
}

State task_target(Task t, int n) { return canonical_states(n).target(t); }

}  // namespace phanoi
