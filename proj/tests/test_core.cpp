#include <gtest/gtest.h>

#include <set>

#include "phanoi/core.hpp"
#include "phanoi/errors.hpp"

using namespace phanoi;

TEST(Peg, ParityRule) {
  EXPECT_EQ(parity_peg(1), Peg::kOdd);
  EXPECT_EQ(parity_peg(2), Peg::kEven);
  EXPECT_TRUE(peg_allows(1, Peg::kN1));
  EXPECT_TRUE(peg_allows(1, Peg::kOdd));
  EXPECT_FALSE(peg_allows(1, Peg::kEven));
  EXPECT_FALSE(peg_allows(2, Peg::kOdd));
  EXPECT_TRUE(peg_allows(2, Peg::kN2));
  EXPECT_EQ(swap_neutral(Peg::kN1), Peg::kN2);
  EXPECT_EQ(swap_neutral(Peg::kOdd), Peg::kOdd);
}

TEST(State, WordRoundTrip) {
  const State s = State::from_word("032");
  EXPECT_EQ(s.discs(), 3);
  EXPECT_EQ(s.peg(1), Peg::kOdd);
  EXPECT_EQ(s.peg(2), Peg::kN2);
  EXPECT_EQ(s.peg(3), Peg::kN1);
  EXPECT_EQ(s.word(), "032");
  EXPECT_NO_THROW(State::from_word("012"));
}

TEST(State, RejectsForbiddenPeg) {
  EXPECT_THROW(State::from_word("1"), std::invalid_argument);
  EXPECT_THROW(State::from_word("20"), std::invalid_argument);
  EXPECT_THROW(State::from_word("4"), std::invalid_argument);
  EXPECT_NO_THROW(State::from_word("10"));
}

TEST(State, LargeDiscCount) {
  State s(100);
  s.set_peg(100, Peg::kEven);
  s.set_peg(33, Peg::kOdd);
  EXPECT_EQ(s.peg(100), Peg::kEven);
  EXPECT_EQ(s.peg(33), Peg::kOdd);
  EXPECT_EQ(s.peg(32), Peg::kN1);
  EXPECT_TRUE(s.feasible());
}

TEST(Moves, Legality) {
  const State s(2);
  EXPECT_TRUE(is_legal(s, {1, Peg::kN1, Peg::kOdd}));
  EXPECT_FALSE(is_legal(s, {1, Peg::kN1, Peg::kEven}));
  EXPECT_FALSE(is_legal(s, {2, Peg::kN1, Peg::kN2}));  // covered by disc 1
  EXPECT_THROW(apply(s, {2, Peg::kN1, Peg::kN2}), IllegalMove);
  const State t = apply(s, {1, Peg::kN1, Peg::kOdd});
  EXPECT_EQ(t.word(), "02");
  EXPECT_TRUE(is_legal(t, {2, Peg::kN1, Peg::kEven}));
}

TEST(Moves, EnumerationOrder) {
  const auto moves = enumerate_legal_moves(State(2));
  ASSERT_EQ(moves.size(), 2u);
  EXPECT_EQ(moves[0], (Move{1, Peg::kN1, Peg::kOdd}));
  EXPECT_EQ(moves[1], (Move{1, Peg::kN1, Peg::kN2}));
  EXPECT_EQ(to_string(moves[0]), "1 0->2");
}

TEST(Index, RoundTripAllStates) {
  for (int n = 0; n <= 6; ++n) {
    std::set<std::string> words;
    for (std::uint64_t v = 0; v < pow3(n); ++v) {
      const State s = decode(n, {v});
      EXPECT_TRUE(s.feasible());
      EXPECT_EQ(encode(s).value, v);
      words.insert(s.word());
    }
    EXPECT_EQ(words.size(), pow3(n));
  }
  EXPECT_THROW(decode(41, {0}), CapExceeded);
}

TEST(Index, MoveIteratorAgreesWithEnumeration) {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t v = 0; v < pow3(n); ++v) {
      const State s = decode(n, {v});
      std::vector<std::uint64_t> fast;
      for_each_move_index(n, v, [&](std::uint64_t w, int, int, int) { fast.push_back(w); });
      std::vector<std::uint64_t> slow;
      for (const Move& m : enumerate_legal_moves(s)) slow.push_back(encode(apply(s, m)).value);
      EXPECT_EQ(fast, slow);
    }
  }
}

TEST(Canonical, Targets) {
  const auto c = canonical_states(4);
  EXPECT_EQ(c.initial.word(), "0000");
  EXPECT_EQ(c.perfect.word(), "3333");
  EXPECT_EQ(c.target_a.word(), "3333");
  EXPECT_EQ(c.target_b.word(), "1212");
  EXPECT_EQ(c.target_c.word(), "3232");
  EXPECT_EQ(c.target_d.word(), "1313");
  EXPECT_EQ(parse_task("c"), Task::kC);
  EXPECT_THROW(parse_task("e"), std::invalid_argument);
}
