#include <gtest/gtest.h>

#include "phanoi/errors.hpp"
#include "phanoi/sequences.hpp"

using namespace phanoi::sequences;

namespace {

// Shortest distances from 0^n to each target, from an exhaustive search of
// the state graph written independently of this library.
const std::vector<int> kBfsA = {0, 1, 3, 5, 9, 15, 23, 35, 53, 77, 113};
const std::vector<int> kBfsB = {0, 1, 2, 4, 7, 11, 17, 26, 38, 56, 81};
const std::vector<int> kBfsC = {0, 1, 2, 5, 6, 13, 15, 30, 34, 65, 72};
const std::vector<int> kBfsD = {0, 1, 2, 4, 7, 11, 18, 25, 40, 54, 85};

}  // namespace

TEST(Classical, ThreeAndFourPeg) {
  EXPECT_EQ(h3(0), 0);
  EXPECT_EQ(h3(10), 1023);
  const std::vector<int> h4_small = {0, 1, 3, 5, 9, 13, 17, 25, 33, 41, 49, 65, 81};
  const auto v = h4_values(12);
  for (std::size_t n = 0; n < h4_small.size(); ++n) EXPECT_EQ(v[n], h4_small[n]) << n;
  EXPECT_EQ(h4(48), 5633);
}

TEST(Coupled, MatchesBfs) {
  const auto t = coupled_counts(10);
  for (int n = 0; n <= 10; ++n) {
    EXPECT_EQ(t.at(n).a, kBfsA[n]) << n;
    EXPECT_EQ(t.at(n).b, kBfsB[n]) << n;
    EXPECT_EQ(t.at(n).c, kBfsC[n]) << n;
    EXPECT_EQ(t.at(n).d, kBfsD[n]) << n;
  }
}

TEST(Coupled, LargeValues) {
  const auto r = coupled_counts(48).at(48);
  EXPECT_EQ(r.a, 64712083);
  EXPECT_EQ(r.b, 45538139);
  EXPECT_EQ(r.c, 40744649);
  EXPECT_EQ(r.d, 47934884);
  EXPECT_EQ(r.a, 2 * coupled_counts(47).at(47).b + 1);
}

TEST(Coupled, Limits) {
  EXPECT_THROW(coupled_counts(-1), std::invalid_argument);
  EXPECT_THROW(coupled_counts(kMaxN + 1), phanoi::OverflowError);
  const auto big = coupled_counts(1000);
  EXPECT_GT(big.at(1000).a, big.at(999).a);
}

TEST(HigherOrder, AgreesWithCoupled) {
  const auto ref = coupled_counts(300);
  EXPECT_FALSE(first_discrepancy(ref, higher_order_counts(300)).has_value());
}

TEST(HigherOrder, PrintedSeedIsInconsistent) {
  const auto d = first_discrepancy(coupled_counts(20), higher_order_counts(20, SeedSet::kAsPrinted));
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->sequence, Sequence::kA);
  EXPECT_EQ(d->n, 3);
  EXPECT_EQ(d->expected, "5");
  EXPECT_EQ(d->actual, "4");
}

TEST(ClosedForm, GroupedReadingAgrees) {
  const auto ref = coupled_counts(200);
  const auto cf = closed_form_counts(200);
  EXPECT_FALSE(first_discrepancy(ref, cf).has_value());
  EXPECT_FALSE(first_closed_form_discrepancy(200, ClosedFormReading::kGrouped).has_value());
}

TEST(ClosedForm, PrintedReadingFails) {
  const auto d = first_closed_form_discrepancy(50, ClosedFormReading::kAsPrinted);
  ASSERT_TRUE(d.has_value());
  EXPECT_EQ(d->sequence, Sequence::kA);
  EXPECT_EQ(d->n, 0);
  EXPECT_EQ(d->actual, "-300/7");
  EXPECT_THROW(closed_form_counts(10, ClosedFormReading::kAsPrinted), phanoi::NonIntegralClosedForm);
}

TEST(ClosedForm, TriadicSplit) {
  EXPECT_EQ(triadic_split(7).rho, 1);
  EXPECT_EQ(triadic_split(7).theta, 2);
  EXPECT_EQ(triadic_split(-1).rho, 2);
  EXPECT_EQ(triadic_split(-1).theta, -1);
}

TEST(Export, CsvAndJson) {
  const auto t = coupled_counts(2);
  EXPECT_EQ(to_csv(t), "n,h3,h4,a,b,c,d\n0,0,0,0,0,0,0\n1,1,1,1,1,1,1\n2,3,3,3,2,2,2\n");
  const std::string js = to_json(t);
  EXPECT_NE(js.find("\"a\": 3"), std::string::npos) << js;
  EXPECT_EQ(parse_sequence("h4"), Sequence::kH4);
  EXPECT_THROW(parse_sequence("x"), std::invalid_argument);
}
