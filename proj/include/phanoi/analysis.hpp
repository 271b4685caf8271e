#pragma once

// Growth behaviour of the parity-constrained counts: parity-split successive
// ratios, two-step ratios, sqrt(2)^n scaling and the comparison table.
// Ratios are exact rationals; doubles are for display only.

#include <string>
#include <vector>

#include "phanoi/sequences.hpp"

namespace phanoi::analysis {

using sequences::BigInt;
using sequences::Rational;
using sequences::Sequence;

// Limits of x_{2k}/x_{2k-1} and x_{2k+1}/x_{2k}.
struct RatioLimits {
  Rational even_over_odd;
  Rational odd_over_even;
};
// Defined for a, b, c, d; throws std::invalid_argument otherwise.
RatioLimits printed_limits(Sequence s);

struct RatioReport {
  Sequence sequence = Sequence::kA;
  int k = 0;
  Rational even_over_odd;  // x_{2k} / x_{2k-1}
  Rational odd_over_even;  // x_{2k+1} / x_{2k}
  RatioLimits limits;
  double even_error = 0;  // |even_over_odd - limit|
  double odd_error = 0;
};
// Rows for k = 1..k_max.
std::vector<RatioReport> subsequence_ratios(Sequence s, int k_max);

struct TwoStepRatio {
  int n = 0;
  Rational value;  // x_n / x_{n-2}
};
// Rows for n = 3..n_max (x_0 = 0 rules out n = 2).
std::vector<TwoStepRatio> two_step_ratios(Sequence s, int n_max);

struct GrowthEnvelope {
  Sequence sequence = Sequence::kA;
  // x_n / 2^{n/2} for even and odd n >= 10, in increasing n.
  std::vector<std::pair<int, double>> even;
  std::vector<std::pair<int, double>> odd;
  double even_last_step = 0;  // difference of the last two even-n values
  double odd_last_step = 0;
  double min_value = 0;
  double max_value = 0;
  bool bounded(double lo, double hi) const { return min_value >= lo && max_value <= hi; }
};
// Also accepts h3 and h4 as controls. Throws std::invalid_argument if n_max < 10.
GrowthEnvelope growth_envelope(Sequence s, int n_max);

struct ComparisonRow {
  int n = 0;
  BigInt h3, h4, a, b, c, d;
  double sqrt2_pow_n = 0;
};
inline constexpr int kMaxComparisonN = 2000;  // sqrt(2)^n stays finite as a double
// Throws OverflowError when n_max > kMaxComparisonN.
std::vector<ComparisonRow> comparison_table(int n_max);
// Columns n,h3,h4,a,b,c,d,sqrt2_pow_n. With log10, every value column holds
// log10 of the value; zero values are left empty (null in JSON).
std::string comparison_csv(const std::vector<ComparisonRow>& rows, bool log10 = false);
std::string comparison_json(const std::vector<ComparisonRow>& rows, bool log10 = false);

double log10_big(const BigInt& x);

struct BoundsReport {
  int n_max = 0;
  int first_sandwich_failure = -1;  // h4 <= a <= h3
  int first_max_failure = -1;       // max(b, c, d) <= a
  bool non_domination = false;      // d6 > b6 > c6 and c7 > b7 > d7
  bool ok() const { return first_sandwich_failure < 0 && first_max_failure < 0 && non_domination; }
};
BoundsReport comparative_bounds(int n_max);

// min(b, c, d) >= h4 over [from, to]; an empirical statement, not a theorem.
struct EmpiricalFinding {
  int from = 0;
  int to = 0;
  std::vector<int> counterexamples;
  bool holds() const { return counterexamples.empty(); }
};
EmpiricalFinding min_bcd_above_h4(int from, int to);

}  // namespace phanoi::analysis
