#pragma once

// Exact optimal move counts.
//
// h3 and h4 are the classical three- and four-peg optima. a, b, c, d are the
// optima of the four parity-constrained objectives; they are computed by three
// independent routes (coupled system, higher-order recurrences, closed forms)
// so that each route can be checked against the others.

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace phanoi::sequences {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Largest n any table may be built for.
inline constexpr int kMaxN = 4096;

enum class Sequence { kH3, kH4, kA, kB, kC, kD };
inline constexpr Sequence kParitySequences[] = {Sequence::kA, Sequence::kB, Sequence::kC,
                                                Sequence::kD};
std::string_view name(Sequence s);
Sequence parse_sequence(std::string_view s);

// Which formula produced the a, b, c, d columns. h3 and h4 always come from
// their defining formulas.
enum class Route { kCoupled, kHigherOrder, kClosedForm };
std::string_view name(Route r);

struct CountRow {
  int n = 0;
  BigInt h3, h4, a, b, c, d;

  const BigInt& get(Sequence s) const;
};

struct CountTable {
  int max_n = 0;
  Route route = Route::kCoupled;
  std::vector<CountRow> rows;  // rows[n].n == n

  const CountRow& at(int n) const { return rows.at(static_cast<std::size_t>(n)); }
  // Column as a vector indexed by n.
  std::vector<BigInt> column(Sequence s) const;
};

// 2^n - 1.
BigInt h3(int n);
// Frame-Stewart: h4(0) = 0, h4(n) = min_{0<=k<n} 2 h4(k) + h3(n-k).
BigInt h4(int n);
std::vector<BigInt> h4_values(int max_n);

// a_n = 2 b_{n-1} + 1 and the parity-split relations for b, c, d, with
// a_0..d_0 = 0 and a_1..d_1 = 1. For even n: b uses c_{n-1}, c uses b_{n-1},
// d uses b_{n-2}; for odd n: b uses d_{n-1}, c uses b_{n-2}, d uses b_{n-1}.
CountTable coupled_counts(int max_n);

// Seed sets for the higher-order recurrences. The as-printed set carries
// a_3 = 4, which contradicts a_3 = 2 b_2 + 1 = 5.
enum class SeedSet { kTableConsistent, kAsPrinted };
CountTable higher_order_counts(int max_n, SeedSet seeds = SeedSet::kTableConsistent);

// Reading of the exponent in the closed forms. kAsPrinted takes
// 2^{-3 floor((t-1)/2) + 1} literally; kGrouped uses 2^{-3 (floor((t-1)/2) + 1)}.
enum class ClosedFormReading { kGrouped, kAsPrinted };

struct TriadicSplit {
  int rho = 0;    // n mod 3 (mathematical, non-negative)
  int theta = 0;  // (n - rho) / 3
};
TriadicSplit triadic_split(int n);

// Value of the closed form for one of a, b, c, d. May be non-integral under
// the as-printed reading.
Rational closed_form_value(Sequence s, int n, ClosedFormReading reading = ClosedFormReading::kGrouped);
// Throws NonIntegralClosedForm naming the first failing (sequence, parity, n).
CountTable closed_form_counts(int max_n, ClosedFormReading reading = ClosedFormReading::kGrouped);

struct Discrepancy {
  Sequence sequence = Sequence::kA;
  int n = 0;
  std::string expected;  // reference value
  std::string actual;    // value produced by the compared route (may be a fraction)

  std::string describe() const;
};

// First row/column where `other` differs from `reference` on a, b, c, d.
std::optional<Discrepancy> first_discrepancy(const CountTable& reference, const CountTable& other);
// First n where a closed form under `reading` differs from the coupled values,
// including non-integral results.
std::optional<Discrepancy> first_closed_form_discrepancy(int max_n, ClosedFormReading reading);

std::string to_csv(const CountTable& t);
std::string to_json(const CountTable& t);

}  // namespace phanoi::sequences
