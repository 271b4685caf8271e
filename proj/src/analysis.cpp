#include "phanoi/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

#include <json.hpp>

#include "phanoi/errors.hpp"

namespace phanoi::analysis {

namespace {

double to_double(const Rational& q) { return q.convert_to<double>(); }

double abs_diff(const Rational& a, const Rational& b) {
  const Rational d = a - b;
  return std::abs(to_double(d));
}

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string general(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

RatioLimits printed_limits(Sequence s) {
  switch (s) {
    case Sequence::kA: return {Rational(27, 19), Rational(38, 27)};
    case Sequence::kB: return {Rational(38, 27), Rational(27, 19)};
    case Sequence::kC: return {Rational(34, 31), Rational(62, 34)};
    case Sequence::kD: return {Rational(20, 13), Rational(26, 20)};
    default: throw std::invalid_argument("ratio limits exist for a, b, c, d only");
  }
}

std::vector<RatioReport> subsequence_ratios(Sequence s, int k_max) {
  if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
  const RatioLimits lim = printed_limits(s);
  const auto col = sequences::coupled_counts(2 * k_max + 1).column(s);
  std::vector<RatioReport> out;
  for (int k = 1; k <= k_max; ++k) {
    const auto i = static_cast<std::size_t>(2 * k);
    RatioReport r{s, k, Rational(col[i], col[i - 1]), Rational(col[i + 1], col[i]), lim, 0, 0};
    r.even_error = abs_diff(r.even_over_odd, lim.even_over_odd);
    r.odd_error = abs_diff(r.odd_over_even, lim.odd_over_even);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<TwoStepRatio> two_step_ratios(Sequence s, int n_max) {
  if (n_max < 2) throw std::invalid_argument("n_max must be at least 2");
  const auto col = sequences::coupled_counts(n_max).column(s);
  std::vector<TwoStepRatio> out;
  for (int n = 3; n <= n_max; ++n) {
    out.push_back({n, Rational(col[static_cast<std::size_t>(n)], col[static_cast<std::size_t>(n) - 2])});
  }
  return out;
}

GrowthEnvelope growth_envelope(Sequence s, int n_max) {
  if (n_max < 10) throw std::invalid_argument("n_max must be at least 10");
  const auto col = sequences::coupled_counts(n_max).column(s);
  GrowthEnvelope g;
  g.sequence = s;
  g.min_value = std::numeric_limits<double>::infinity();
  g.max_value = 0;
  for (int n = 10; n <= n_max; ++n) {
    // x_n / 2^{floor(n/2)} exactly, then the leftover 1/sqrt(2) for odd n.
    double v = to_double(Rational(col[static_cast<std::size_t>(n)], BigInt(1) << (n / 2)));
    if (n % 2 == 1) v /= std::sqrt(2.0);
    (n % 2 == 0 ? g.even : g.odd).emplace_back(n, v);
    g.min_value = std::min(g.min_value, v);
    g.max_value = std::max(g.max_value, v);
  }
  auto last_step = [](const std::vector<std::pair<int, double>>& v) {
    return v.size() < 2 ? 0.0 : std::abs(v.back().second - v[v.size() - 2].second);
  };
  g.even_last_step = last_step(g.even);
  g.odd_last_step = last_step(g.odd);
  return g;
}

std::vector<ComparisonRow> comparison_table(int n_max) {
  if (n_max > kMaxComparisonN) {
    throw OverflowError("comparison table is limited to n <= " + std::to_string(kMaxComparisonN));
  }
  const auto t = sequences::coupled_counts(n_max);
  std::vector<ComparisonRow> out;
  for (const auto& r : t.rows) out.push_back({r.n, r.h3, r.h4, r.a, r.b, r.c, r.d, std::pow(std::sqrt(2.0), r.n)});
  return out;
}

double log10_big(const BigInt& x) {
  if (x <= 0) return std::numeric_limits<double>::quiet_NaN();
  const auto bits = static_cast<long>(boost::multiprecision::msb(x));
  const long shift = std::max(0L, bits - 60);
  const BigInt head = x >> shift;
  return std::log10(head.convert_to<double>()) + static_cast<double>(shift) * std::log10(2.0);
}

namespace {

std::string cell(const BigInt& v, bool log10) {
  if (!log10) return v.str();
  return v == 0 ? "" : fixed(log10_big(v), 12);
}

std::string sqrt_cell(const ComparisonRow& r, bool log10) {
  return log10 ? fixed(r.n * std::log10(std::sqrt(2.0)), 12) : general(r.sqrt2_pow_n);
}

}  // namespace

std::string comparison_csv(const std::vector<ComparisonRow>& rows, bool log10) {
  std::string out = "n,h3,h4,a,b,c,d,sqrt2_pow_n\n";
  for (const auto& r : rows) {
    out += std::to_string(r.n);
    for (const BigInt* v : {&r.h3, &r.h4, &r.a, &r.b, &r.c, &r.d}) out += "," + cell(*v, log10);
    out += "," + sqrt_cell(r, log10) + "\n";
  }
  return out;
}

std::string comparison_json(const std::vector<ComparisonRow>& rows, bool log10) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : rows) {
    nlohmann::ordered_json j;
    j["n"] = r.n;
    const std::pair<const char*, const BigInt*> cols[] = {{"h3", &r.h3}, {"h4", &r.h4}, {"a", &r.a},
                                                          {"b", &r.b},   {"c", &r.c},   {"d", &r.d}};
    for (const auto& [key, v] : cols) {
      if (!log10) {
        // Exact values as strings once they leave the 64-bit range.
        if (*v <= std::numeric_limits<std::uint64_t>::max()) {
          j[key] = v->convert_to<std::uint64_t>();
        } else {
          j[key] = v->str();
        }
      } else if (*v == 0) {
        j[key] = nullptr;
      } else {
        j[key] = log10_big(*v);
      }
    }
    j["sqrt2_pow_n"] = log10 ? r.n * std::log10(std::sqrt(2.0)) : r.sqrt2_pow_n;
    arr.push_back(std::move(j));
  }
  return arr.dump(2) + "\n";
}

BoundsReport comparative_bounds(int n_max) {
  const auto t = sequences::coupled_counts(std::max(n_max, 7));
  BoundsReport r;
  r.n_max = n_max;
  for (int n = 0; n <= n_max; ++n) {
    const auto& row = t.at(n);
    if (r.first_sandwich_failure < 0 && !(row.h4 <= row.a && row.a <= row.h3)) r.first_sandwich_failure = n;
    if (r.first_max_failure < 0 && std::max({row.b, row.c, row.d}) > row.a) r.first_max_failure = n;
  }
  const auto& r6 = t.at(6);
  const auto& r7 = t.at(7);
  r.non_domination = r6.d > r6.b && r6.b > r6.c && r7.c > r7.b && r7.b > r7.d;
  return r;
}

EmpiricalFinding min_bcd_above_h4(int from, int to) {
  if (from < 0 || to < from) throw std::invalid_argument("bad range");
  const auto t = sequences::coupled_counts(to);
  EmpiricalFinding f{from, to, {}};
  for (int n = from; n <= to; ++n) {
    const auto& row = t.at(n);
    if (std::min({row.b, row.c, row.d}) < row.h4) f.counterexamples.push_back(n);
  }
  return f;
}

}  // namespace phanoi::analysis
