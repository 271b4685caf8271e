#include "phanoi/sequences.hpp"

#include <sstream>
#include <stdexcept>

#include "phanoi/errors.hpp"

namespace phanoi::sequences {

namespace {

void check_range(int max_n) {
  if (max_n < 0) throw std::invalid_argument("n must be non-negative");
  if (max_n > kMaxN) {
    throw OverflowError("n = " + std::to_string(max_n) + " exceeds the supported maximum " +
                        std::to_string(kMaxN));
  }
}

BigInt pow2(int e) { return BigInt(1) << e; }

// 2^e for any integer e.
Rational pow2_rational(int e) {
  if (e >= 0) return Rational(pow2(e));
  return Rational(BigInt(1), pow2(-e));
}

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

int floor_mod(int a, int b) { return a - b * floor_div(a, b); }

CountTable empty_table(int max_n, Route route) {
  CountTable t;
  t.max_n = max_n;
  t.route = route;
  t.rows.resize(static_cast<std::size_t>(max_n) + 1);
  const auto h4s = h4_values(max_n);
  for (int n = 0; n <= max_n; ++n) {
    auto& r = t.rows[static_cast<std::size_t>(n)];
    r.n = n;
    r.h3 = h3(n);
    r.h4 = h4s[static_cast<std::size_t>(n)];
  }
  return t;
}

const char* parity_name(int n) { return n % 2 == 0 ? "even" : "odd"; }

std::string rational_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

}  // namespace

std::string_view name(Sequence s) {
  switch (s) {
    case Sequence::kH3: return "h3";
    case Sequence::kH4: return "h4";
    case Sequence::kA: return "a";
    case Sequence::kB: return "b";
    case Sequence::kC: return "c";
    case Sequence::kD: return "d";
  }
  return "?";
}

Sequence parse_sequence(std::string_view s) {
  for (auto seq : {Sequence::kH3, Sequence::kH4, Sequence::kA, Sequence::kB, Sequence::kC, Sequence::kD}) {
    if (name(seq) == s) return seq;
  }
  throw std::invalid_argument("unknown sequence '" + std::string(s) + "'");
}

std::string_view name(Route r) {
  switch (r) {
    case Route::kCoupled: return "coupled";
    case Route::kHigherOrder: return "higher_order";
    case Route::kClosedForm: return "closed_form";
  }
  return "?";
}

const BigInt& CountRow::get(Sequence s) const {
  switch (s) {
    case Sequence::kH3: return h3;
    case Sequence::kH4: return h4;
    case Sequence::kA: return a;
    case Sequence::kB: return b;
    case Sequence::kC: return c;
    case Sequence::kD: return d;
  }
  return a;
}

std::vector<BigInt> CountTable::column(Sequence s) const {
  std::vector<BigInt> out;
  out.reserve(rows.size());
  for (const auto& r : rows) out.push_back(r.get(s));
  return out;
}

BigInt h3(int n) {
  check_range(n);
  return pow2(n) - 1;
}

std::vector<BigInt> h4_values(int max_n) {
  check_range(max_n);
  std::vector<BigInt> h(static_cast<std::size_t>(max_n) + 1);
  std::vector<BigInt> three(static_cast<std::size_t>(max_n) + 1);
  for (int m = 0; m <= max_n; ++m) three[static_cast<std::size_t>(m)] = pow2(m) - 1;
  for (int n = 1; n <= max_n; ++n) {
    BigInt best = 2 * h[0] + three[static_cast<std::size_t>(n)];
    for (int k = 1; k < n; ++k) {
      BigInt v = 2 * h[static_cast<std::size_t>(k)] + three[static_cast<std::size_t>(n - k)];
      if (v < best) best = std::move(v);
    }
    h[static_cast<std::size_t>(n)] = std::move(best);
  }
  return h;
}

BigInt h4(int n) { return h4_values(n).back(); }

CountTable coupled_counts(int max_n) {
  check_range(max_n);
  CountTable t = empty_table(max_n, Route::kCoupled);
  auto row = [&t](int n) -> CountRow& { return t.rows[static_cast<std::size_t>(n)]; };
  for (int n = 1; n <= max_n; ++n) {
    auto& r = row(n);
    if (n == 1) {
      r.a = r.b = r.c = r.d = 1;
      continue;
    }
    const BigInt t1 = h3((n - 1) / 2);
    const BigInt t2 = h3((n - 2) / 2);
    r.a = 2 * row(n - 1).b + 1;
    if (n % 2 == 0) {
      r.b = row(n - 1).c + t1 + 1;
      r.c = row(n - 1).b + t1 + 1;
      r.d = row(n - 2).b + 3 * t2 + 2;
    } else {
      r.b = row(n - 1).d + t1 + 1;
      r.c = row(n - 2).b + 2 * t1 + t2 + 2;
      r.d = row(n - 1).b + t1 + 1;
    }
  }
  return t;
}

CountTable higher_order_counts(int max_n, SeedSet seeds) {
  check_range(max_n);
  CountTable t = empty_table(max_n, Route::kHigherOrder);
  std::vector<BigInt> a = {0, 1, 3, seeds == SeedSet::kAsPrinted ? 4 : 5};
  std::vector<BigInt> b = {0, 1, 2};
  std::vector<BigInt> c = {0, 1, 2, 5, 6, 13};
  std::vector<BigInt> d = {0, 1, 2, 4, 7, 11};
  for (int n = static_cast<int>(a.size()); n <= max_n; ++n) {
    const auto& prev = a[static_cast<std::size_t>(n - 3)];
    a.push_back(n % 2 == 0 ? prev + 5 * pow2((n - 2) / 2) - 2 : prev + 7 * pow2((n - 3) / 2) - 2);
  }
  for (int n = static_cast<int>(b.size()); n <= max_n; ++n) {
    const auto& prev = b[static_cast<std::size_t>(n - 3)];
    b.push_back(n % 2 == 0 ? prev + 7 * pow2((n - 4) / 2) - 1 : prev + 5 * pow2((n - 3) / 2) - 1);
  }
  for (int n = static_cast<int>(c.size()); n <= max_n; ++n) {
    c.push_back(n % 2 == 0 ? c[static_cast<std::size_t>(n - 5)] + 15 * pow2((n - 6) / 2) - 1
                           : c[static_cast<std::size_t>(n - 6)] + 31 * pow2((n - 7) / 2) - 2);
  }
  for (int n = static_cast<int>(d.size()); n <= max_n; ++n) {
    d.push_back(n % 2 == 0 ? d[static_cast<std::size_t>(n - 6)] + 5 * pow2((n - 2) / 2) - 2
                           : d[static_cast<std::size_t>(n - 5)] + 3 * pow2((n - 1) / 2) - 1);
  }
  for (int n = 0; n <= max_n; ++n) {
    auto& r = t.rows[static_cast<std::size_t>(n)];
    const auto i = static_cast<std::size_t>(n);
    r.a = a[i];
    r.b = b[i];
    r.c = c[i];
    r.d = d[i];
  }
  return t;
}

TriadicSplit triadic_split(int n) {
  const int rho = floor_mod(n, 3);
  return {rho, (n - rho) / 3};
}

Rational closed_form_value(Sequence s, int n, ClosedFormReading reading) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  // a_rho seeds for rho in {0,1,2}.
  static const int kSeed[3] = {0, 1, 3};
  auto decay = [](int theta) { return pow2_rational(-3 * floor_div(theta, 2)); };
  auto decay_shifted = [reading](int theta) {
    const int f = floor_div(theta - 1, 2);
    return reading == ClosedFormReading::kGrouped ? pow2_rational(-3 * (f + 1)) : pow2_rational(-3 * f + 1);
  };
  auto base = [](int m) {  // (a_rho(m) - 1)/2 - theta(m)
    const auto sp = triadic_split(m);
    return Rational(kSeed[sp.rho] - 1, 2) - sp.theta;
  };
  const Rational five_sevenths(5, 7);
  const Rational twenty_sevenths(20, 7);
  const bool even = n % 2 == 0;

  switch (s) {
    case Sequence::kA: {
      const auto sp = triadic_split(n);
      const Rational head = Rational(kSeed[sp.rho]) - 2 * sp.theta;
      if (even) {
        return head + pow2_rational(n / 2) *
                          ((1 - decay(sp.theta)) + twenty_sevenths * (1 - decay_shifted(sp.theta)));
      }
      return head + pow2_rational((n + 1) / 2) *
                        (five_sevenths * (1 - decay(sp.theta)) + 2 * (1 - decay_shifted(sp.theta)));
    }
    case Sequence::kB: {
      const int theta = triadic_split(n + 1).theta;
      if (even) {
        return base(n + 1) + pow2_rational(n / 2) *
                                 (five_sevenths * (1 - decay(theta)) + 2 * (1 - decay_shifted(theta)));
      }
      return base(n + 1) + pow2_rational((n - 1) / 2) *
                               ((1 - decay(theta)) + twenty_sevenths * (1 - decay_shifted(theta)));
    }
    case Sequence::kC: {
      if (even) {
        const int theta = triadic_split(n).theta;
        return base(n) + pow2_rational(floor_div(n - 2, 2)) *
                             (2 - decay(theta) + twenty_sevenths * (1 - decay_shifted(theta)));
      }
      const int theta = triadic_split(n - 1).theta;
      return base(n - 1) +
             pow2_rational(floor_div(n - 3, 2)) *
                 (6 - decay(theta) + twenty_sevenths * (1 - decay_shifted(theta))) -
             1;
    }
    case Sequence::kD: {
      if (even) {
        const int theta = triadic_split(n - 1).theta;
        return base(n - 1) +
               pow2_rational(floor_div(n - 2, 2)) *
                   (five_sevenths * (1 - decay(theta)) + 2 * (1 - decay_shifted(theta)) + 3) -
               1;
      }
      const int theta = triadic_split(n).theta;
      return base(n) + pow2_rational((n - 1) / 2) *
                           (five_sevenths * (1 - decay(theta)) + 2 * (1 - decay_shifted(theta)) + 1);
    }
    default:
      throw std::invalid_argument("closed forms exist only for a, b, c, d");
  }
}

CountTable closed_form_counts(int max_n, ClosedFormReading reading) {
  check_range(max_n);
  CountTable t = empty_table(max_n, Route::kClosedForm);
  for (int n = 0; n <= max_n; ++n) {
    auto& r = t.rows[static_cast<std::size_t>(n)];
    for (Sequence s : kParitySequences) {
      const Rational q = closed_form_value(s, n, reading);
      if (denominator(q) != 1) {
        throw NonIntegralClosedForm("closed form for " + std::string(name(s)) + " (" + parity_name(n) +
                                    " n) is not an integer at n = " + std::to_string(n) + ": " +
                                    rational_string(q));
      }
      const BigInt v = numerator(q);
      switch (s) {
        case Sequence::kA: r.a = v; break;
        case Sequence::kB: r.b = v; break;
        case Sequence::kC: r.c = v; break;
        case Sequence::kD: r.d = v; break;
        default: break;
      }
    }
  }
  return t;
}

std::string Discrepancy::describe() const {
  return std::string(name(sequence)) + " (" + parity_name(n) + " n) at n = " + std::to_string(n) +
         ": expected " + expected + ", got " + actual;
}

std::optional<Discrepancy> first_discrepancy(const CountTable& reference, const CountTable& other) {
  const int max_n = std::min(reference.max_n, other.max_n);
  for (int n = 0; n <= max_n; ++n) {
    for (Sequence s : kParitySequences) {
      const auto& want = reference.at(n).get(s);
      const auto& got = other.at(n).get(s);
      if (want != got) return Discrepancy{s, n, want.str(), got.str()};
    }
  }
  return std::nullopt;
}

std::optional<Discrepancy> first_closed_form_discrepancy(int max_n, ClosedFormReading reading) {
  const CountTable ref = coupled_counts(max_n);
  for (int n = 0; n <= max_n; ++n) {
    for (Sequence s : kParitySequences) {
      const Rational q = closed_form_value(s, n, reading);
      const auto& want = ref.at(n).get(s);
      if (q != Rational(want)) return Discrepancy{s, n, want.str(), rational_string(q)};
    }
  }
  return std::nullopt;
}

std::string to_csv(const CountTable& t) {
  std::ostringstream os;
  os << "n,h3,h4,a,b,c,d\n";
  for (const auto& r : t.rows) {
    os << r.n << ',' << r.h3 << ',' << r.h4 << ',' << r.a << ',' << r.b << ',' << r.c << ',' << r.d << '\n';
  }
  return os.str();
}

// Values are written as bare JSON numbers of arbitrary length.
std::string to_json(const CountTable& t) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const auto& r = t.rows[i];
    if (i) os << ',';
    os << "\n  {\"n\": " << r.n << ", \"h3\": " << r.h3 << ", \"h4\": " << r.h4 << ", \"a\": " << r.a
       << ", \"b\": " << r.b << ", \"c\": " << r.c << ", \"d\": " << r.d << '}';
  }
  os << "\n]\n";
  return os.str();
}

}  // namespace phanoi::sequences
