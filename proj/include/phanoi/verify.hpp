#pragma once

// Invariant suites run by `verify`. A check row is a property the library
// asserts; a finding row reports a stated property that is measured
// rather than asserted, and never affects the exit status.

#include <string>
#include <string_view>
#include <vector>

#include "phanoi/solver.hpp"

namespace phanoi::verify {

enum class Suite { kSequences, kSolver, kGraph, kAnalysis, kAll };
Suite parse_suite(std::string_view s);
std::string_view name(Suite s);

enum class RowKind { kCheck, kFinding };

struct Row {
  std::string suite;
  std::string name;
  RowKind kind = RowKind::kCheck;
  bool passed = false;
  std::string detail;
};

struct Report {
  std::vector<Row> rows;

  bool ok() const;
  const Row* first_failure() const;  // first failing check row
};

struct Options {
  int n_max = 10;
  int oracle_cap = solver::kDefaultOracleCap;
};

Report run(Suite suite, const Options& opt);

std::string to_text(const Report& r);
std::string to_json(const Report& r);

}  // namespace phanoi::verify
