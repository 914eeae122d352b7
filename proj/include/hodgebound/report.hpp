#pragma once

// Record types shared by the verification suites and the CLI: named checks
// with echoed inputs, computed values, a tri-state status, and a residual.

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

namespace hodgebound {

enum class CheckStatus { pass, fail, not_applicable };

inline const char* to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    default: return "not-applicable";
  }
}

using NamedValues = std::vector<std::pair<std::string, double>>;

struct CheckRecord {
  std::string name;
  NamedValues inputs;
  NamedValues values;
  CheckStatus status = CheckStatus::pass;
  double residual = 0.0;
  std::string note;
};

// A residual check: pass iff |residual| <= tol.
inline CheckRecord residual_check(std::string name, NamedValues inputs, double residual,
                                  double tol, NamedValues values = {},
                                  std::string note = {}) {
  CheckRecord r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.values = std::move(values);
  r.residual = residual;
  r.status = std::abs(residual) <= tol ? CheckStatus::pass : CheckStatus::fail;
  r.note = std::move(note);
  return r;
}

// An inequality check lhs <= rhs + tol; residual records the violation
// amount max(lhs - rhs, 0).
inline CheckRecord inequality_check_record(std::string name, NamedValues inputs, double lhs,
                                           double rhs, double tol, std::string note = {}) {
  CheckRecord r;
  r.name = std::move(name);
  r.inputs = std::move(inputs);
  r.values = {{"lhs", lhs}, {"rhs", rhs}};
  r.residual = std::max(lhs - rhs, 0.0);
  r.status = lhs <= rhs + tol ? CheckStatus::pass : CheckStatus::fail;
  r.note = std::move(note);
  return r;
}

struct ReportSummary {
  int pass = 0;
  int fail = 0;
  int not_applicable = 0;
  int total() const { return pass + fail + not_applicable; }
};

inline ReportSummary summarize_records(const std::vector<CheckRecord>& records) {
  ReportSummary s;
  for (const auto& r : records) {
    if (r.status == CheckStatus::pass) ++s.pass;
    else if (r.status == CheckStatus::fail) ++s.fail;
    else ++s.not_applicable;
  }
  return s;
}

}  // namespace hodgebound
