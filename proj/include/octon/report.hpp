#pragma once

// Structured pass/fail records for the verification suites.  Reports are
// deterministic given the seed; entries are sorted by check id and carry a
// stable anchor id, the worst residual, the tolerance, and a counterexample
// payload on failure.  JSON output is newline-delimited (one object per
// check) behind a versioned header line.

#include <algorithm>
#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

namespace octon {

inline constexpr const char* kReportSchemaVersion = "1";
inline constexpr const char* kLibraryVersion = "0.1.0";

struct CheckResult {
  std::string id;           // stable anchor, e.g. "algebra/associativity"
  std::string description;  // what was checked
  bool passed = false;
  double max_residual = 0.0;
  double tolerance = 0.0;
  std::string note;               // flagged listing mismatches and similar
  nlohmann::json counterexample;  // payload for failures

  static CheckResult pass(std::string id, std::string description, double residual,
                          double tolerance, std::string note = {}) {
    return {std::move(id), std::move(description), true, residual, tolerance, std::move(note), {}};
  }

  static CheckResult fail(std::string id, std::string description, double residual,
                          double tolerance, nlohmann::json counterexample = {},
                          std::string note = {}) {
    return {std::move(id),       std::move(description),    false, residual,
            tolerance,           std::move(note),           std::move(counterexample)};
  }
};

struct VerificationReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }

  void merge(const VerificationReport& other) {
    checks.insert(checks.end(), other.checks.begin(), other.checks.end());
  }

  void sort_by_id() {
    std::stable_sort(checks.begin(), checks.end(),
                     [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  }

  int passed_count() const {
    int n = 0;
    for (const auto& c : checks) n += c.passed ? 1 : 0;
    return n;
  }

  int failed_count() const { return static_cast<int>(checks.size()) - passed_count(); }

  bool all_passed() const { return failed_count() == 0; }
};

inline std::string toolchain_fingerprint() {
  std::string s = "c++";
#if defined(__VERSION__)
  s += " (" __VERSION__ ")";
#endif
  return s;
}

inline void write_ndjson(const VerificationReport& report, std::ostream& os) {
  nlohmann::json header = {
      {"schema", kReportSchemaVersion},
      {"kind", "verification-report"},
      {"suite", report.suite},
      {"seed", report.seed},
      {"toolchain", toolchain_fingerprint()},
      {"library", kLibraryVersion},
  };
  os << header.dump() << '\n';
  for (const auto& c : report.checks) {
    nlohmann::json row = {
        {"id", c.id},
        {"description", c.description},
        {"status", c.passed ? "pass" : "fail"},
        {"max_residual", c.max_residual},
        {"tolerance", c.tolerance},
    };
    if (!c.note.empty()) row["note"] = c.note;
    if (!c.counterexample.is_null()) row["counterexample"] = c.counterexample;
    os << row.dump() << '\n';
  }
  nlohmann::json summary = {
      {"summary", true},
      {"total", report.checks.size()},
      {"passed", report.passed_count()},
      {"failed", report.failed_count()},
  };
  os << summary.dump() << '\n';
}

inline void write_csv(const VerificationReport& report, std::ostream& os) {
  os << "id,status,max_residual,tolerance,description\n";
  auto quote = [](const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
      if (c == '"') out += "\"\"";
      else out += c;
    }
    out += '"';
    return out;
  };
  for (const auto& c : report.checks) {
    os << c.id << ',' << (c.passed ? "pass" : "fail") << ',' << c.max_residual << ','
       << c.tolerance << ',' << quote(c.description) << '\n';
  }
}

}  // namespace octon
