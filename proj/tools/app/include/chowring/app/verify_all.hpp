#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace chowring::app {

struct CheckOutcome {
  bool passed = false;
  std::optional<int> degree_bound;
  nlohmann::json detail;
};

struct CheckDefinition {
  std::string name;
  /// Acceptance criterion number, 1..9.
  int criterion = 0;
  /// Informational checks record a verdict but never fail the suite.
  bool informational = false;
  std::function<CheckOutcome()> run;
};

struct CheckResult {
  std::string name;
  int criterion = 0;
  bool informational = false;
  CheckOutcome outcome;
  double seconds = 0.0;

  /// An informational check counts as passing once it ran.
  bool ok() const { return informational || outcome.passed; }
};

struct VerifyAllReport {
  std::vector<CheckResult> checks;
  bool passed() const;
};

/// Every acceptance check, sorted by name.
std::vector<CheckDefinition> acceptance_checks();

/// Per-criterion wall-clock limits in seconds.
double criterion_time_limit(int criterion);

CheckResult run_check(const CheckDefinition& def);
VerifyAllReport verify_all();

nlohmann::json report_to_json(const VerifyAllReport& report, bool include_timings);
std::string report_to_text(const VerifyAllReport& report, bool include_timings);
std::string report_to_latex(const VerifyAllReport& report);

}  // namespace chowring::app
