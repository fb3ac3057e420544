#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "markovcat/check_report.hpp"

namespace markovcat::reporting {

struct CaseResult {
  std::string name;
  CheckReport report;
};

struct SuiteReport {
  std::string suite;
  std::vector<CaseResult> cases;
  std::uint64_t seed = 0;

  bool passed() const {
    for (const auto& c : cases) {
      if (!c.report.passed) return false;
    }
    return true;
  }

  void add(std::string name, CheckReport report) {
    cases.push_back(CaseResult{std::move(name), std::move(report)});
  }
};

/// Stable report schema:
///   {"suite": ..., "passed": ..., "cases": [{"name", "passed",
///    "witness"?, "detail"}, ...], "seed": ..., "versions": {...}}
/// Field order is fixed, so serializations are byte-identical for identical
/// inputs.
nlohmann::ordered_json emit_report(const SuiteReport& report);

/// emit_report rendered with two-space indentation and a trailing newline.
std::string render_report(const SuiteReport& report);

}  // namespace markovcat::reporting
