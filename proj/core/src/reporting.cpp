#include "markovcat/reporting.hpp"

#include "markovcat/version.hpp"

namespace markovcat::reporting {

nlohmann::ordered_json emit_report(const SuiteReport& report) {
  nlohmann::ordered_json cases = nlohmann::ordered_json::array();
  for (const auto& c : report.cases) {
    nlohmann::ordered_json item;
    item["name"] = c.name;
    item["passed"] = c.report.passed;
    if (c.report.witness) item["witness"] = *c.report.witness;
    item["detail"] = c.report.detail;
    cases.push_back(std::move(item));
  }
  nlohmann::ordered_json out;
  out["suite"] = report.suite;
  out["passed"] = report.passed();
  out["cases"] = std::move(cases);
  out["seed"] = report.seed;
  out["versions"] = {{"markovcat", kVersion}, {"report", kReportSchemaVersion}};
  return out;
}

std::string render_report(const SuiteReport& report) {
  return emit_report(report).dump(2) + "\n";
}

}  // namespace markovcat::reporting
