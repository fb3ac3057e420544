#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace markovcat {

/// Structured outcome of a law or lemma check. A failing report always
/// carries a witness describing the offending input or morphism.
struct CheckReport {
  bool passed = true;
  std::optional<bool> precondition_holds;
  std::optional<bool> hypothesis_holds;
  std::optional<bool> conclusion_holds;
  std::optional<std::string> witness;
  std::string detail;

  static CheckReport pass(std::string detail = "") {
    CheckReport r;
    r.passed = true;
    r.detail = std::move(detail);
    return r;
  }

  static CheckReport fail(std::string witness, std::string detail = "") {
    CheckReport r;
    r.passed = false;
    r.witness = std::move(witness);
    r.detail = std::move(detail);
    return r;
  }

  /// Merge sub-checks into one report; the first failure provides the witness.
  static CheckReport all(const std::vector<std::pair<std::string, CheckReport>>& parts) {
    CheckReport r;
    r.passed = true;
    std::string detail;
    for (const auto& [name, part] : parts) {
      if (!detail.empty()) detail += "; ";
      detail += name + (part.passed ? ": ok" : ": FAILED");
      if (!part.detail.empty()) detail += " (" + part.detail + ")";
      if (!part.passed && r.passed) {
        r.passed = false;
        r.witness = part.witness.value_or(name);
      }
    }
    r.detail = std::move(detail);
    return r;
  }
};

}  // namespace markovcat
