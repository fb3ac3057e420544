#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

#include "markovcat/reporting.hpp"

namespace markovcat::script {

/// Raised for malformed script documents: JSON syntax errors (reported with
/// line and column), schema violations, and unresolved names. These map to
/// the usage/parse exit code; value-level loader failures (for example a
/// stochastic row that does not sum to 1) surface as failing report cases
/// instead.
class ScriptError : public std::runtime_error {
 public:
  explicit ScriptError(const std::string& message) : std::runtime_error(message) {}
};

/// A parsed and name-resolved check script. The document format is JSON:
///
///   {"instance": "finstoch" | "setmulti" | "cringplus" | "vietoris",
///    "objects":   {name: object payload, ...},
///    "morphisms": {name: morphism payload, ...},
///    "terms":     {name: term, ...},
///    "checks":    [directive, ...]}
///
/// Terms use the tags id, gen, seq, par, swap, copy, discard:
///   {"op": "id", "object": name}
///   {"op": "gen", "name": name}
///   {"op": "seq", "first": term, "second": term}
///   {"op": "par", "left": term, "right": term}
///   {"op": "swap", "left": name, "right": name}
///   {"op": "copy", "object": name} / {"op": "discard", "object": name}
class Script {
 public:
  /// Parses and validates; throws ScriptError with a line/column diagnostic
  /// on syntax errors and a path diagnostic on schema or name errors.
  static Script parse(const std::string& text);
  static Script from_json(nlohmann::json document);

  const std::string& instance() const { return instance_; }
  const nlohmann::json& document() const { return document_; }

  /// Canonical re-emission; parsing the output yields an equal script.
  std::string emit() const { return document_.dump(2) + "\n"; }

  bool operator==(const Script& other) const { return document_ == other.document_; }
  bool operator!=(const Script& other) const { return !(*this == other); }

 private:
  Script(std::string instance, nlohmann::json document)
      : instance_(std::move(instance)), document_(std::move(document)) {}
  std::string instance_;
  nlohmann::json document_;
};

struct RunOptions {
  std::uint64_t seed = 0;
  std::size_t depth = 4;
  unsigned shards = 1;
  unsigned cring_degree = 12;  // extensional equality bound for cringplus
};

struct RunOutcome {
  reporting::SuiteReport report;
  int exit_code = 0;  // 0 iff every directive passed
};

/// Executes the directives in order and aggregates their reports. Loader
/// failures (invalid morphism payloads) become failing cases rather than
/// exceptions.
RunOutcome run_checks(const Script& script, const RunOptions& options = {});

}  // namespace markovcat::script
