#include "markovcat/script.hpp"

#include <functional>
#include <map>
#include <set>
#include <vector>

#include "markovcat/cringplus.hpp"
#include "markovcat/diagram.hpp"
#include "markovcat/finstoch.hpp"
#include "markovcat/kernel.hpp"
#include "markovcat/projective.hpp"
#include "markovcat/setmulti.hpp"
#include "markovcat/vietoris.hpp"

namespace markovcat::script {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw ScriptError(path + ": " + message);
}

const json& field(const json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    fail(path, std::string("missing field '") + key + "'");
  }
  return j.at(key);
}

std::string str_field(const json& j, const char* key, const std::string& path) {
  const json& v = field(j, key, path);
  if (!v.is_string()) fail(path + "." + key, "expected a string");
  return v.get<std::string>();
}

// ---------------------------------------------------------------------------
// Parse-time validation: shape and name resolution.

struct NameTables {
  std::set<std::string> objects, morphisms, terms;
};

void require_name(const std::set<std::string>& table, const std::string& name,
                  const char* kind, const std::string& path) {
  if (!table.count(name)) {
    fail(path, std::string("unresolved ") + kind + " '" + name + "'");
  }
}

void scan_term(const json& t, const NameTables& names, const std::string& path) {
  if (t.is_string()) {
    require_name(names.terms, t.get<std::string>(), "term", path);
    return;
  }
  const std::string op = str_field(t, "op", path);
  if (op == "id" || op == "copy" || op == "discard") {
    require_name(names.objects, str_field(t, "object", path), "object", path + ".object");
  } else if (op == "gen") {
    require_name(names.morphisms, str_field(t, "name", path), "generator", path + ".name");
  } else if (op == "seq") {
    scan_term(field(t, "first", path), names, path + ".first");
    scan_term(field(t, "second", path), names, path + ".second");
  } else if (op == "par") {
    scan_term(field(t, "left", path), names, path + ".left");
    scan_term(field(t, "right", path), names, path + ".right");
  } else if (op == "swap") {
    require_name(names.objects, str_field(t, "left", path), "object", path + ".left");
    require_name(names.objects, str_field(t, "right", path), "object", path + ".right");
  } else {
    fail(path, "unknown term tag '" + op + "'");
  }
}

void scan_split(const json& s, const NameTables& names, const std::string& path) {
  if (!s.is_array()) fail(path, "expected an array of object names");
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!s[i].is_string()) fail(path, "expected object names");
    require_name(names.objects, s[i].get<std::string>(), "object",
                 path + "[" + std::to_string(i) + "]");
  }
}

void scan_positions(const json& s, const std::string& path) {
  if (!s.is_array()) fail(path, "expected an array of indices");
  for (const auto& v : s) {
    if (!v.is_number_unsigned()) fail(path, "expected nonnegative indices");
  }
}

void scan_injection(const json& j, const std::string& path) {
  const std::string kind = str_field(j, "kind", path);
  if (kind == "identity") return;
  if (kind == "transposition") {
    field(j, "i", path);
    field(j, "j", path);
  } else if (kind == "stride") {
    field(j, "stride", path);
    field(j, "offset", path);
  } else if (kind == "shift") {
    field(j, "k", path);
  } else if (kind == "permutation") {
    scan_positions(field(j, "image", path), path + ".image");
  } else {
    fail(path, "unknown injection kind '" + kind + "'");
  }
}

void scan_family(const json& f, const NameTables& names, const std::string& path) {
  const std::string kind = str_field(f, "kind", path);
  if (kind == "iid") {
    require_name(names.morphisms, str_field(f, "q", path), "morphism", path + ".q");
    str_field(f, "prefix", path);
  } else if (kind == "product") {
    scan_family(field(f, "left", path), names, path + ".left");
    scan_family(field(f, "right", path), names, path + ".right");
  } else if (kind == "regroup") {
    const json& parts = field(f, "parts", path);
    if (!parts.is_array() || parts.empty()) fail(path + ".parts", "expected families");
    for (std::size_t i = 0; i < parts.size(); ++i) {
      scan_family(parts[i], names, path + ".parts[" + std::to_string(i) + "]");
    }
  } else if (kind == "override") {
    scan_family(field(f, "base", path), names, path + ".base");
    field(f, "labels", path);
    require_name(names.morphisms, str_field(f, "morphism", path), "morphism",
                 path + ".morphism");
  } else if (kind == "table") {
    require_name(names.objects, str_field(f, "domain", path), "object", path + ".domain");
    const json& factors = field(f, "factors", path);
    if (!factors.is_object() || factors.empty()) fail(path + ".factors", "expected labels");
    for (const auto& [label, object] : factors.items()) {
      (void)label;
      if (!object.is_string()) fail(path + ".factors", "expected object names");
      require_name(names.objects, object.get<std::string>(), "object", path + ".factors");
    }
    const json& assign = field(f, "assign", path);
    if (!assign.is_object()) fail(path + ".assign", "expected a window table");
    for (const auto& [window, morphism] : assign.items()) {
      (void)window;
      if (!morphism.is_string()) fail(path + ".assign", "expected morphism names");
      require_name(names.morphisms, morphism.get<std::string>(), "morphism",
                   path + ".assign");
    }
  } else {
    fail(path, "unknown family kind '" + kind + "'");
  }
}

void scan_directive(const json& d, const NameTables& names, const std::string& path) {
  const std::string kind = str_field(d, "check", path);
  auto morph = [&](const char* key) {
    require_name(names.morphisms, str_field(d, key, path), "morphism",
                 path + "." + key);
  };
  auto object = [&](const char* key) {
    require_name(names.objects, str_field(d, key, path), "object", path + "." + key);
  };
  if (kind == "comonoid") {
    object("object");
  } else if (kind == "multiplicativity") {
    object("left");
    object("right");
  } else if (kind == "deterministic") {
    morph("morphism");
    field(d, "expect", path);
  } else if (kind == "as-equal") {
    morph("p");
    morph("f");
    morph("g");
    field(d, "expect", path);
  } else if (kind == "displays-ci") {
    morph("morphism");
    scan_split(field(d, "split", path), names, path + ".split");
    field(d, "expect", path);
  } else if (kind == "typecheck") {
    scan_term(field(d, "term", path), names, path + ".term");
    object("dom");
    object("cod");
  } else if (kind == "evaluate") {
    scan_term(field(d, "term", path), names, path + ".term");
    morph("expect");
  } else if (kind == "marginalize") {
    morph("morphism");
    scan_split(field(d, "split", path), names, path + ".split");
    scan_positions(field(d, "keep", path), path + ".keep");
    morph("expect");
  } else if (kind == "causality") {
    morph("f");
    morph("g");
    morph("h1");
    morph("h2");
  } else if (kind == "axioms") {
    // exercises every object in the table; nothing to resolve here
  } else if (kind == "noncausality-cring") {
    // builtin quadruple; optional degree
  } else if (kind == "witness-setmulti") {
    // optional n / upto
  } else if (kind == "compatibility") {
    scan_family(field(d, "family", path), names, path + ".family");
  } else if (kind == "infindep") {
    scan_family(field(d, "family", path), names, path + ".family");
  } else if (kind == "determinism-lemma") {
    morph("p");
    morph("s");
  } else if (kind == "kolmogorov-finite") {
    morph("p");
    scan_split(field(d, "split", path), names, path + ".split");
    const json& s = field(d, "statistic", path);
    scan_positions(field(s, "positions", path + ".statistic"), path + ".statistic.positions");
    require_name(names.morphisms, str_field(s, "map", path + ".statistic"), "morphism",
                 path + ".statistic.map");
  } else if (kind == "hs-splitting") {
    scan_family(field(d, "family", path), names, path + ".family");
    scan_injection(field(d, "tau1", path), path + ".tau1");
    scan_injection(field(d, "tau2", path), path + ".tau2");
    scan_positions(field(d, "f1", path), path + ".f1");
    scan_positions(field(d, "f2", path), path + ".f2");
  } else if (kind == "aseq-lemma") {
    morph("p");
    morph("f");
    morph("g");
  } else if (kind == "marginalization-determinism") {
    scan_split(field(d, "split", path), names, path + ".split");
    field(d, "keep", path);
  } else {
    fail(path, "unknown check kind '" + kind + "'");
  }
}

/// Morphism payloads may name objects from the objects table in their dom
/// and cod fields instead of embedding the payload.
void scan_morphism_payload(const json& payload, const NameTables& names,
                           const std::string& path) {
  if (!payload.is_object()) return;
  for (const char* key : {"dom", "cod"}) {
    if (payload.contains(key) && payload.at(key).is_string()) {
      require_name(names.objects, payload.at(key).get<std::string>(), "object",
                   path + "." + key);
    }
  }
}

NameTables collect_names(const json& doc) {
  NameTables names;
  for (const char* table : {"objects", "morphisms", "terms"}) {
    if (!doc.contains(table)) continue;
    if (!doc.at(table).is_object()) fail(table, "expected a name table");
    for (const auto& [name, value] : doc.at(table).items()) {
      (void)value;
      if (table[0] == 'o') names.objects.insert(name);
      if (table[0] == 'm') names.morphisms.insert(name);
      if (table[0] == 't') names.terms.insert(name);
    }
  }
  return names;
}

void validate_document(const json& doc) {
  if (!doc.is_object()) fail("$", "script must be a JSON object");
  const std::string instance = str_field(doc, "instance", "$");
  if (instance != "finstoch" && instance != "setmulti" && instance != "cringplus" &&
      instance != "vietoris") {
    fail("$.instance", "unknown instance '" + instance + "'");
  }
  const NameTables names = collect_names(doc);
  if (doc.contains("morphisms")) {
    for (const auto& [name, payload] : doc.at("morphisms").items()) {
      scan_morphism_payload(payload, names, "morphisms." + name);
    }
  }
  if (doc.contains("terms")) {
    for (const auto& [name, term] : doc.at("terms").items()) {
      scan_term(term, names, "terms." + name);
    }
  }
  if (doc.contains("checks")) {
    const json& checks = doc.at("checks");
    if (!checks.is_array()) fail("$.checks", "expected an array of directives");
    for (std::size_t i = 0; i < checks.size(); ++i) {
      scan_directive(checks[i], names, "checks[" + std::to_string(i) + "]");
    }
  }
}

// ---------------------------------------------------------------------------
// Run-time: per-instance loading and directive execution.

template <typename C>
struct Traits;

template <>
struct Traits<finstoch::FinStoch> {
  static finstoch::FinStoch make(const RunOptions&) { return {}; }
  static finstoch::FinSet object(const json& j, std::string*) {
    return finstoch::finset_from_json(j);
  }
  static finstoch::StochMatrix morphism(const json& j) {
    return finstoch::morphism_from_json(j);
  }
};

template <>
struct Traits<setmulti::SetMulti> {
  static setmulti::SetMulti make(const RunOptions&) { return {}; }
  static finstoch::FinSet object(const json& j, std::string*) {
    return finstoch::finset_from_json(j);
  }
  static setmulti::MultiMap morphism(const json& j) {
    return setmulti::morphism_from_json(j);
  }
};

template <>
struct Traits<cringplus::CRingPlusOp> {
  static cringplus::CRingPlusOp make(const RunOptions& options) {
    return cringplus::CRingPlusOp{options.cring_degree};
  }
  static cringplus::PolyRing object(const json& j, std::string*) {
    return cringplus::PolyRing(j.get<std::vector<std::string>>());
  }
  static cringplus::AdditiveMap morphism(const json& j) {
    return cringplus::morphism_from_json(j);
  }
};

template <>
struct Traits<vietoris::Vietoris> {
  static vietoris::Vietoris make(const RunOptions&) { return {}; }
  static vietoris::FiniteTopSpace object(const json& j, std::string* note) {
    auto completion = vietoris::space_from_json(j);
    if (note && !completion.added.empty()) {
      *note = "topology completed with " + std::to_string(completion.added.size()) +
              " additional open set(s)";
    }
    return std::move(completion.space);
  }
  static vietoris::ClosedSetMap morphism(const json& j) {
    return vietoris::morphism_from_json(j);
  }
};

template <typename C>
class Runner {
 public:
  Runner(const C& cat, const json& doc, const RunOptions& options,
         reporting::SuiteReport& out)
      : cat_(cat), doc_(doc), options_(options), out_(out) {}

  bool load_environment() {
    bool ok = true;
    if (doc_.contains("objects")) {
      for (const auto& [name, payload] : doc_.at("objects").items()) {
        try {
          std::string note;
          objects_.emplace(name, Traits<C>::object(payload, &note));
          if (!note.empty()) {
            out_.add("load:object:" + name, CheckReport::pass(note));
          }
        } catch (const std::exception& e) {
          out_.add("load:object:" + name, CheckReport::fail(e.what(), "loader error"));
          ok = false;
        }
      }
    }
    if (doc_.contains("morphisms")) {
      for (const auto& [name, payload] : doc_.at("morphisms").items()) {
        try {
          json resolved = payload;
          // dom/cod given as names pull in the object payloads
          if (resolved.is_object() && doc_.contains("objects")) {
            for (const char* key : {"dom", "cod"}) {
              if (resolved.contains(key) && resolved.at(key).is_string()) {
                resolved[key] = doc_.at("objects").at(resolved.at(key).get<std::string>());
              }
            }
          }
          morphisms_.emplace(name, Traits<C>::morphism(resolved));
        } catch (const std::exception& e) {
          out_.add("load:morphism:" + name, CheckReport::fail(e.what(), "loader error"));
          ok = false;
        }
      }
    }
    return ok;
  }

  void run_all() {
    if (!doc_.contains("checks")) return;
    const json& checks = doc_.at("checks");
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const json& d = checks[i];
      const std::string kind = d.at("check").get<std::string>();
      const std::string name = "checks[" + std::to_string(i) + "]:" + kind;
      try {
        out_.add(name, run_directive(d, kind));
      } catch (const std::exception& e) {
        out_.add(name, CheckReport::fail(e.what(), "directive raised an error"));
      }
    }
  }

 private:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;
  using Term = diagram::Term<Object>;

  const Object& object(const json& name) const {
    return objects_.at(name.get<std::string>());
  }
  const Morphism& morphism(const json& name) const {
    return morphisms_.at(name.get<std::string>());
  }

  std::vector<Object> split(const json& s) const {
    std::vector<Object> out;
    for (const auto& name : s) out.push_back(object(name));
    return out;
  }

  static std::vector<std::size_t> positions(const json& s) {
    return s.get<std::vector<std::size_t>>();
  }

  Term term(const json& t) const {
    if (t.is_string()) return term(doc_.at("terms").at(t.get<std::string>()));
    const std::string op = t.at("op").get<std::string>();
    if (op == "id") return Term::id(object(t.at("object")));
    if (op == "gen") return Term::gen(t.at("name").get<std::string>());
    if (op == "seq") return Term::seq(term(t.at("first")), term(t.at("second")));
    if (op == "par") return Term::par(term(t.at("left")), term(t.at("right")));
    if (op == "swap") return Term::swap(object(t.at("left")), object(t.at("right")));
    if (op == "copy") return Term::copy(object(t.at("object")));
    return Term::discard(object(t.at("object")));
  }

  projective::IndexInjection injection(const json& j) const {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "identity") return projective::IndexInjection::identity();
    if (kind == "transposition") {
      return projective::IndexInjection::transposition(j.at("i").get<std::size_t>(),
                                                       j.at("j").get<std::size_t>());
    }
    if (kind == "stride") {
      return projective::IndexInjection::stride(j.at("stride").get<std::size_t>(),
                                                j.at("offset").get<std::size_t>());
    }
    if (kind == "shift") {
      return projective::IndexInjection::shift(j.at("k").get<std::size_t>());
    }
    return projective::IndexInjection::permutation(
        j.at("image").get<std::vector<std::size_t>>());
  }

  projective::CompatibleFamily<C> family(const json& f) const {
    const std::string kind = f.at("kind").get<std::string>();
    if (kind == "iid") {
      return projective::iid_family(
          cat_, morphism(f.at("q")),
          projective::IndexSet::naturals(f.at("prefix").get<std::string>()));
    }
    if (kind == "product") {
      return projective::product_family(family(f.at("left")), family(f.at("right")));
    }
    if (kind == "regroup") {
      std::vector<projective::CompatibleFamily<C>> parts;
      for (const auto& part : f.at("parts")) parts.push_back(family(part));
      return projective::regroup_family(cat_, std::move(parts));
    }
    if (kind == "override") {
      return family(f.at("base"))
          .with_override(f.at("labels").get<std::vector<std::string>>(),
                         morphism(f.at("morphism")));
    }
    // finite table family
    std::vector<projective::Label> labels;
    std::map<projective::Label, Object> factors;
    for (const auto& [label, obj] : f.at("factors").items()) {
      labels.push_back(label);
      factors.emplace(label, object(obj));
    }
    const Object domain = object(f.at("domain"));
    std::map<std::string, Morphism> table;
    for (const auto& [window, morph] : f.at("assign").items()) {
      table.emplace(window, morphism(morph));
    }
    auto assign = [table](const projective::LabelSet& window) -> Morphism {
      std::string key;
      for (std::size_t k = 0; k < window.size(); ++k) {
        if (k) key += ",";
        key += window[k];
      }
      const auto it = table.find(key);
      if (it == table.end()) {
        throw std::invalid_argument("table family has no entry for window '" + key + "'");
      }
      return it->second;
    };
    auto factor = [factors](const projective::Label& l) {
      const auto it = factors.find(l);
      if (it == factors.end()) {
        throw std::invalid_argument("table family has no factor for label " + l);
      }
      return it->second;
    };
    return projective::CompatibleFamily<C>(cat_, domain,
                                           projective::IndexSet::finite(labels), factor,
                                           assign, "table");
  }

  CheckReport expect_bool(bool value, const json& d) const {
    const bool expected = d.at("expect").get<bool>();
    if (value == expected) {
      return CheckReport::pass(std::string("value is ") + (value ? "true" : "false"));
    }
    return CheckReport::fail(std::string("value ") + (value ? "true" : "false"),
                             std::string("expected ") + (expected ? "true" : "false"));
  }

  CheckReport run_directive(const json& d, const std::string& kind) {
    if (kind == "comonoid") {
      return kernel::check_comonoid_laws(cat_, object(d.at("object")));
    }
    if (kind == "multiplicativity") {
      return kernel::check_multiplicativity(cat_, object(d.at("left")),
                                            object(d.at("right")));
    }
    if (kind == "deterministic") {
      return expect_bool(kernel::is_deterministic(cat_, morphism(d.at("morphism"))), d);
    }
    if (kind == "as-equal") {
      return expect_bool(kernel::as_equal(cat_, morphism(d.at("p")), morphism(d.at("f")),
                                          morphism(d.at("g"))),
                         d);
    }
    if (kind == "displays-ci") {
      return expect_bool(
          kernel::displays_ci(cat_, morphism(d.at("morphism")),
                              kernel::TensorSplit<Object>{split(d.at("split"))}),
          d);
    }
    if (kind == "typecheck") {
      const auto [dom, cod] = diagram::typecheck(cat_, term(d.at("term")), morphisms_);
      if (cat_.object_equal(dom, object(d.at("dom"))) &&
          cat_.object_equal(cod, object(d.at("cod")))) {
        return CheckReport::pass("inferred " + cat_.show_object(dom) + " -> " +
                                 cat_.show_object(cod));
      }
      return CheckReport::fail(cat_.show_object(dom) + " -> " + cat_.show_object(cod),
                               "inferred type differs from the expected one");
    }
    if (kind == "evaluate") {
      const auto value = diagram::evaluate(cat_, term(d.at("term")), morphisms_);
      const auto& expected = morphism(d.at("expect"));
      if (cat_.morphism_equal(value, expected)) return CheckReport::pass();
      return CheckReport::fail(cat_.show_morphism(value),
                               "evaluated morphism differs from the expected one");
    }
    if (kind == "marginalize") {
      const auto value =
          kernel::marginalize(cat_, morphism(d.at("morphism")),
                              kernel::TensorSplit<Object>{split(d.at("split"))},
                              positions(d.at("keep")));
      const auto& expected = morphism(d.at("expect"));
      if (cat_.morphism_equal(value, expected)) return CheckReport::pass();
      return CheckReport::fail(cat_.show_morphism(value),
                               "marginal differs from the expected morphism");
    }
    if (kind == "causality") {
      auto report = kernel::check_causality_triple(cat_, morphism(d.at("f")),
                                                   morphism(d.at("g")),
                                                   morphism(d.at("h1")),
                                                   morphism(d.at("h2")));
      if (d.contains("expect-hypothesis")) {
        const bool eh = d.at("expect-hypothesis").get<bool>();
        const bool ec = d.value("expect-conclusion", report.conclusion_holds.value());
        const bool matches =
            report.hypothesis_holds.value() == eh && report.conclusion_holds.value() == ec;
        CheckReport out;
        out.passed = matches;
        out.hypothesis_holds = report.hypothesis_holds;
        out.conclusion_holds = report.conclusion_holds;
        out.detail = report.detail + (matches ? "; matches the expected outcome"
                                              : "; differs from the expected outcome");
        if (!matches) out.witness = report.detail;
        return out;
      }
      return report;
    }
    if (kind == "axioms") {
      std::vector<std::pair<std::string, CheckReport>> parts;
      for (const auto& [xname, x] : objects_) {
        parts.emplace_back("comonoid(" + xname + ")",
                           kernel::check_comonoid_laws(cat_, x));
        for (const auto& [yname, y] : objects_) {
          parts.emplace_back("multiplicativity(" + xname + "," + yname + ")",
                             kernel::check_multiplicativity(cat_, x, y));
        }
      }
      return CheckReport::all(parts);
    }
    if (kind == "noncausality-cring") {
      if constexpr (std::is_same_v<C, cringplus::CRingPlusOp>) {
        return cringplus::check_noncausality(d.value("degree", options_.cring_degree));
      } else {
        return CheckReport::fail("instance", "directive requires the cringplus instance");
      }
    }
    if (kind == "witness-setmulti") {
      const unsigned upto = d.value("upto", d.value("n", 8u));
      const unsigned from = d.contains("n") && !d.contains("upto") ? upto : 1u;
      std::vector<std::pair<std::string, CheckReport>> parts;
      for (unsigned n = from; n <= upto; ++n) {
        parts.emplace_back("n=" + std::to_string(n),
                           setmulti::nonextension_witness(n).report);
      }
      return CheckReport::all(parts);
    }
    if (kind == "compatibility") {
      return projective::validate_compatibility(family(d.at("family")),
                                                d.value("depth", options_.depth));
    }
    if (kind == "infindep") {
      return projective::check_infindep_lemma(family(d.at("family")),
                                              d.value("position", std::size_t{0}),
                                              d.value("depth", options_.depth));
    }
    if (kind == "determinism-lemma") {
      return projective::check_determinism_lemma(cat_, morphism(d.at("p")),
                                                 morphism(d.at("s")));
    }
    if (kind == "kolmogorov-finite") {
      const json& s = d.at("statistic");
      return projective::check_kolmogorov_finite(
          cat_, morphism(d.at("p")), split(d.at("split")),
          projective::Statistic<C>{positions(s.at("positions")), morphism(s.at("map"))});
    }
    if (kind == "hs-splitting") {
      return projective::check_hs_splitting(family(d.at("family")),
                                            injection(d.at("tau1")),
                                            injection(d.at("tau2")),
                                            positions(d.at("f1")), positions(d.at("f2")));
    }
    if (kind == "aseq-lemma") {
      return projective::check_aseq_lemma(cat_, morphism(d.at("p")), morphism(d.at("f")),
                                          morphism(d.at("g")));
    }
    // marginalization-determinism
    return projective::check_marginalization_determinism(
        cat_, split(d.at("split")), d.at("keep").get<std::vector<bool>>());
  }

  const C& cat_;
  const json& doc_;
  const RunOptions& options_;
  reporting::SuiteReport& out_;
  std::map<std::string, Object> objects_;
  std::map<std::string, Morphism> morphisms_;
};

template <typename C>
void run_instance(const json& doc, const RunOptions& options, reporting::SuiteReport& out) {
  const C cat = Traits<C>::make(options);
  Runner<C> runner(cat, doc, options, out);
  if (runner.load_environment()) {
    runner.run_all();
  } else {
    out.add("checks", CheckReport::fail("environment", "skipped: the environment failed to load"));
  }
}

std::pair<std::size_t, std::size_t> line_column(const std::string& text, std::size_t byte) {
  std::size_t line = 1, column = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

}  // namespace

Script Script::parse(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    const auto [line, column] = line_column(text, e.byte > 0 ? e.byte - 1 : 0);
    throw ScriptError("syntax error at line " + std::to_string(line) + ", column " +
                      std::to_string(column) + ": " + e.what());
  }
  return from_json(std::move(doc));
}

Script Script::from_json(json document) {
  validate_document(document);
  std::string instance = document.at("instance").get<std::string>();
  return Script(std::move(instance), std::move(document));
}

RunOutcome run_checks(const Script& script, const RunOptions& options) {
  RunOutcome outcome;
  outcome.report.suite = "script:" + script.instance();
  outcome.report.seed = options.seed;
  const json& doc = script.document();
  if (script.instance() == "finstoch") {
    run_instance<finstoch::FinStoch>(doc, options, outcome.report);
  } else if (script.instance() == "setmulti") {
    run_instance<setmulti::SetMulti>(doc, options, outcome.report);
  } else if (script.instance() == "cringplus") {
    run_instance<cringplus::CRingPlusOp>(doc, options, outcome.report);
  } else {
    run_instance<vietoris::Vietoris>(doc, options, outcome.report);
  }
  outcome.exit_code = outcome.report.passed() ? 0 : 1;
  return outcome;
}

}  // namespace markovcat::script
