#pragma once

#include <nlohmann/json.hpp>

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "markovcat/check_report.hpp"
#include "markovcat/rational.hpp"

namespace markovcat::cringplus {

/// A polynomial ring over the integers, identified by its ordered list of
/// variables. Tensoring concatenates variable lists, so the monoidal
/// structure on objects is strict; the unit is the empty list (the ring Z).
/// Variable display names may repeat across tensor factors and are shown
/// with positional suffixes when ambiguous.
class PolyRing {
 public:
  PolyRing() = default;
  explicit PolyRing(std::vector<std::string> vars) : vars_(std::move(vars)) {}

  static PolyRing integers() { return PolyRing(); }
  static PolyRing tensor(const PolyRing& a, const PolyRing& b);

  std::size_t arity() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  std::string var_display(std::size_t i) const;

  bool operator==(const PolyRing& o) const { return vars_ == o.vars_; }
  bool operator!=(const PolyRing& o) const { return !(*this == o); }

  std::string show() const;

 private:
  std::vector<std::string> vars_;
};

/// Exponent vector aligned with the ring's variable list.
using Monomial = std::vector<unsigned>;

unsigned total_degree(const Monomial& m);

/// Sparse integer polynomial: monomial -> nonzero coefficient.
class Poly {
 public:
  explicit Poly(std::size_t arity) : arity_(arity) {}

  static Poly zero(std::size_t arity) { return Poly(arity); }
  static Poly one(std::size_t arity);
  static Poly monomial(Monomial m, Integer coeff = 1);

  std::size_t arity() const { return arity_; }
  const std::map<Monomial, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;

  void add_term(const Monomial& m, const Integer& coeff);
  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly scaled(const Integer& c) const;

  bool operator==(const Poly& o) const { return arity_ == o.arity_ && terms_ == o.terms_; }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  /// Product over disjoint variable blocks: exponent vectors concatenate.
  static Poly outer(const Poly& a, const Poly& b);

  std::string show(const PolyRing& ring) const;

 private:
  std::size_t arity_ = 0;
  std::map<Monomial, Integer> terms_;
};

/// A morphism R -> S in the opposite category of commutative rings with
/// additive unit-preserving maps. It is represented by an additive map
/// S -> R, given as a rule on the monomial basis of S and extended
/// additively; the rule must send the unit monomial to 1.
class AdditiveMap {
 public:
  using Rule = std::function<Poly(const Monomial&)>;

  AdditiveMap(PolyRing dom, PolyRing cod, Rule rule, std::string name);

  const PolyRing& dom() const { return dom_; }
  const PolyRing& cod() const { return cod_; }
  const std::string& name() const { return name_; }

  /// Applies the representing rule to a monomial of the codomain ring.
  Poly on_monomial(const Monomial& m) const { return rule_(m); }

  /// Additive extension to polynomials over the codomain ring.
  Poly apply(const Poly& p) const;

 private:
  PolyRing dom_;
  PolyRing cod_;
  Rule rule_;
  std::string name_;
};

/// CRing+^op restricted to sparse multivariate integer polynomial rings.
/// Morphism equality is extensional on monomials up to eq_degree; every
/// report produced through this instance is exact up to that bound.
struct CRingPlusOp {
  unsigned eq_degree = 12;

  using Object = PolyRing;
  using Morphism = AdditiveMap;

  Object unit() const { return PolyRing::integers(); }
  Object tensor_object(const Object& a, const Object& b) const {
    return PolyRing::tensor(a, b);
  }
  bool object_equal(const Object& a, const Object& b) const { return a == b; }

  Object dom(const Morphism& f) const { return f.dom(); }
  Object cod(const Morphism& f) const { return f.cod(); }

  Morphism identity(const Object& x) const;
  Morphism compose(const Morphism& f, const Morphism& g) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  /// Copy is represented by the multiplication map R (x) R -> R.
  Morphism copy(const Object& x) const;
  /// Discard is represented by the unit inclusion Z -> R.
  Morphism discard(const Object& x) const;
  Morphism swap(const Object& a, const Object& b) const;

  bool morphism_equal(const Morphism& f, const Morphism& g) const;

  std::string show_object(const Object& x) const { return x.show(); }
  std::string show_morphism(const Morphism& f) const;
};

/// Enumerates the monomials of a ring with total degree <= bound, in
/// lexicographic exponent order.
std::vector<Monomial> monomials_up_to(const PolyRing& ring, unsigned bound);

/// The maps of the non-causality computation on Z[t], by name:
///   "f":  t^n -> t^(n-1) for n >= 1, 1 -> 1
///   "g":  t^n -> t for n >= 1, 1 -> 1
///   "h1": t^n -> t^n
///   "h2": t^n -> 1
AdditiveMap builtin_map(const std::string& name);
bool is_builtin_map(const std::string& name);

/// Spot-check of multiplicativity of the representing rule on all monomial
/// pairs with total degree <= bound; in this instance this is the syntactic
/// counterpart of determinism.
bool is_multiplicative_on_grid(const AdditiveMap& f, unsigned bound);

/// Verifies the hypothesis of the causality condition for the builtin
/// quadruple at all exponents n, m <= degree_bound, reproduces the failure
/// of the conclusion at (n, m, l) = (1, 0, 1) with values t vs 1, and
/// cross-checks both against the generic causality probe.
CheckReport check_noncausality(unsigned degree_bound);

/// Parsing of textual polynomials over a ring with uniquely named variables,
/// e.g. "3*t^2 - 2" or "t*u + 1". Used by the JSON rule-table loader.
Poly parse_poly(const PolyRing& ring, const std::string& text);
Monomial parse_monomial(const PolyRing& ring, const std::string& text);

/// JSON rule table for a morphism dom -> cod (representing map cod -> dom):
///   {"dom": [vars], "cod": [vars], "table": {"t^2": "t + 1", ...},
///    "default": "identity" | "one"}
/// The default clause applies to monomials absent from the table; builtin
/// maps are loaded from {"builtin": "f"}.
AdditiveMap morphism_from_json(const nlohmann::json& j);

}  // namespace markovcat::cringplus
