#pragma once

#include <nlohmann/json.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "markovcat/rational.hpp"
#include "markovcat/rng.hpp"

namespace markovcat::finstoch {

/// An element of a finite set is a tuple of atom labels. Atomic sets hold
/// one-atom tuples; tensoring concatenates tuples. Because concatenation is
/// associative with the empty tuple as unit, the monoidal structure on
/// objects is strict on the nose and no coherence bookkeeping is needed.
using Elem = std::vector<std::string>;

std::string show_elem(const Elem& e);

class FinSet {
 public:
  /// Atomic set from distinct labels. Throws on empty or duplicated labels.
  explicit FinSet(std::vector<std::string> labels);

  static FinSet unit();
  static FinSet product(const FinSet& a, const FinSet& b);
  /// Set with explicitly given tuple elements (distinct, nonempty list).
  static FinSet from_elems(std::vector<Elem> elems);

  std::size_t size() const { return elems_.size(); }
  const Elem& at(std::size_t i) const { return elems_[i]; }
  const std::vector<Elem>& elems() const { return elems_; }

  /// Index of an element; throws std::out_of_range if absent.
  std::size_t index_of(const Elem& e) const;
  bool contains(const Elem& e) const;

  bool operator==(const FinSet& other) const { return elems_ == other.elems_; }
  bool operator!=(const FinSet& other) const { return !(*this == other); }

  std::string show() const;

 private:
  struct raw_tag {};
  FinSet(raw_tag, std::vector<Elem> elems);
  std::vector<Elem> elems_;
};

/// Exact stochastic matrix: nonnegative rational entries, every row summing
/// to exactly 1. Stored dense, row-major, indexed by (dom elem, cod elem).
class StochMatrix {
 public:
  StochMatrix(FinSet dom, FinSet cod, std::vector<Rational> entries);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const Rational& at(std::size_t x, std::size_t y) const {
    return entries_[x * cod_.size() + y];
  }

  bool operator==(const StochMatrix& other) const;
  bool operator!=(const StochMatrix& other) const { return !(*this == other); }

  /// True iff every entry is 0 or 1 (the syntactic determinism test).
  bool is_zero_one() const;

  /// Column indices that receive nonzero mass in some row.
  std::vector<bool> support() const;

  std::string show() const;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<Rational> entries_;
};

/// The category of finite sets and exact stochastic matrices with
/// matrix-multiplication composition and Kronecker tensor.
struct FinStoch {
  using Object = FinSet;
  using Morphism = StochMatrix;

  Object unit() const { return FinSet::unit(); }
  Object tensor_object(const Object& a, const Object& b) const {
    return FinSet::product(a, b);
  }
  bool object_equal(const Object& a, const Object& b) const { return a == b; }

  Object dom(const Morphism& f) const { return f.dom(); }
  Object cod(const Morphism& f) const { return f.cod(); }

  Morphism identity(const Object& x) const;
  /// Diagrammatic order: compose(f, g) is "f then g".
  Morphism compose(const Morphism& f, const Morphism& g) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Morphism copy(const Object& x) const;
  Morphism discard(const Object& x) const;
  Morphism swap(const Object& a, const Object& b) const;

  bool morphism_equal(const Morphism& f, const Morphism& g) const;

  std::string show_object(const Object& x) const { return x.show(); }
  std::string show_morphism(const Morphism& f) const { return f.show(); }
};

/// Point mass at x as a state I -> X.
StochMatrix dirac(const FinSet& x, const Elem& point);
StochMatrix dirac(const FinSet& x, const std::string& label);

/// State I -> X with the given distribution row.
StochMatrix state(const FinSet& x, std::vector<Rational> row);

/// Uniform distribution on X.
StochMatrix uniform_state(const FinSet& x);

/// Random kernel whose rows are uniform over the weak compositions of
/// denominator_bound, so entries are rationals with denominator dividing
/// the bound. denominator_bound = 1 yields deterministic (Dirac) rows.
StochMatrix random_kernel(const FinSet& dom, const FinSet& cod, Rng& rng,
                          unsigned denominator_bound);

/// JSON morphism format:
///   {"dom": [labels], "cod": [labels], "rows": [["p/q", ...], ...]}
/// Labels may also be tuples (arrays of strings) for product sets.
/// The loader validates distinctness, nonnegativity and exact row sums.
nlohmann::json finset_to_json(const FinSet& x);
FinSet finset_from_json(const nlohmann::json& j);
nlohmann::json morphism_to_json(const StochMatrix& f);
StochMatrix morphism_from_json(const nlohmann::json& j);

}  // namespace markovcat::finstoch
