#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "markovcat/bitset.hpp"
#include "markovcat/check_report.hpp"
#include "markovcat/finstoch.hpp"
#include "markovcat/rng.hpp"

namespace markovcat::vietoris {

using finstoch::Elem;
using finstoch::FinSet;

/// Finite topological space, stored as the minimal open neighborhood U_x of
/// every point. All opens are exactly the unions of these basis sets, so a
/// set S is open iff U_x is contained in S for every x in S, and the closure
/// of S is the set of points whose minimal neighborhood meets S. Two spaces
/// are equal iff they have the same points and the same topology.
class FiniteTopSpace {
 public:
  FiniteTopSpace(FinSet points, std::vector<Bitset> min_open);

  static FiniteTopSpace discrete(FinSet points);
  static FiniteTopSpace indiscrete(FinSet points);
  /// Two points "o" (open) and "c"; {"o"} is open, {"c"} is not.
  static FiniteTopSpace sierpinski();
  static FiniteTopSpace product(const FiniteTopSpace& a, const FiniteTopSpace& b);

  /// Builds a space from an open-set family, completing it under binary
  /// union and intersection and adding the empty and full sets if missing;
  /// the returned completion records every set the loader had to add.
  struct Completion;
  static Completion from_opens(FinSet points, std::vector<Bitset> opens);

  const FinSet& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  const Bitset& min_open(std::size_t x) const { return min_open_[x]; }

  bool is_open(const Bitset& s) const;
  bool is_closed(const Bitset& s) const { return is_open(~s); }
  /// Smallest closed superset.
  Bitset closure(const Bitset& s) const;

  /// All closed subsets, optionally without the empty one.
  std::vector<Bitset> closed_sets(bool include_empty) const;

  bool operator==(const FiniteTopSpace& o) const {
    return points_ == o.points_ && min_open_ == o.min_open_;
  }
  bool operator!=(const FiniteTopSpace& o) const { return !(*this == o); }

  std::string show() const;

 private:
  FinSet points_;
  std::vector<Bitset> min_open_;
};

struct FiniteTopSpace::Completion {
  FiniteTopSpace space;
  std::vector<Bitset> added;
};

/// Continuity of a candidate point-to-closed-set table for the lower
/// Vietoris topology: the preimage of Hit(U) must be open for every open U
/// of the codomain. Hit commutes with unions, so checking the minimal-basis
/// opens decides it for all opens.
CheckReport continuity_check(const FiniteTopSpace& dom, const FiniteTopSpace& cod,
                             const std::vector<Bitset>& image);

/// Morphism in the Kleisli category of the lower Vietoris monad: each point
/// maps to a nonempty closed subset of the codomain, continuously.
/// Construction validates closedness, nonemptiness and continuity.
class ClosedSetMap {
 public:
  ClosedSetMap(FiniteTopSpace dom, FiniteTopSpace cod, std::vector<Bitset> image);

  const FiniteTopSpace& dom() const { return dom_; }
  const FiniteTopSpace& cod() const { return cod_; }
  const Bitset& image_of(std::size_t x) const { return image_[x]; }

  bool operator==(const ClosedSetMap& o) const;
  bool operator!=(const ClosedSetMap& o) const { return !(*this == o); }

  std::string show() const;

 private:
  FiniteTopSpace dom_;
  FiniteTopSpace cod_;
  std::vector<Bitset> image_;
};

CheckReport continuity_check(const ClosedSetMap& f);

/// Kleisli category of the lower Vietoris monad on finite spaces.
/// Composition is union-then-closure; copy sends x to cl({(x,x)}).
struct Vietoris {
  using Object = FiniteTopSpace;
  using Morphism = ClosedSetMap;

  Object unit() const { return FiniteTopSpace::discrete(FinSet::unit()); }
  Object tensor_object(const Object& a, const Object& b) const {
    return FiniteTopSpace::product(a, b);
  }
  bool object_equal(const Object& a, const Object& b) const { return a == b; }

  Object dom(const Morphism& f) const { return f.dom(); }
  Object cod(const Morphism& f) const { return f.cod(); }

  Morphism identity(const Object& x) const;
  Morphism compose(const Morphism& f, const Morphism& g) const;
  Morphism tensor(const Morphism& f, const Morphism& g) const;
  Morphism copy(const Object& x) const;
  Morphism discard(const Object& x) const;
  Morphism swap(const Object& a, const Object& b) const;

  bool morphism_equal(const Morphism& f, const Morphism& g) const;

  std::string show_object(const Object& x) const { return x.show(); }
  std::string show_morphism(const Morphism& f) const { return f.show(); }
};

/// All labeled topologies on the given points (29 on three points).
std::vector<FiniteTopSpace> all_topologies(const FinSet& points);

/// Random continuous map, or nothing if none was found within max_attempts
/// of rejection sampling.
std::optional<ClosedSetMap> random_map(const FiniteTopSpace& dom, const FiniteTopSpace& cod,
                                       Rng& rng, unsigned max_attempts = 64);

struct CausalitySearchConfig {
  unsigned max_points = 3;
  std::uint64_t seed = 0;
  std::uint64_t budget = 1000;  // number of quadruples to examine
  bool discrete_only = false;
};

struct CausalityQuadruple {
  ClosedSetMap f, g, h1, h2;
};

/// Seeded search for a hypothesis-true/conclusion-false quadruple. The
/// result records the outcome; finding nothing within the budget asserts
/// nothing about nonexistence.
struct CausalitySearchResult {
  std::optional<CausalityQuadruple> counterexample;
  std::uint64_t examined = 0;
  CheckReport report;
};
CausalitySearchResult causality_search(const CausalitySearchConfig& config);

/// JSON space format: {"points": [...], "opens": [[...], ...]};
/// maps as {"dom": space, "cod": space, "image": {"x": ["y1", ...], ...}}.
nlohmann::json space_to_json(const FiniteTopSpace& x);
FiniteTopSpace::Completion space_from_json(const nlohmann::json& j);
nlohmann::json morphism_to_json(const ClosedSetMap& f);
ClosedSetMap morphism_from_json(const nlohmann::json& j);

}  // namespace markovcat::vietoris
