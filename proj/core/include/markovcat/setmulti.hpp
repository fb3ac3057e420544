#pragma once

#include <nlohmann/json.hpp>

#include <string>
#include <vector>

#include "markovcat/bitset.hpp"
#include "markovcat/check_report.hpp"
#include "markovcat/finstoch.hpp"
#include "markovcat/rng.hpp"

namespace markovcat::setmulti {

using finstoch::Elem;
using finstoch::FinSet;

/// Multivalued function between finite sets: every point of the domain maps
/// to a nonempty subset of the codomain, stored as a bitset in the codomain's
/// canonical element order.
class MultiMap {
 public:
  MultiMap(FinSet dom, FinSet cod, std::vector<Bitset> image);

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  const Bitset& image_of(std::size_t x) const { return image_[x]; }

  bool is_singleton_valued() const;

  bool operator==(const MultiMap& other) const;
  bool operator!=(const MultiMap& other) const { return !(*this == other); }

  std::string show() const;

 private:
  FinSet dom_;
  FinSet cod_;
  std::vector<Bitset> image_;
};

/// Kleisli category of the nonempty powerset monad on finite sets:
/// composition takes pointwise unions, tensor takes Cartesian products of
/// images, and copy sends x to the singleton {(x,x)}.
struct SetMulti {
  using Object = FinSet;
  using Morphism = MultiMap;

  Object unit() const { return FinSet::unit(); }
  Object tensor_object(const Object& a, const Object& b) const {
    return FinSet::product(a, b);
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

/// States I -> X are exactly nonempty subsets of X.
MultiMap state_from_subset(const FinSet& x, const Bitset& subset);
const Bitset& state_subset(const MultiMap& state);

/// Projection of a state on a product onto the kept factor positions; the
/// image of the subset under the coordinate projection.
Bitset marginal_image(const MultiMap& state, const std::vector<FinSet>& factors,
                      const std::vector<std::size_t>& keep);

/// Random multivalued function; every image is a uniformly random nonempty
/// subset. Deterministic given the generator state.
MultiMap random_multimap(const FinSet& dom, const FinSet& cod, Rng& rng);

/// Finite witness that compatible families of marginal images do not pin
/// down a state: on {0,1}^n, the set of tuples containing a 1 and the set of
/// tuples containing a 0 are distinct but agree on every proper projection.
struct NonextensionWitness {
  MultiMap above;  // tuples containing at least one 1
  MultiMap below;  // tuples containing at least one 0
  CheckReport report;
};
NonextensionWitness nonextension_witness(unsigned n);

/// JSON format: {"dom": [...], "cod": [...], "image": {"x": ["y1","y2"], ...}}
nlohmann::json morphism_to_json(const MultiMap& f);
MultiMap morphism_from_json(const nlohmann::json& j);

}  // namespace markovcat::setmulti
