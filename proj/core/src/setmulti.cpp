#include "markovcat/setmulti.hpp"

#include <sstream>
#include <stdexcept>

namespace markovcat::setmulti {

MultiMap::MultiMap(FinSet dom, FinSet cod, std::vector<Bitset> image)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
  if (image_.size() != dom_.size()) {
    throw std::invalid_argument("multimap image count does not match domain size");
  }
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x].size() != cod_.size()) {
      throw std::invalid_argument("multimap image has wrong carrier size");
    }
    if (image_[x].none()) {
      throw std::invalid_argument("multimap image must be nonempty at " +
                                  finstoch::show_elem(dom_.at(x)));
    }
  }
}

bool MultiMap::is_singleton_valued() const {
  for (const auto& img : image_) {
    if (img.count() != 1) return false;
  }
  return true;
}

bool MultiMap::operator==(const MultiMap& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && image_ == other.image_;
}

std::string MultiMap::show() const {
  std::ostringstream out;
  out << dom_.show() << " -> " << cod_.show() << " {";
  for (std::size_t x = 0; x < dom_.size(); ++x) {
    if (x) out << "; ";
    out << finstoch::show_elem(dom_.at(x)) << "->{";
    bool first = true;
    for (auto y : image_[x].members()) {
      if (!first) out << ",";
      out << finstoch::show_elem(cod_.at(y));
      first = false;
    }
    out << "}";
  }
  out << "}";
  return out.str();
}

MultiMap SetMulti::identity(const Object& x) const {
  std::vector<Bitset> image;
  image.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) image.push_back(Bitset::single(x.size(), i));
  return MultiMap(x, x, std::move(image));
}

MultiMap SetMulti::compose(const Morphism& f, const Morphism& g) const {
  if (f.cod() != g.dom()) {
    throw std::invalid_argument("compose: codomain of first factor differs from domain of second");
  }
  std::vector<Bitset> image;
  image.reserve(f.dom().size());
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    Bitset acc(g.cod().size());
    for (auto y : f.image_of(x).members()) acc = acc | g.image_of(y);
    image.push_back(std::move(acc));
  }
  return MultiMap(f.dom(), g.cod(), std::move(image));
}

MultiMap SetMulti::tensor(const Morphism& f, const Morphism& g) const {
  const FinSet dom = FinSet::product(f.dom(), g.dom());
  const FinSet cod = FinSet::product(f.cod(), g.cod());
  const std::size_t gc = g.cod().size();
  std::vector<Bitset> image;
  image.reserve(dom.size());
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    for (std::size_t b = 0; b < g.dom().size(); ++b) {
      Bitset img(cod.size());
      for (auto x : f.image_of(a).members()) {
        for (auto y : g.image_of(b).members()) img.set(x * gc + y);
      }
      image.push_back(std::move(img));
    }
  }
  return MultiMap(dom, cod, std::move(image));
}

MultiMap SetMulti::copy(const Object& x) const {
  const FinSet sq = FinSet::product(x, x);
  std::vector<Bitset> image;
  image.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    image.push_back(Bitset::single(sq.size(), i * x.size() + i));
  }
  return MultiMap(x, sq, std::move(image));
}

MultiMap SetMulti::discard(const Object& x) const {
  return MultiMap(x, FinSet::unit(), std::vector<Bitset>(x.size(), Bitset::full(1)));
}

MultiMap SetMulti::swap(const Object& a, const Object& b) const {
  const FinSet dom = FinSet::product(a, b);
  const FinSet cod = FinSet::product(b, a);
  std::vector<Bitset> image;
  image.reserve(dom.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      image.push_back(Bitset::single(cod.size(), j * a.size() + i));
    }
  }
  return MultiMap(dom, cod, std::move(image));
}

bool SetMulti::morphism_equal(const Morphism& f, const Morphism& g) const {
  return f == g;
}

MultiMap state_from_subset(const FinSet& x, const Bitset& subset) {
  if (subset.size() != x.size() || subset.none()) {
    throw std::invalid_argument("state requires a nonempty subset of the carrier");
  }
  return MultiMap(FinSet::unit(), x, {subset});
}

const Bitset& state_subset(const MultiMap& state) {
  if (state.dom() != FinSet::unit()) {
    throw std::invalid_argument("state_subset requires a state out of the unit");
  }
  return state.image_of(0);
}

Bitset marginal_image(const MultiMap& state, const std::vector<FinSet>& factors,
                      const std::vector<std::size_t>& keep) {
  const Bitset& subset = state_subset(state);
  std::size_t total = 1;
  for (const auto& f : factors) total *= f.size();
  if (total != subset.size()) {
    throw std::invalid_argument("factor decomposition does not match the carrier");
  }
  std::vector<bool> mask(factors.size(), false);
  for (auto k : keep) {
    if (k >= factors.size()) throw std::invalid_argument("kept index out of range");
    mask[k] = true;
  }
  std::size_t kept_total = 1;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    if (mask[i]) kept_total *= factors[i].size();
  }
  Bitset out(kept_total);
  for (auto idx : subset.members()) {
    // decode mixed-radix coordinates, most significant first
    std::size_t rest = idx, projected = 0;
    std::vector<std::size_t> coords(factors.size());
    for (std::size_t i = factors.size(); i > 0; --i) {
      coords[i - 1] = rest % factors[i - 1].size();
      rest /= factors[i - 1].size();
    }
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (mask[i]) projected = projected * factors[i].size() + coords[i];
    }
    out.set(projected);
  }
  return out;
}

MultiMap random_multimap(const FinSet& dom, const FinSet& cod, Rng& rng) {
  std::vector<Bitset> image;
  image.reserve(dom.size());
  for (std::size_t x = 0; x < dom.size(); ++x) {
    Bitset img(cod.size());
    while (img.none()) {
      for (std::size_t y = 0; y < cod.size(); ++y) {
        if (rng.coin()) img.set(y);
      }
    }
    image.push_back(std::move(img));
  }
  return MultiMap(dom, cod, std::move(image));
}

NonextensionWitness nonextension_witness(unsigned n) {
  if (n < 1) throw std::invalid_argument("nonextension witness requires n >= 1");
  const FinSet bit({"0", "1"});
  FinSet carrier = bit;
  std::vector<FinSet> factors(n, bit);
  for (unsigned i = 1; i < n; ++i) carrier = FinSet::product(carrier, bit);

  Bitset has_one(carrier.size()), has_zero(carrier.size());
  for (std::size_t i = 0; i < carrier.size(); ++i) {
    const Elem& tuple = carrier.at(i);
    bool one = false, zero = false;
    for (const auto& c : tuple) {
      if (c == "1") one = true;
      if (c == "0") zero = true;
    }
    if (one) has_one.set(i);
    if (zero) has_zero.set(i);
  }
  MultiMap above = state_from_subset(carrier, has_one);
  MultiMap below = state_from_subset(carrier, has_zero);

  CheckReport report;
  if (has_one == has_zero) {
    report = CheckReport::fail(above.show(), "states coincide");
    return {std::move(above), std::move(below), std::move(report)};
  }
  // Every proper subset of the coordinates must give identical images.
  for (std::size_t mask = 0; mask + 1 < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> keep;
    for (unsigned i = 0; i < n; ++i) {
      if (mask & (std::size_t{1} << i)) keep.push_back(i);
    }
    const Bitset ma = marginal_image(above, factors, keep);
    const Bitset mb = marginal_image(below, factors, keep);
    if (ma != mb) {
      report = CheckReport::fail(
          "window {" + std::to_string(mask) + "}: " + ma.show() + " vs " + mb.show(),
          "proper marginal images differ");
      return {std::move(above), std::move(below), std::move(report)};
    }
  }
  report = CheckReport::pass(
      "two distinct states on {0,1}^" + std::to_string(n) +
      " share every proper-window marginal image, so no compatible family of "
      "finite projections determines a unique state");
  return {std::move(above), std::move(below), std::move(report)};
}

nlohmann::json morphism_to_json(const MultiMap& f) {
  nlohmann::json image = nlohmann::json::object();
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    nlohmann::json targets = nlohmann::json::array();
    for (auto y : f.image_of(x).members()) {
      targets.push_back(finstoch::show_elem(f.cod().at(y)));
    }
    image[finstoch::show_elem(f.dom().at(x))] = std::move(targets);
  }
  return nlohmann::json{{"dom", finstoch::finset_to_json(f.dom())},
                        {"cod", finstoch::finset_to_json(f.cod())},
                        {"image", std::move(image)}};
}

namespace {

std::size_t index_by_display(const FinSet& x, const std::string& shown) {
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (finstoch::show_elem(x.at(i)) == shown) return i;
  }
  throw std::invalid_argument("element not in carrier: " + shown);
}

}  // namespace

MultiMap morphism_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("image")) {
    throw std::invalid_argument("multimap JSON needs dom, cod and image");
  }
  FinSet dom = finstoch::finset_from_json(j.at("dom"));
  FinSet cod = finstoch::finset_from_json(j.at("cod"));
  std::vector<Bitset> image(dom.size(), Bitset(cod.size()));
  const auto& table = j.at("image");
  for (std::size_t x = 0; x < dom.size(); ++x) {
    const std::string key = finstoch::show_elem(dom.at(x));
    if (!table.contains(key)) {
      throw std::invalid_argument("multimap image missing entry for " + key);
    }
    for (const auto& target : table.at(key)) {
      image[x].set(index_by_display(cod, target.get<std::string>()));
    }
  }
  return MultiMap(std::move(dom), std::move(cod), std::move(image));
}

}  // namespace markovcat::setmulti
