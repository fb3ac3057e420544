#include "markovcat/vietoris.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "markovcat/kernel.hpp"

namespace markovcat::vietoris {

FiniteTopSpace::FiniteTopSpace(FinSet points, std::vector<Bitset> min_open)
    : points_(std::move(points)), min_open_(std::move(min_open)) {
  if (min_open_.size() != points_.size()) {
    throw std::invalid_argument("minimal neighborhood count does not match point count");
  }
  for (std::size_t x = 0; x < min_open_.size(); ++x) {
    if (min_open_[x].size() != points_.size() || !min_open_[x].test(x)) {
      throw std::invalid_argument("minimal neighborhood must contain its point");
    }
  }
  for (std::size_t x = 0; x < min_open_.size(); ++x) {
    for (auto y : min_open_[x].members()) {
      if (!min_open_[y].is_subset_of(min_open_[x])) {
        throw std::invalid_argument("minimal neighborhoods are not transitive");
      }
    }
  }
}

FiniteTopSpace FiniteTopSpace::discrete(FinSet points) {
  std::vector<Bitset> min_open;
  const std::size_t n = points.size();
  min_open.reserve(n);
  for (std::size_t i = 0; i < n; ++i) min_open.push_back(Bitset::single(n, i));
  return FiniteTopSpace(std::move(points), std::move(min_open));
}

FiniteTopSpace FiniteTopSpace::indiscrete(FinSet points) {
  const std::size_t n = points.size();
  return FiniteTopSpace(std::move(points), std::vector<Bitset>(n, Bitset::full(n)));
}

FiniteTopSpace FiniteTopSpace::sierpinski() {
  FinSet points({"o", "c"});
  Bitset uo(2), uc(2);
  uo.set(0);
  uc.set(0);
  uc.set(1);
  return FiniteTopSpace(std::move(points), {uo, uc});
}

FiniteTopSpace FiniteTopSpace::product(const FiniteTopSpace& a, const FiniteTopSpace& b) {
  FinSet points = FinSet::product(a.points_, b.points_);
  const std::size_t nb = b.size();
  std::vector<Bitset> min_open;
  min_open.reserve(points.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      Bitset u(points.size());
      for (auto x : a.min_open_[i].members()) {
        for (auto y : b.min_open_[j].members()) u.set(x * nb + y);
      }
      min_open.push_back(std::move(u));
    }
  }
  return FiniteTopSpace(std::move(points), std::move(min_open));
}

FiniteTopSpace::Completion FiniteTopSpace::from_opens(FinSet points,
                                                      std::vector<Bitset> opens) {
  const std::size_t n = points.size();
  std::set<Bitset> family;
  for (const auto& o : opens) {
    if (o.size() != n) throw std::invalid_argument("open set has wrong carrier size");
    family.insert(o);
  }
  std::vector<Bitset> added;
  auto ensure = [&](const Bitset& s) {
    if (family.insert(s).second) added.push_back(s);
  };
  ensure(Bitset(n));
  ensure(Bitset::full(n));
  // close under pairwise union and intersection
  bool grew = true;
  while (grew) {
    grew = false;
    const std::vector<Bitset> snapshot(family.begin(), family.end());
    for (std::size_t i = 0; i < snapshot.size(); ++i) {
      for (std::size_t j = i + 1; j < snapshot.size(); ++j) {
        for (const Bitset& candidate :
             {snapshot[i] | snapshot[j], snapshot[i] & snapshot[j]}) {
          if (family.insert(candidate).second) {
            added.push_back(candidate);
            grew = true;
          }
        }
      }
    }
  }
  std::vector<Bitset> min_open(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    Bitset u = Bitset::full(n);
    for (const auto& o : family) {
      if (o.test(x)) u = u & o;
    }
    min_open[x] = u;
  }
  return Completion{FiniteTopSpace(std::move(points), std::move(min_open)),
                    std::move(added)};
}

bool FiniteTopSpace::is_open(const Bitset& s) const {
  for (auto x : s.members()) {
    if (!min_open_[x].is_subset_of(s)) return false;
  }
  return true;
}

Bitset FiniteTopSpace::closure(const Bitset& s) const {
  Bitset out(size());
  for (std::size_t x = 0; x < size(); ++x) {
    if (min_open_[x].intersects(s)) out.set(x);
  }
  return out;
}

std::vector<Bitset> FiniteTopSpace::closed_sets(bool include_empty) const {
  std::vector<Bitset> out;
  if (size() > 20) throw std::invalid_argument("closed-set enumeration limited to 20 points");
  const std::size_t total = std::size_t{1} << size();
  for (std::size_t mask = 0; mask < total; ++mask) {
    Bitset s(size());
    for (std::size_t i = 0; i < size(); ++i) {
      if (mask & (std::size_t{1} << i)) s.set(i);
    }
    if (!include_empty && s.none()) continue;
    if (is_closed(s)) out.push_back(std::move(s));
  }
  return out;
}

std::string FiniteTopSpace::show() const {
  std::ostringstream out;
  out << points_.show() << " opens~[";
  for (std::size_t x = 0; x < size(); ++x) {
    if (x) out << ",";
    out << min_open_[x].show();
  }
  out << "]";
  return out.str();
}

CheckReport continuity_check(const FiniteTopSpace& dom, const FiniteTopSpace& cod,
                             const std::vector<Bitset>& image) {
  if (image.size() != dom.size()) {
    return CheckReport::fail("image table size", "image table does not match domain");
  }
  for (std::size_t x = 0; x < image.size(); ++x) {
    if (image[x].size() != cod.size()) {
      return CheckReport::fail("image carrier size", "image has wrong carrier size");
    }
  }
  for (std::size_t y = 0; y < cod.size(); ++y) {
    const Bitset& u = cod.min_open(y);
    Bitset preimage(dom.size());
    for (std::size_t x = 0; x < dom.size(); ++x) {
      if (image[x].intersects(u)) preimage.set(x);
    }
    if (!dom.is_open(preimage)) {
      return CheckReport::fail(
          "Hit(" + u.show() + ") preimage " + preimage.show(),
          "preimage of a subbasic open is not open in the domain");
    }
  }
  return CheckReport::pass();
}

ClosedSetMap::ClosedSetMap(FiniteTopSpace dom, FiniteTopSpace cod, std::vector<Bitset> image)
    : dom_(std::move(dom)), cod_(std::move(cod)), image_(std::move(image)) {
  if (image_.size() != dom_.size()) {
    throw std::invalid_argument("closed-set map image count does not match domain");
  }
  for (std::size_t x = 0; x < image_.size(); ++x) {
    if (image_[x].size() != cod_.size()) {
      throw std::invalid_argument("closed-set map image has wrong carrier size");
    }
    if (image_[x].none()) {
      throw std::invalid_argument("closed-set map image must be nonempty");
    }
    if (!cod_.is_closed(image_[x])) {
      throw std::invalid_argument("closed-set map image is not closed at " +
                                  finstoch::show_elem(dom_.points().at(x)));
    }
  }
  const CheckReport cont = continuity_check(dom_, cod_, image_);
  if (!cont.passed) {
    throw std::invalid_argument("closed-set map is not continuous: " + cont.detail);
  }
}

bool ClosedSetMap::operator==(const ClosedSetMap& o) const {
  return dom_ == o.dom_ && cod_ == o.cod_ && image_ == o.image_;
}

std::string ClosedSetMap::show() const {
  std::ostringstream out;
  out << dom_.points().show() << " -> " << cod_.points().show() << " {";
  for (std::size_t x = 0; x < dom_.size(); ++x) {
    if (x) out << "; ";
    out << finstoch::show_elem(dom_.points().at(x)) << "->" << image_[x].show();
  }
  out << "}";
  return out.str();
}

CheckReport continuity_check(const ClosedSetMap& f) {
  std::vector<Bitset> image;
  image.reserve(f.dom().size());
  for (std::size_t x = 0; x < f.dom().size(); ++x) image.push_back(f.image_of(x));
  return continuity_check(f.dom(), f.cod(), image);
}

ClosedSetMap Vietoris::identity(const Object& x) const {
  std::vector<Bitset> image;
  image.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    image.push_back(x.closure(Bitset::single(x.size(), i)));
  }
  return ClosedSetMap(x, x, std::move(image));
}

ClosedSetMap Vietoris::compose(const Morphism& f, const Morphism& g) const {
  if (f.cod() != g.dom()) {
    throw std::invalid_argument("compose: codomain of first factor differs from domain of second");
  }
  std::vector<Bitset> image;
  image.reserve(f.dom().size());
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    Bitset acc(g.cod().size());
    for (auto y : f.image_of(x).members()) acc = acc | g.image_of(y);
    image.push_back(g.cod().closure(acc));
  }
  return ClosedSetMap(f.dom(), g.cod(), std::move(image));
}

ClosedSetMap Vietoris::tensor(const Morphism& f, const Morphism& g) const {
  const FiniteTopSpace dom = FiniteTopSpace::product(f.dom(), g.dom());
  const FiniteTopSpace cod = FiniteTopSpace::product(f.cod(), g.cod());
  const std::size_t gc = g.cod().size();
  std::vector<Bitset> image;
  image.reserve(dom.size());
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    for (std::size_t b = 0; b < g.dom().size(); ++b) {
      Bitset img(cod.size());
      for (auto x : f.image_of(a).members()) {
        for (auto y : g.image_of(b).members()) img.set(x * gc + y);
      }
      // a product of closed sets is closed in the product topology
      image.push_back(std::move(img));
    }
  }
  return ClosedSetMap(dom, cod, std::move(image));
}

ClosedSetMap Vietoris::copy(const Object& x) const {
  const FiniteTopSpace sq = FiniteTopSpace::product(x, x);
  std::vector<Bitset> image;
  image.reserve(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    image.push_back(sq.closure(Bitset::single(sq.size(), i * x.size() + i)));
  }
  return ClosedSetMap(x, sq, std::move(image));
}

ClosedSetMap Vietoris::discard(const Object& x) const {
  return ClosedSetMap(x, unit(), std::vector<Bitset>(x.size(), Bitset::full(1)));
}

ClosedSetMap Vietoris::swap(const Object& a, const Object& b) const {
  const FiniteTopSpace dom = FiniteTopSpace::product(a, b);
  const FiniteTopSpace cod = FiniteTopSpace::product(b, a);
  std::vector<Bitset> image;
  image.reserve(dom.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      image.push_back(cod.closure(Bitset::single(cod.size(), j * a.size() + i)));
    }
  }
  return ClosedSetMap(dom, cod, std::move(image));
}

bool Vietoris::morphism_equal(const Morphism& f, const Morphism& g) const {
  return f == g;
}

std::vector<FiniteTopSpace> all_topologies(const FinSet& points) {
  const std::size_t n = points.size();
  if (n > 4) throw std::invalid_argument("topology enumeration limited to 4 points");
  std::vector<FiniteTopSpace> out;
  // Enumerate candidate minimal-neighborhood tables; each U_x ranges over
  // subsets containing x, and the table must be transitive.
  const std::size_t subset_count = std::size_t{1} << n;
  std::vector<std::size_t> choice(n, 0);
  for (;;) {
    bool valid = true;
    std::vector<Bitset> min_open;
    for (std::size_t x = 0; x < n && valid; ++x) {
      if (!(choice[x] & (std::size_t{1} << x))) valid = false;
    }
    if (valid) {
      for (std::size_t x = 0; x < n; ++x) {
        Bitset u(n);
        for (std::size_t y = 0; y < n; ++y) {
          if (choice[x] & (std::size_t{1} << y)) u.set(y);
        }
        min_open.push_back(std::move(u));
      }
      for (std::size_t x = 0; x < n && valid; ++x) {
        for (std::size_t y = 0; y < n && valid; ++y) {
          if (min_open[x].test(y) && !min_open[y].is_subset_of(min_open[x])) valid = false;
        }
      }
      if (valid) out.emplace_back(points, std::move(min_open));
    }
    // odometer over the n subset choices
    std::size_t k = 0;
    while (k < n && ++choice[k] == subset_count) {
      choice[k] = 0;
      ++k;
    }
    if (k == n) break;
  }
  return out;
}

std::optional<ClosedSetMap> random_map(const FiniteTopSpace& dom, const FiniteTopSpace& cod,
                                       Rng& rng, unsigned max_attempts) {
  const auto closed = cod.closed_sets(/*include_empty=*/false);
  if (closed.empty()) return std::nullopt;
  for (unsigned attempt = 0; attempt < max_attempts; ++attempt) {
    std::vector<Bitset> image;
    image.reserve(dom.size());
    for (std::size_t x = 0; x < dom.size(); ++x) {
      image.push_back(closed[static_cast<std::size_t>(rng.below(closed.size()))]);
    }
    if (continuity_check(dom, cod, image).passed) {
      return ClosedSetMap(dom, cod, std::move(image));
    }
  }
  return std::nullopt;
}

CausalitySearchResult causality_search(const CausalitySearchConfig& config) {
  const Vietoris cat;
  Rng rng(derive_seed(config.seed, 0x76696574u));
  std::vector<FiniteTopSpace> pool;
  for (unsigned n = 1; n <= config.max_points; ++n) {
    std::vector<std::string> labels;
    for (unsigned i = 0; i < n; ++i) labels.push_back("p" + std::to_string(i));
    const FinSet points(labels);
    if (config.discrete_only) {
      pool.push_back(FiniteTopSpace::discrete(points));
    } else {
      for (auto& space : all_topologies(points)) pool.push_back(std::move(space));
    }
  }

  CausalitySearchResult result;
  std::uint64_t attempts = 0;
  const std::uint64_t attempt_cap = config.budget * 16 + 1024;
  while (result.examined < config.budget && ++attempts <= attempt_cap) {
    const auto& a = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    const auto& x = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    const auto& y = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    const auto& z = pool[static_cast<std::size_t>(rng.below(pool.size()))];
    const auto f = random_map(a, x, rng);
    const auto g = random_map(x, y, rng);
    const auto h1 = random_map(y, z, rng);
    const auto h2 = random_map(y, z, rng);
    if (!f || !g || !h1 || !h2) continue;
    if (*h1 == *h2) continue;  // cannot violate the implication
    ++result.examined;
    const auto probe = kernel::check_causality_triple(cat, *f, *g, *h1, *h2);
    if (probe.hypothesis_holds.value() && !probe.conclusion_holds.value()) {
      result.counterexample = CausalityQuadruple{*f, *g, *h1, *h2};
      result.report = CheckReport::pass(
          "counterexample found after " + std::to_string(result.examined) +
          " quadruples: " + probe.detail);
      result.report.witness = probe.witness;
      return result;
    }
  }
  result.report = CheckReport::pass(
      "no violation among " + std::to_string(result.examined) +
      " quadruples within budget; this does not assert nonexistence");
  return result;
}

nlohmann::json space_to_json(const FiniteTopSpace& x) {
  std::set<Bitset> basis;
  for (std::size_t i = 0; i < x.size(); ++i) basis.insert(x.min_open(i));
  nlohmann::json opens = nlohmann::json::array();
  for (const auto& u : basis) {
    nlohmann::json members = nlohmann::json::array();
    for (auto i : u.members()) members.push_back(finstoch::show_elem(x.points().at(i)));
    opens.push_back(std::move(members));
  }
  return nlohmann::json{{"points", finstoch::finset_to_json(x.points())},
                        {"opens", std::move(opens)}};
}

FiniteTopSpace::Completion space_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("points") || !j.contains("opens")) {
    throw std::invalid_argument("space JSON needs points and opens");
  }
  FinSet points = finstoch::finset_from_json(j.at("points"));
  std::vector<Bitset> opens;
  for (const auto& open : j.at("opens")) {
    Bitset s(points.size());
    for (const auto& label : open) {
      bool found = false;
      for (std::size_t i = 0; i < points.size(); ++i) {
        if (finstoch::show_elem(points.at(i)) == label.get<std::string>()) {
          s.set(i);
          found = true;
        }
      }
      if (!found) {
        throw std::invalid_argument("open set mentions unknown point " +
                                    label.get<std::string>());
      }
    }
    opens.push_back(std::move(s));
  }
  return FiniteTopSpace::from_opens(std::move(points), std::move(opens));
}

nlohmann::json morphism_to_json(const ClosedSetMap& f) {
  nlohmann::json image = nlohmann::json::object();
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    nlohmann::json targets = nlohmann::json::array();
    for (auto y : f.image_of(x).members()) {
      targets.push_back(finstoch::show_elem(f.cod().points().at(y)));
    }
    image[finstoch::show_elem(f.dom().points().at(x))] = std::move(targets);
  }
  return nlohmann::json{{"dom", space_to_json(f.dom())},
                        {"cod", space_to_json(f.cod())},
                        {"image", std::move(image)}};
}

ClosedSetMap morphism_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("image")) {
    throw std::invalid_argument("closed-set map JSON needs dom, cod and image");
  }
  FiniteTopSpace dom = space_from_json(j.at("dom")).space;
  FiniteTopSpace cod = space_from_json(j.at("cod")).space;
  std::vector<Bitset> image(dom.size(), Bitset(cod.size()));
  const auto& table = j.at("image");
  for (std::size_t x = 0; x < dom.size(); ++x) {
    const std::string key = finstoch::show_elem(dom.points().at(x));
    if (!table.contains(key)) {
      throw std::invalid_argument("closed-set map image missing entry for " + key);
    }
    for (const auto& target : table.at(key)) {
      bool found = false;
      for (std::size_t y = 0; y < cod.size(); ++y) {
        if (finstoch::show_elem(cod.points().at(y)) == target.get<std::string>()) {
          image[x].set(y);
          found = true;
        }
      }
      if (!found) {
        throw std::invalid_argument("image mentions unknown point " +
                                    target.get<std::string>());
      }
    }
  }
  return ClosedSetMap(std::move(dom), std::move(cod), std::move(image));
}

}  // namespace markovcat::vietoris
