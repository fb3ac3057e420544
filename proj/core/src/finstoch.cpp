#include "markovcat/finstoch.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace markovcat::finstoch {

std::string show_elem(const Elem& e) {
  if (e.empty()) return "()";
  if (e.size() == 1) return e[0];
  std::string out = "(";
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i) out += ",";
    out += e[i];
  }
  out += ")";
  return out;
}

FinSet::FinSet(std::vector<std::string> labels) {
  if (labels.empty()) throw std::invalid_argument("finite set must be nonempty");
  std::set<std::string> seen;
  elems_.reserve(labels.size());
  for (auto& l : labels) {
    if (!seen.insert(l).second) {
      throw std::invalid_argument("duplicate label in finite set: " + l);
    }
    elems_.push_back(Elem{std::move(l)});
  }
}

FinSet::FinSet(raw_tag, std::vector<Elem> elems) : elems_(std::move(elems)) {
  if (elems_.empty()) throw std::invalid_argument("finite set must be nonempty");
}

FinSet FinSet::unit() { return FinSet(raw_tag{}, {Elem{}}); }

FinSet FinSet::from_elems(std::vector<Elem> elems) {
  std::set<Elem> seen;
  for (const auto& e : elems) {
    if (!seen.insert(e).second) {
      throw std::invalid_argument("duplicate element in finite set: " + show_elem(e));
    }
  }
  return FinSet(raw_tag{}, std::move(elems));
}

FinSet FinSet::product(const FinSet& a, const FinSet& b) {
  std::vector<Elem> elems;
  elems.reserve(a.size() * b.size());
  for (const auto& x : a.elems_) {
    for (const auto& y : b.elems_) {
      Elem e = x;
      e.insert(e.end(), y.begin(), y.end());
      elems.push_back(std::move(e));
    }
  }
  return FinSet(raw_tag{}, std::move(elems));
}

std::size_t FinSet::index_of(const Elem& e) const {
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] == e) return i;
  }
  throw std::out_of_range("element not in finite set: " + show_elem(e));
}

bool FinSet::contains(const Elem& e) const {
  return std::find(elems_.begin(), elems_.end(), e) != elems_.end();
}

std::string FinSet::show() const {
  std::string out = "{";
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ",";
    out += show_elem(elems_[i]);
  }
  out += "}";
  return out;
}

StochMatrix::StochMatrix(FinSet dom, FinSet cod, std::vector<Rational> entries)
    : dom_(std::move(dom)), cod_(std::move(cod)), entries_(std::move(entries)) {
  if (entries_.size() != dom_.size() * cod_.size()) {
    throw std::invalid_argument("stochastic matrix entry count does not match shape");
  }
  for (std::size_t x = 0; x < dom_.size(); ++x) {
    Rational sum = 0;
    for (std::size_t y = 0; y < cod_.size(); ++y) {
      const Rational& v = at(x, y);
      if (sgn(v) < 0) {
        throw std::invalid_argument("negative entry in stochastic matrix at row " +
                                    show_elem(dom_.at(x)));
      }
      sum += v;
    }
    if (sum != 1) {
      throw std::invalid_argument("row of stochastic matrix does not sum to 1: " +
                                  show_elem(dom_.at(x)) + " sums to " + format_rational(sum));
    }
  }
}

bool StochMatrix::operator==(const StochMatrix& other) const {
  return dom_ == other.dom_ && cod_ == other.cod_ && entries_ == other.entries_;
}

bool StochMatrix::is_zero_one() const {
  for (const auto& v : entries_) {
    if (v != 0 && v != 1) return false;
  }
  return true;
}

std::vector<bool> StochMatrix::support() const {
  std::vector<bool> sup(cod_.size(), false);
  for (std::size_t x = 0; x < dom_.size(); ++x) {
    for (std::size_t y = 0; y < cod_.size(); ++y) {
      if (sgn(at(x, y)) != 0) sup[y] = true;
    }
  }
  return sup;
}

std::string StochMatrix::show() const {
  std::ostringstream out;
  out << dom_.show() << " -> " << cod_.show() << " [";
  const std::size_t max_rows = 8, max_cols = 16;
  for (std::size_t x = 0; x < std::min(dom_.size(), max_rows); ++x) {
    if (x) out << "; ";
    for (std::size_t y = 0; y < std::min(cod_.size(), max_cols); ++y) {
      if (y) out << " ";
      out << format_rational(at(x, y));
    }
    if (cod_.size() > max_cols) out << " ...";
  }
  if (dom_.size() > max_rows) out << "; ...";
  out << "]";
  return out.str();
}

StochMatrix FinStoch::identity(const Object& x) const {
  std::vector<Rational> entries(x.size() * x.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) entries[i * x.size() + i] = 1;
  return StochMatrix(x, x, std::move(entries));
}

StochMatrix FinStoch::compose(const Morphism& f, const Morphism& g) const {
  if (f.cod() != g.dom()) {
    throw std::invalid_argument("compose: codomain of first factor " + f.cod().show() +
                                " differs from domain of second " + g.dom().show());
  }
  const std::size_t nx = f.dom().size(), ny = f.cod().size(), nz = g.cod().size();
  std::vector<Rational> entries(nx * nz, Rational(0));
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t y = 0; y < ny; ++y) {
      const Rational& fxy = f.at(x, y);
      if (sgn(fxy) == 0) continue;
      for (std::size_t z = 0; z < nz; ++z) {
        const Rational& gyz = g.at(y, z);
        if (sgn(gyz) == 0) continue;
        entries[x * nz + z] += fxy * gyz;
      }
    }
  }
  return StochMatrix(f.dom(), g.cod(), std::move(entries));
}

StochMatrix FinStoch::tensor(const Morphism& f, const Morphism& g) const {
  const FinSet dom = FinSet::product(f.dom(), g.dom());
  const FinSet cod = FinSet::product(f.cod(), g.cod());
  const std::size_t fc = f.cod().size(), gc = g.cod().size();
  std::vector<Rational> entries(dom.size() * cod.size(), Rational(0));
  for (std::size_t a = 0; a < f.dom().size(); ++a) {
    for (std::size_t b = 0; b < g.dom().size(); ++b) {
      const std::size_t row = a * g.dom().size() + b;
      for (std::size_t x = 0; x < fc; ++x) {
        const Rational& fax = f.at(a, x);
        if (sgn(fax) == 0) continue;
        for (std::size_t y = 0; y < gc; ++y) {
          const Rational& gby = g.at(b, y);
          if (sgn(gby) == 0) continue;
          entries[row * cod.size() + x * gc + y] = fax * gby;
        }
      }
    }
  }
  return StochMatrix(dom, cod, std::move(entries));
}

StochMatrix FinStoch::copy(const Object& x) const {
  const FinSet sq = FinSet::product(x, x);
  std::vector<Rational> entries(x.size() * sq.size(), Rational(0));
  for (std::size_t i = 0; i < x.size(); ++i) {
    entries[i * sq.size() + i * x.size() + i] = 1;
  }
  return StochMatrix(x, sq, std::move(entries));
}

StochMatrix FinStoch::discard(const Object& x) const {
  return StochMatrix(x, FinSet::unit(), std::vector<Rational>(x.size(), Rational(1)));
}

StochMatrix FinStoch::swap(const Object& a, const Object& b) const {
  const FinSet dom = FinSet::product(a, b);
  const FinSet cod = FinSet::product(b, a);
  std::vector<Rational> entries(dom.size() * cod.size(), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      entries[(i * b.size() + j) * cod.size() + (j * a.size() + i)] = 1;
    }
  }
  return StochMatrix(dom, cod, std::move(entries));
}

bool FinStoch::morphism_equal(const Morphism& f, const Morphism& g) const {
  return f == g;
}

StochMatrix dirac(const FinSet& x, const Elem& point) {
  std::vector<Rational> row(x.size(), Rational(0));
  row[x.index_of(point)] = 1;
  return StochMatrix(FinSet::unit(), x, std::move(row));
}

StochMatrix dirac(const FinSet& x, const std::string& label) {
  return dirac(x, Elem{label});
}

StochMatrix state(const FinSet& x, std::vector<Rational> row) {
  return StochMatrix(FinSet::unit(), x, std::move(row));
}

StochMatrix uniform_state(const FinSet& x) {
  return state(x, std::vector<Rational>(x.size(), Rational(1, static_cast<long>(x.size()))));
}

StochMatrix random_kernel(const FinSet& dom, const FinSet& cod, Rng& rng,
                          unsigned denominator_bound) {
  if (denominator_bound < 1) {
    throw std::invalid_argument("random_kernel requires denominator bound >= 1");
  }
  std::vector<Rational> entries;
  entries.reserve(dom.size() * cod.size());
  for (std::size_t x = 0; x < dom.size(); ++x) {
    const auto numerators =
        rng.composition(denominator_bound, static_cast<unsigned>(cod.size()));
    for (std::size_t y = 0; y < cod.size(); ++y) {
      Rational v(numerators[y], denominator_bound);
      v.canonicalize();
      entries.push_back(std::move(v));
    }
  }
  return StochMatrix(dom, cod, std::move(entries));
}

namespace {

nlohmann::json elem_to_json(const Elem& e) {
  if (e.size() == 1) return e[0];
  return nlohmann::json(e);
}

Elem elem_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Elem{j.get<std::string>()};
  if (j.is_array()) {
    Elem e;
    for (const auto& part : j) e.push_back(part.get<std::string>());
    return e;
  }
  throw std::invalid_argument("finite set element must be a string or array of strings");
}

}  // namespace

nlohmann::json finset_to_json(const FinSet& x) {
  nlohmann::json labels = nlohmann::json::array();
  for (const auto& e : x.elems()) labels.push_back(elem_to_json(e));
  return labels;
}

FinSet finset_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw std::invalid_argument("finite set must be a nonempty array of labels");
  }
  bool all_atoms = true;
  for (const auto& item : j) {
    if (!item.is_string()) all_atoms = false;
  }
  if (all_atoms) {
    return FinSet(j.get<std::vector<std::string>>());
  }
  std::vector<Elem> elems;
  for (const auto& item : j) elems.push_back(elem_from_json(item));
  return FinSet::from_elems(std::move(elems));
}

nlohmann::json morphism_to_json(const StochMatrix& f) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t y = 0; y < f.cod().size(); ++y) {
      row.push_back(format_rational(f.at(x, y)));
    }
    rows.push_back(std::move(row));
  }
  return nlohmann::json{{"dom", finset_to_json(f.dom())},
                        {"cod", finset_to_json(f.cod())},
                        {"rows", std::move(rows)}};
}

StochMatrix morphism_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("rows")) {
    throw std::invalid_argument("stochastic matrix JSON needs dom, cod and rows");
  }
  FinSet dom = finset_from_json(j.at("dom"));
  FinSet cod = finset_from_json(j.at("cod"));
  const auto& rows = j.at("rows");
  if (!rows.is_array() || rows.size() != dom.size()) {
    throw std::invalid_argument("row count does not match domain size");
  }
  std::vector<Rational> entries;
  entries.reserve(dom.size() * cod.size());
  for (const auto& row : rows) {
    if (!row.is_array() || row.size() != cod.size()) {
      throw std::invalid_argument("row length does not match codomain size");
    }
    for (const auto& cell : row) {
      if (cell.is_number_integer()) {
        entries.emplace_back(cell.get<long>());
      } else {
        entries.push_back(parse_rational(cell.get<std::string>()));
      }
    }
  }
  return StochMatrix(std::move(dom), std::move(cod), std::move(entries));
}

}  // namespace markovcat::finstoch
