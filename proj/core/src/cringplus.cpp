#include "markovcat/cringplus.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "markovcat/kernel.hpp"

namespace markovcat::cringplus {

PolyRing PolyRing::tensor(const PolyRing& a, const PolyRing& b) {
  std::vector<std::string> vars = a.vars_;
  vars.insert(vars.end(), b.vars_.begin(), b.vars_.end());
  return PolyRing(std::move(vars));
}

std::string PolyRing::var_display(std::size_t i) const {
  const std::string& name = vars_[i];
  if (std::count(vars_.begin(), vars_.end(), name) == 1) return name;
  return name + "#" + std::to_string(i);
}

std::string PolyRing::show() const {
  std::string out = "Z[";
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (i) out += ",";
    out += var_display(i);
  }
  out += "]";
  return out;
}

unsigned total_degree(const Monomial& m) {
  unsigned d = 0;
  for (auto e : m) d += e;
  return d;
}

Poly Poly::one(std::size_t arity) { return monomial(Monomial(arity, 0)); }

Poly Poly::monomial(Monomial m, Integer coeff) {
  Poly p(m.size());
  if (coeff != 0) p.terms_.emplace(std::move(m), std::move(coeff));
  return p;
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_.begin()->second == 1 &&
         total_degree(terms_.begin()->first) == 0;
}

void Poly::add_term(const Monomial& m, const Integer& coeff) {
  if (m.size() != arity_) throw std::invalid_argument("monomial arity mismatch");
  auto it = terms_.find(m);
  if (it == terms_.end()) {
    if (coeff != 0) terms_.emplace(m, coeff);
    return;
  }
  it->second += coeff;
  if (it->second == 0) terms_.erase(it);
}

Poly Poly::operator+(const Poly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

Poly Poly::operator-(const Poly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
  Poly out = *this;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

Poly Poly::operator*(const Poly& o) const {
  if (arity_ != o.arity_) throw std::invalid_argument("polynomial arity mismatch");
  Poly out(arity_);
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m(arity_);
      for (std::size_t i = 0; i < arity_; ++i) m[i] = m1[i] + m2[i];
      out.add_term(m, c1 * c2);
    }
  }
  return out;
}

Poly Poly::scaled(const Integer& c) const {
  Poly out(arity_);
  if (c == 0) return out;
  for (const auto& [m, coeff] : terms_) out.terms_.emplace(m, coeff * c);
  return out;
}

Poly Poly::outer(const Poly& a, const Poly& b) {
  Poly out(a.arity_ + b.arity_);
  for (const auto& [m1, c1] : a.terms_) {
    for (const auto& [m2, c2] : b.terms_) {
      Monomial m = m1;
      m.insert(m.end(), m2.begin(), m2.end());
      out.terms_.emplace(std::move(m), c1 * c2);
    }
  }
  return out;
}

std::string Poly::show(const PolyRing& ring) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    Integer abs = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
      first = false;
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    const bool constant = total_degree(m) == 0;
    if (abs != 1 || constant) out << abs.get_str();
    bool printed = abs != 1 || constant;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (m[i] == 0) continue;
      if (printed) out << "*";
      out << ring.var_display(i);
      if (m[i] > 1) out << "^" << m[i];
      printed = true;
    }
  }
  return out.str();
}

AdditiveMap::AdditiveMap(PolyRing dom, PolyRing cod, Rule rule, std::string name)
    : dom_(std::move(dom)), cod_(std::move(cod)), rule_(std::move(rule)),
      name_(std::move(name)) {
  const Poly unit_image = rule_(Monomial(cod_.arity(), 0));
  if (!unit_image.is_one()) {
    throw std::invalid_argument("representing map must be unit-preserving: " + name_);
  }
}

Poly AdditiveMap::apply(const Poly& p) const {
  if (p.arity() != cod_.arity()) {
    throw std::invalid_argument("polynomial does not live in the codomain ring of " + name_);
  }
  Poly out(dom_.arity());
  for (const auto& [m, c] : p.terms()) {
    out = out + rule_(m).scaled(c);
  }
  return out;
}

AdditiveMap CRingPlusOp::identity(const Object& x) const {
  return AdditiveMap(x, x, [](const Monomial& m) { return Poly::monomial(m); }, "id");
}

AdditiveMap CRingPlusOp::compose(const Morphism& f, const Morphism& g) const {
  if (!(f.cod() == g.dom())) {
    throw std::invalid_argument("compose: codomain of first factor differs from domain of second");
  }
  // Composite in the opposite category: the representing maps compose the
  // other way around.
  return AdditiveMap(
      f.dom(), g.cod(), [f, g](const Monomial& m) { return f.apply(g.on_monomial(m)); },
      "(" + f.name() + ";" + g.name() + ")");
}

AdditiveMap CRingPlusOp::tensor(const Morphism& f, const Morphism& g) const {
  const PolyRing dom = PolyRing::tensor(f.dom(), g.dom());
  const PolyRing cod = PolyRing::tensor(f.cod(), g.cod());
  const std::size_t split = f.cod().arity();
  return AdditiveMap(
      dom, cod,
      [f, g, split](const Monomial& m) {
        Monomial m1(m.begin(), m.begin() + static_cast<std::ptrdiff_t>(split));
        Monomial m2(m.begin() + static_cast<std::ptrdiff_t>(split), m.end());
        return Poly::outer(f.on_monomial(m1), g.on_monomial(m2));
      },
      "(" + f.name() + "(x)" + g.name() + ")");
}

AdditiveMap CRingPlusOp::copy(const Object& x) const {
  const std::size_t n = x.arity();
  return AdditiveMap(
      x, PolyRing::tensor(x, x),
      [n](const Monomial& m) {
        Monomial sum(n);
        for (std::size_t i = 0; i < n; ++i) sum[i] = m[i] + m[n + i];
        return Poly::monomial(std::move(sum));
      },
      "copy");
}

AdditiveMap CRingPlusOp::discard(const Object& x) const {
  const std::size_t n = x.arity();
  return AdditiveMap(
      x, PolyRing::integers(),
      [n](const Monomial&) { return Poly::one(n); }, "discard");
}

AdditiveMap CRingPlusOp::swap(const Object& a, const Object& b) const {
  const std::size_t na = a.arity(), nb = b.arity();
  return AdditiveMap(
      PolyRing::tensor(a, b), PolyRing::tensor(b, a),
      [na, nb](const Monomial& m) {
        // monomial of b (x) a; rotate the blocks to a (x) b
        Monomial out(m.begin() + static_cast<std::ptrdiff_t>(nb), m.end());
        out.insert(out.end(), m.begin(), m.begin() + static_cast<std::ptrdiff_t>(nb));
        (void)na;
        return Poly::monomial(std::move(out));
      },
      "swap");
}

bool CRingPlusOp::morphism_equal(const Morphism& f, const Morphism& g) const {
  if (!(f.dom() == g.dom()) || !(f.cod() == g.cod())) return false;
  for (const auto& m : monomials_up_to(f.cod(), eq_degree)) {
    if (f.on_monomial(m) != g.on_monomial(m)) return false;
  }
  return true;
}

std::string CRingPlusOp::show_morphism(const Morphism& f) const {
  std::ostringstream out;
  out << f.name() << ": " << f.dom().show() << " -> " << f.cod().show() << " [";
  bool first = true;
  for (const auto& m : monomials_up_to(f.cod(), 2)) {
    if (!first) out << ", ";
    out << Poly::monomial(m).show(f.cod()) << "|->" << f.on_monomial(m).show(f.dom());
    first = false;
  }
  out << ", ...]";
  return out.str();
}

namespace {

void enumerate_monomials(std::size_t arity, unsigned remaining, Monomial& current,
                         std::vector<Monomial>& out) {
  if (current.size() == arity) {
    out.push_back(current);
    return;
  }
  for (unsigned e = 0; e <= remaining; ++e) {
    current.push_back(e);
    enumerate_monomials(arity, remaining - e, current, out);
    current.pop_back();
  }
}

}  // namespace

std::vector<Monomial> monomials_up_to(const PolyRing& ring, unsigned bound) {
  std::vector<Monomial> out;
  Monomial current;
  enumerate_monomials(ring.arity(), bound, current, out);
  return out;
}

namespace {

const PolyRing& zt() {
  static const PolyRing ring({"t"});
  return ring;
}

}  // namespace

bool is_builtin_map(const std::string& name) {
  return name == "f" || name == "g" || name == "h1" || name == "h2";
}

AdditiveMap builtin_map(const std::string& name) {
  const PolyRing& r = zt();
  if (name == "f") {
    return AdditiveMap(
        r, r,
        [](const Monomial& m) {
          return m[0] >= 1 ? Poly::monomial({m[0] - 1}) : Poly::one(1);
        },
        "f");
  }
  if (name == "g") {
    return AdditiveMap(
        r, r,
        [](const Monomial& m) {
          return m[0] >= 1 ? Poly::monomial({1}) : Poly::one(1);
        },
        "g");
  }
  if (name == "h1") {
    return AdditiveMap(r, r, [](const Monomial& m) { return Poly::monomial(m); }, "h1");
  }
  if (name == "h2") {
    return AdditiveMap(r, r, [](const Monomial&) { return Poly::one(1); }, "h2");
  }
  throw std::invalid_argument("unknown builtin map: " + name);
}

bool is_multiplicative_on_grid(const AdditiveMap& f, unsigned bound) {
  const auto monos = monomials_up_to(f.cod(), bound);
  for (const auto& u : monos) {
    for (const auto& v : monos) {
      if (total_degree(u) + total_degree(v) > bound) continue;
      Monomial uv(u.size());
      for (std::size_t i = 0; i < u.size(); ++i) uv[i] = u[i] + v[i];
      if (f.on_monomial(uv) != f.on_monomial(u) * f.on_monomial(v)) return false;
    }
  }
  return true;
}

CheckReport check_noncausality(unsigned degree_bound) {
  if (degree_bound < 2) {
    throw std::invalid_argument("check_noncausality requires a degree bound >= 2");
  }
  const auto f = builtin_map("f");
  const auto g = builtin_map("g");
  const auto h1 = builtin_map("h1");
  const auto h2 = builtin_map("h2");

  auto fg = [&](const Poly& p) { return f.apply(g.apply(p)); };

  // Hypothesis: (fg)(h1(t^n) t^m) = 1 = (fg)(h2(t^n) t^m) for all n, m <= bound.
  for (unsigned n = 0; n <= degree_bound; ++n) {
    for (unsigned m = 0; m <= degree_bound; ++m) {
      const Poly tm = Poly::monomial({m});
      const Poly lhs = fg(h1.on_monomial({n}) * tm);
      const Poly rhs = fg(h2.on_monomial({n}) * tm);
      if (!(lhs.is_one() && rhs.is_one())) {
        return CheckReport::fail("n=" + std::to_string(n) + " m=" + std::to_string(m),
                                 "hypothesis value is not 1");
      }
    }
  }

  // Conclusion failure at (n, m, l) = (1, 0, 1): f(g(h_i(t) * 1) * t) gives
  // t for h1 and 1 for h2.
  const Poly t = Poly::monomial({1});
  const Poly via_h1 = f.apply(g.apply(h1.on_monomial({1})) * t);
  const Poly via_h2 = f.apply(g.apply(h2.on_monomial({1})) * t);
  if (!(via_h1 == t && via_h2.is_one())) {
    return CheckReport::fail(
        "h1 side " + via_h1.show(zt()) + ", h2 side " + via_h2.show(zt()),
        "expected values t and 1 at (n,m,l)=(1,0,1)");
  }

  // Cross-check with the generic causality probe at the same degree bound.
  const CRingPlusOp cat{degree_bound};
  const auto generic = kernel::check_causality_triple(cat, f, g, h1, h2);
  if (!generic.hypothesis_holds.value() || generic.conclusion_holds.value()) {
    return CheckReport::fail(generic.detail,
                             "generic probe disagrees with the direct computation");
  }

  CheckReport report;
  report.passed = true;
  report.hypothesis_holds = true;
  report.conclusion_holds = false;
  report.detail =
      "hypothesis holds for all n,m <= " + std::to_string(degree_bound) +
      "; conclusion fails at (n,m,l)=(1,0,1) with values t vs 1; generic probe agrees";
  return report;
}

namespace {

struct Parser {
  const PolyRing& ring;
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool eof() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& message) const {
    throw std::invalid_argument("polynomial parse error at position " +
                                std::to_string(pos) + " in '" + text + "': " + message);
  }

  unsigned parse_nat() {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      fail("expected a number");
    }
    unsigned long value = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      value = value * 10 + static_cast<unsigned long>(text[pos] - '0');
      if (value > 1000000) fail("number too large");
      ++pos;
    }
    return static_cast<unsigned>(value);
  }

  std::size_t parse_var() {
    skip_ws();
    std::string name;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
      name += text[pos++];
    }
    if (name.empty()) fail("expected a variable name");
    std::size_t found = ring.arity();
    for (std::size_t i = 0; i < ring.arity(); ++i) {
      if (ring.vars()[i] == name) {
        if (found != ring.arity()) fail("ambiguous variable '" + name + "'");
        found = i;
      }
    }
    if (found == ring.arity()) fail("unknown variable '" + name + "'");
    return found;
  }

  /// term := nat ['*' factors] | factors ; factors := var['^'nat] ('*' var['^'nat])*
  Poly parse_term() {
    Monomial m(ring.arity(), 0);
    Integer coeff = 1;
    bool saw_factor = false;
    skip_ws();
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      coeff = Integer(static_cast<long>(parse_nat()));
      saw_factor = true;
      if (peek() == '*') {
        ++pos;
        saw_factor = false;
      } else {
        return Poly::monomial(std::move(m), coeff);
      }
    }
    for (;;) {
      const std::size_t var = parse_var();
      unsigned exp = 1;
      if (peek() == '^') {
        ++pos;
        exp = parse_nat();
      }
      m[var] += exp;
      saw_factor = true;
      if (peek() == '*') {
        ++pos;
        continue;
      }
      break;
    }
    if (!saw_factor) fail("empty term");
    return Poly::monomial(std::move(m), coeff);
  }

  Poly parse_poly() {
    Poly out(ring.arity());
    bool negative = false;
    if (peek() == '-') {
      ++pos;
      negative = true;
    } else if (peek() == '+') {
      ++pos;
    }
    for (;;) {
      Poly term = parse_term();
      out = negative ? out - term : out + term;
      if (eof()) break;
      const char sign = peek();
      if (sign == '+') {
        negative = false;
      } else if (sign == '-') {
        negative = true;
      } else {
        fail("expected '+' or '-'");
      }
      ++pos;
    }
    return out;
  }
};

}  // namespace

Poly parse_poly(const PolyRing& ring, const std::string& text) {
  Parser p{ring, text};
  return p.parse_poly();
}

Monomial parse_monomial(const PolyRing& ring, const std::string& text) {
  const Poly p = parse_poly(ring, text);
  if (p.terms().size() != 1 || p.terms().begin()->second != 1) {
    throw std::invalid_argument("expected a single monomial with coefficient 1: " + text);
  }
  return p.terms().begin()->first;
}

AdditiveMap morphism_from_json(const nlohmann::json& j) {
  if (j.is_object() && j.contains("builtin")) {
    return builtin_map(j.at("builtin").get<std::string>());
  }
  if (!j.is_object() || !j.contains("dom") || !j.contains("cod") || !j.contains("table")) {
    throw std::invalid_argument("additive map JSON needs dom, cod and table (or builtin)");
  }
  PolyRing dom(j.at("dom").get<std::vector<std::string>>());
  PolyRing cod(j.at("cod").get<std::vector<std::string>>());
  std::string default_clause = j.value("default", std::string("identity"));
  if (default_clause == "identity" && !(dom == cod)) {
    throw std::invalid_argument("default clause 'identity' requires dom = cod");
  }
  if (default_clause != "identity" && default_clause != "one") {
    throw std::invalid_argument("default clause must be 'identity' or 'one'");
  }

  auto table = std::make_shared<std::map<Monomial, Poly>>();
  for (const auto& [key, value] : j.at("table").items()) {
    const Monomial m = parse_monomial(cod, key);
    Poly image = parse_poly(dom, value.get<std::string>());
    if (total_degree(m) == 0 && !image.is_one()) {
      throw std::invalid_argument("rule table must send the unit monomial to 1");
    }
    table->emplace(m, std::move(image));
  }
  const bool to_one = default_clause == "one";
  const std::size_t dom_arity = dom.arity();
  auto rule = [table, to_one, dom_arity](const Monomial& m) {
    if (total_degree(m) == 0) return Poly::one(dom_arity);
    auto it = table->find(m);
    if (it != table->end()) return it->second;
    return to_one ? Poly::one(dom_arity) : Poly::monomial(m);
  };
  return AdditiveMap(std::move(dom), std::move(cod), std::move(rule), "table");
}

}  // namespace markovcat::cringplus
