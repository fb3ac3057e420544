#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "markovcat/category.hpp"
#include "markovcat/check_report.hpp"
#include "markovcat/kernel.hpp"

namespace markovcat::projective {

using Label = std::string;

/// Canonical label order: shortlex, so numeric suffixes sort numerically.
/// Tensor factors of X_F are always arranged in this order.
bool label_less(const Label& a, const Label& b);

/// Sorted duplicate-free label set in canonical order.
using LabelSet = std::vector<Label>;
LabelSet canonical_labels(std::vector<Label> labels);

/// Countable index set with a stable, reproducible enumeration and decidable
/// membership; the enumeration order fixes window tie-breaking everywhere.
struct IndexSet {
  std::string name;
  std::function<Label(std::size_t)> label_at;
  std::function<bool(const Label&)> contains;
  std::function<std::size_t(const Label&)> position_of;

  /// Labels prefix0, prefix1, prefix2, ...
  static IndexSet naturals(std::string prefix);
  static IndexSet finite(std::vector<Label> labels);
  static IndexSet disjoint_union(IndexSet a, IndexSet b);

  /// First n labels in enumeration order (not sorted).
  std::vector<Label> window(std::size_t n) const;
};

std::string show_labels(const std::vector<Label>& labels);

/// Computable injection of index positions into index positions. The
/// preimage function decides membership of the image on any finite window;
/// finite permutations fix all but finitely many positions.
struct IndexInjection {
  std::string name;
  std::function<std::size_t(std::size_t)> map;
  std::function<std::optional<std::size_t>(std::size_t)> preimage;
  bool finite_permutation = false;

  static IndexInjection identity();
  static IndexInjection transposition(std::size_t i, std::size_t j);
  /// Finite permutation given by its image on 0..image.size()-1.
  static IndexInjection permutation(std::vector<std::size_t> image);
  /// n -> stride*n + offset (injective for stride >= 1).
  static IndexInjection stride(std::size_t stride, std::size_t offset);
  static IndexInjection shift(std::size_t k);
  /// Acting by a then by b equals acting by composite(a, b); as a function
  /// it is n -> a(b(n)).
  static IndexInjection composite(const IndexInjection& a, const IndexInjection& b);
};

/// Lazily evaluated family of finite-window joints: for every finite label
/// set F it yields a morphism A -> X_F with the factors in canonical label
/// order. Coherence under marginalization is the defining invariant and is
/// checked by validate_compatibility. Memoization is synchronized; all
/// semantics are pure, so results do not depend on evaluation interleaving.
template <Category C>
class CompatibleFamily {
 public:
  using Object = typename C::Object;
  using Morphism = typename C::Morphism;
  using AssignFn = std::function<Morphism(const LabelSet&)>;
  using FactorFn = std::function<Object(const Label&)>;

  CompatibleFamily(C cat, Object domain, IndexSet index, FactorFn factor, AssignFn assign,
                   std::string description)
      : cat_(std::move(cat)), domain_(std::move(domain)), index_(std::move(index)),
        factor_(std::move(factor)), assign_(std::move(assign)),
        description_(std::move(description)),
        memo_(std::make_shared<Memo>()) {}

  const C& category() const { return cat_; }
  const Object& domain() const { return domain_; }
  const IndexSet& index() const { return index_; }
  const std::string& description() const { return description_; }

  Object factor(const Label& label) const { return factor_(label); }

  std::vector<Object> factors(const LabelSet& labels) const {
    std::vector<Object> out;
    out.reserve(labels.size());
    for (const auto& l : labels) out.push_back(factor_(l));
    return out;
  }

  /// Joint over the given labels (canonicalized); memoized.
  Morphism assign(std::vector<Label> labels) const {
    LabelSet key = canonical_labels(std::move(labels));
    {
      std::lock_guard<std::mutex> lock(memo_->mutex);
      auto it = memo_->cache.find(key);
      if (it != memo_->cache.end()) return it->second;
    }
    Morphism value = assign_(key);
    std::lock_guard<std::mutex> lock(memo_->mutex);
    return memo_->cache.emplace(std::move(key), std::move(value)).first->second;
  }

  Morphism assign_positions(const std::vector<std::size_t>& positions) const {
    std::vector<Label> labels;
    labels.reserve(positions.size());
    for (auto i : positions) labels.push_back(index_.label_at(i));
    return assign(std::move(labels));
  }

  /// Same family with one window's joint replaced; for corruption tests.
  CompatibleFamily with_override(std::vector<Label> labels, Morphism replacement) const {
    LabelSet key = canonical_labels(std::move(labels));
    AssignFn base = assign_;
    AssignFn patched = [base, key, replacement](const LabelSet& f) {
      return f == key ? replacement : base(f);
    };
    return CompatibleFamily(cat_, domain_, index_, factor_, std::move(patched),
                            description_ + " (overridden at " + show_labels(key) + ")");
  }

 private:
  struct Memo {
    std::mutex mutex;
    std::map<LabelSet, Morphism> cache;
  };

  C cat_;
  Object domain_;
  IndexSet index_;
  FactorFn factor_;
  AssignFn assign_;
  std::string description_;
  std::shared_ptr<Memo> memo_;
};

/// Family of independent components q_l : A -> X_l: the joint over F is the
/// |F|-fold copy of A followed by the tensor of the components.
template <Category C>
CompatibleFamily<C> independent_family(
    const C& cat, typename C::Object domain, IndexSet index,
    std::function<typename C::Morphism(const Label&)> component, std::string description) {
  using Morphism = typename C::Morphism;
  auto factor = [cat, component](const Label& l) { return cat.cod(component(l)); };
  auto domain_copy = domain;
  auto assign = [cat, domain_copy, component](const LabelSet& f) -> Morphism {
    if (f.empty()) return cat.discard(domain_copy);
    std::vector<Morphism> parts;
    parts.reserve(f.size());
    for (const auto& l : f) {
      Morphism q = component(l);
      if (!cat.object_equal(cat.dom(q), domain_copy)) {
        throw std::invalid_argument("family component has wrong domain at label " + l);
      }
      parts.push_back(std::move(q));
    }
    return cat.compose(kernel::n_fold_copy(cat, domain_copy, f.size()),
                       kernel::tensor_list(cat, parts));
  };
  return CompatibleFamily<C>(cat, std::move(domain), std::move(index), std::move(factor),
                             std::move(assign), std::move(description));
}

/// All components equal: the canonical independent and identically
/// distributed family on the index set.
template <Category C>
CompatibleFamily<C> iid_family(const C& cat, const typename C::Morphism& q, IndexSet index) {
  auto component = [q](const Label&) { return q; };
  return independent_family<C>(cat, cat.dom(q), std::move(index), component,
                               "iid(" + cat.show_morphism(q) + ")");
}

/// One-label family.
template <Category C>
CompatibleFamily<C> singleton_family(const C& cat, const typename C::Morphism& q,
                                     Label label) {
  return independent_family<C>(
      cat, cat.dom(q), IndexSet::finite({label}), [q](const Label&) { return q; },
      "singleton(" + label + ")");
}

namespace detail {

/// Permutation sending the concatenated source label list onto its canonical
/// order; perm[k] is the source slot feeding output slot k.
inline std::vector<std::size_t> reorder_permutation(const std::vector<Label>& source,
                                                    const std::vector<Label>& target) {
  std::vector<std::size_t> perm;
  perm.reserve(target.size());
  for (const auto& l : target) {
    auto it = std::find(source.begin(), source.end(), l);
    if (it == source.end()) throw std::logic_error("reorder: label missing from source");
    perm.push_back(static_cast<std::size_t>(it - source.begin()));
  }
  return perm;
}

}  // namespace detail

/// Joint family of two independent families over disjoint label sets: the
/// assignment over F tensors the two partial joints and copies the common
/// domain. Proper-subset windows recover each family marginally.
template <Category C>
CompatibleFamily<C> product_family(const CompatibleFamily<C>& f1,
                                   const CompatibleFamily<C>& f2) {
  const C cat = f1.category();
  if (!cat.object_equal(f1.domain(), f2.domain())) {
    throw std::invalid_argument("product family requires a common domain");
  }
  IndexSet j1 = f1.index(), j2 = f2.index();
  auto domain = f1.domain();
  auto factor = [f1, f2, j1, j2](const Label& l) {
    if (j1.contains(l) && j2.contains(l)) {
      throw std::invalid_argument("label collision between family index sets: " + l);
    }
    return j1.contains(l) ? f1.factor(l) : f2.factor(l);
  };
  auto assign = [cat, domain, f1, f2, j1, j2](const LabelSet& f) {
    LabelSet part1, part2;
    for (const auto& l : f) {
      const bool in1 = j1.contains(l), in2 = j2.contains(l);
      if (in1 && in2) {
        throw std::invalid_argument("label collision between family index sets: " + l);
      }
      if (!in1 && !in2) {
        throw std::invalid_argument("label outside both index sets: " + l);
      }
      (in1 ? part1 : part2).push_back(l);
    }
    if (f.empty()) return cat.discard(domain);
    const auto m =
        cat.compose(cat.copy(domain), cat.tensor(f1.assign(part1), f2.assign(part2)));
    std::vector<Label> source = part1;
    source.insert(source.end(), part2.begin(), part2.end());
    if (source == f) return m;
    std::vector<typename C::Object> source_factors;
    for (const auto& l : part1) source_factors.push_back(f1.factor(l));
    for (const auto& l : part2) source_factors.push_back(f2.factor(l));
    return cat.compose(m, kernel::permute_factors(
                              cat, source_factors,
                              detail::reorder_permutation(source, f)));
  };
  return CompatibleFamily<C>(cat, std::move(domain),
                             IndexSet::disjoint_union(std::move(j1), std::move(j2)),
                             std::move(factor), std::move(assign),
                             "product(" + f1.description() + ", " + f2.description() + ")");
}

/// Joint over F computed through an explicit finite group selection G: every
/// family whose index set meets F must be listed in G. Used to verify that
/// the two-stage assignment does not depend on the choice of G.
template <Category C>
typename C::Morphism regroup_assign_with_group(const C& cat,
                                               const std::vector<CompatibleFamily<C>>& fams,
                                               const LabelSet& f,
                                               const std::vector<std::size_t>& group) {
  if (fams.empty()) throw std::invalid_argument("regroup requires at least one family");
  const auto domain = fams.front().domain();
  std::vector<LabelSet> parts(fams.size());
  for (const auto& l : f) {
    std::size_t owner = fams.size();
    for (std::size_t k = 0; k < fams.size(); ++k) {
      if (fams[k].index().contains(l)) {
        if (owner != fams.size()) {
          throw std::invalid_argument("label collision between grouped families: " + l);
        }
        owner = k;
      }
    }
    if (owner == fams.size()) {
      throw std::invalid_argument("label outside all grouped index sets: " + l);
    }
    parts[owner].push_back(l);
  }
  for (std::size_t k = 0; k < fams.size(); ++k) {
    if (!parts[k].empty() &&
        std::find(group.begin(), group.end(), k) == group.end()) {
      throw std::invalid_argument("group selection misses a family that meets the window");
    }
  }
  if (group.empty()) return cat.discard(domain);
  std::vector<typename C::Morphism> legs;
  std::vector<Label> source;
  std::vector<typename C::Object> source_factors;
  for (auto k : group) {
    if (k >= fams.size()) throw std::invalid_argument("group index out of range");
    legs.push_back(fams[k].assign(parts[k]));
    for (const auto& l : parts[k]) {
      source.push_back(l);
      source_factors.push_back(fams[k].factor(l));
    }
  }
  auto m = cat.compose(kernel::n_fold_copy(cat, domain, group.size()),
                       kernel::tensor_list(cat, legs));
  if (source == f) return m;
  return cat.compose(m, kernel::permute_factors(cat, source_factors,
                                                detail::reorder_permutation(source, f)));
}

/// Single family over the disjoint union of the index sets; the assignment
/// uses the minimal group of families meeting the window.
template <Category C>
CompatibleFamily<C> regroup_family(const C& cat, std::vector<CompatibleFamily<C>> fams) {
  if (fams.empty()) throw std::invalid_argument("regroup requires at least one family");
  for (std::size_t k = 1; k < fams.size(); ++k) {
    if (!cat.object_equal(fams[k].domain(), fams.front().domain())) {
      throw std::invalid_argument("regroup requires a common domain");
    }
  }
  IndexSet index = fams.front().index();
  for (std::size_t k = 1; k < fams.size(); ++k) {
    index = IndexSet::disjoint_union(std::move(index), fams[k].index());
  }
  auto domain = fams.front().domain();
  auto factor = [fams](const Label& l) {
    for (const auto& fam : fams) {
      if (fam.index().contains(l)) return fam.factor(l);
    }
    throw std::invalid_argument("label outside all grouped index sets: " + l);
  };
  auto assign = [cat, fams](const LabelSet& f) {
    std::vector<std::size_t> group;
    for (std::size_t k = 0; k < fams.size(); ++k) {
      for (const auto& l : f) {
        if (fams[k].index().contains(l)) {
          group.push_back(k);
          break;
        }
      }
    }
    return regroup_assign_with_group(cat, fams, f, group);
  };
  std::string description = "regroup(";
  for (std::size_t k = 0; k < fams.size(); ++k) {
    if (k) description += ", ";
    description += fams[k].description();
  }
  description += ")";
  return CompatibleFamily<C>(cat, std::move(domain), std::move(index), std::move(factor),
                             std::move(assign), std::move(description));
}

/// Checks the marginalization coherence over every pair F inside F' within
/// the first `depth` labels, exactly.
template <Category C>
CheckReport validate_compatibility(const CompatibleFamily<C>& fam, std::size_t depth) {
  const C& cat = fam.category();
  const auto window = fam.index().window(depth);
  for (std::size_t outer = 1; outer < (std::size_t{1} << depth); ++outer) {
    std::vector<Label> big_labels;
    for (std::size_t i = 0; i < depth; ++i) {
      if (outer & (std::size_t{1} << i)) big_labels.push_back(window[i]);
    }
    const LabelSet big = canonical_labels(big_labels);
    const auto joint = fam.assign(big);
    const auto split = kernel::TensorSplit<typename C::Object>{fam.factors(big)};
    // all proper sub-windows, down to and including the empty one
    std::size_t sub = (outer - 1) & outer;
    for (;;) {
      std::vector<Label> small_labels;
      for (std::size_t i = 0; i < depth; ++i) {
        if (sub & (std::size_t{1} << i)) small_labels.push_back(window[i]);
      }
      const LabelSet small = canonical_labels(small_labels);
      std::vector<std::size_t> keep;
      for (std::size_t k = 0; k < big.size(); ++k) {
        if (std::find(small.begin(), small.end(), big[k]) != small.end()) keep.push_back(k);
      }
      const auto marginal = kernel::marginalize(cat, joint, split, keep);
      if (!cat.morphism_equal(marginal, fam.assign(small))) {
        return CheckReport::fail(
            "windows " + show_labels(small) + " inside " + show_labels(big),
            "marginal of the larger joint differs from the assigned smaller joint");
      }
      if (sub == 0) break;
      sub = (sub - 1) & outer;
    }
  }
  return CheckReport::pass("coherence verified on window " + show_labels(window));
}

/// The joint over sigma(F), reindexed back along sigma to a morphism into
/// X_F. For invariant families this equals assign(F) exactly.
template <Category C>
typename C::Morphism injection_action(const CompatibleFamily<C>& fam,
                                      const IndexInjection& sigma,
                                      const std::vector<std::size_t>& positions) {
  const C& cat = fam.category();
  std::vector<std::size_t> mapped;
  mapped.reserve(positions.size());
  for (auto i : positions) mapped.push_back(sigma.map(i));
  {
    auto sorted = mapped;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
      throw std::invalid_argument("injection is not injective on the window");
    }
  }
  std::vector<Label> f_labels, mapped_labels;
  for (auto i : positions) f_labels.push_back(fam.index().label_at(i));
  for (auto i : mapped) mapped_labels.push_back(fam.index().label_at(i));
  for (std::size_t k = 0; k < positions.size(); ++k) {
    if (!cat.object_equal(fam.factor(f_labels[k]), fam.factor(mapped_labels[k]))) {
      throw std::invalid_argument("injection moves label " + f_labels[k] +
                                  " onto a different factor object");
    }
  }
  const LabelSet target = canonical_labels(f_labels);
  const LabelSet source_sorted = canonical_labels(mapped_labels);
  const auto joint = fam.assign(source_sorted);
  if (target.empty()) return joint;

  // output slot k carries target[k] = label(i); its data comes from the
  // factor at label(sigma(i)) inside the sorted source product
  std::vector<std::size_t> perm;
  perm.reserve(target.size());
  for (const auto& l : target) {
    const std::size_t k =
        static_cast<std::size_t>(std::find(f_labels.begin(), f_labels.end(), l) -
                                 f_labels.begin());
    const auto& source_label = mapped_labels[k];
    perm.push_back(static_cast<std::size_t>(
        std::find(source_sorted.begin(), source_sorted.end(), source_label) -
        source_sorted.begin()));
  }
  return cat.compose(joint,
                     kernel::permute_factors(cat, fam.factors(source_sorted), perm));
}

/// True iff the reindexed joint equals the plain joint on the window.
template <Category C>
bool injection_invariant(const CompatibleFamily<C>& fam, const IndexInjection& sigma,
                         const std::vector<std::size_t>& positions) {
  const auto acted = injection_action(fam, sigma, positions);
  return fam.category().morphism_equal(acted, fam.assign_positions(positions));
}

/// The acted family itself: its joint over F is the reindexed joint of the
/// underlying family over sigma(F). Acting twice agrees with acting by the
/// composite injection.
template <Category C>
CompatibleFamily<C> injection_act_family(const CompatibleFamily<C>& fam,
                                         const IndexInjection& sigma) {
  const C cat = fam.category();
  IndexSet index = fam.index();
  auto factor = [fam](const Label& l) { return fam.factor(l); };
  auto assign = [fam, sigma, index](const LabelSet& f) {
    std::vector<std::size_t> positions;
    positions.reserve(f.size());
    for (const auto& l : f) positions.push_back(index.position_of(l));
    return injection_action(fam, sigma, positions);
  };
  return CompatibleFamily<C>(cat, fam.domain(), std::move(index), std::move(factor),
                             std::move(assign),
                             sigma.name + "^(" + fam.description() + ")");
}

/// Statistic factoring through a finite window: the deterministic map out of
/// X_G applied after marginalizing to G.
template <Category C>
struct Statistic {
  std::vector<std::size_t> positions;  // G, as index positions
  typename C::Morphism map;            // deterministic X_G -> T
};

template <Category C>
bool family_displays_independence(const CompatibleFamily<C>& fam,
                                  const std::vector<std::size_t>& positions) {
  std::vector<Label> labels;
  for (auto i : positions) labels.push_back(fam.index().label_at(i));
  const LabelSet sorted = canonical_labels(std::move(labels));
  const auto joint = fam.assign(sorted);
  return kernel::displays_ci(fam.category(), joint,
                             kernel::TensorSplit<typename C::Object>{fam.factors(sorted)});
}

/// For every window G containing the distinguished position within the
/// first `depth` labels, the joint must display the binary independence of
/// X_i from the rest given A, provided the family displays independence on
/// the full window.
template <Category C>
CheckReport check_infindep_lemma(const CompatibleFamily<C>& fam, std::size_t position,
                                 std::size_t depth) {
  if (position >= depth) {
    throw std::invalid_argument("distinguished position must lie inside the depth window");
  }
  const C& cat = fam.category();
  std::vector<std::size_t> window_positions(depth);
  for (std::size_t i = 0; i < depth; ++i) window_positions[i] = i;
  CheckReport report;
  if (!family_displays_independence(fam, window_positions)) {
    report.passed = true;
    report.precondition_holds = false;
    report.detail = "family does not display independence on the window; lemma not applicable";
    return report;
  }
  report.precondition_holds = true;
  const Label pivot = fam.index().label_at(position);
  for (std::size_t mask = 0; mask < (std::size_t{1} << depth); ++mask) {
    if (!(mask & (std::size_t{1} << position))) continue;
    std::vector<Label> labels;
    for (std::size_t i = 0; i < depth; ++i) {
      if (mask & (std::size_t{1} << i)) labels.push_back(fam.index().label_at(i));
    }
    const LabelSet sorted = canonical_labels(labels);
    if (sorted.size() == 1) continue;  // binary split needs a complement
    const auto joint = fam.assign(sorted);
    const auto factors = fam.factors(sorted);
    // bring the pivot factor to the front
    const std::size_t pivot_slot = static_cast<std::size_t>(
        std::find(sorted.begin(), sorted.end(), pivot) - sorted.begin());
    std::vector<std::size_t> perm{pivot_slot};
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (k != pivot_slot) perm.push_back(k);
    }
    const auto fronted =
        cat.compose(joint, kernel::permute_factors(cat, factors, perm));
    std::vector<typename C::Object> rest;
    for (std::size_t k = 0; k < sorted.size(); ++k) {
      if (k != pivot_slot) rest.push_back(factors[k]);
    }
    const kernel::TensorSplit<typename C::Object> split{
        {factors[pivot_slot], kernel::tensor_all(cat, rest)}};
    if (!kernel::displays_ci(cat, fronted, split)) {
      return CheckReport::fail("window " + show_labels(sorted),
                               "pivot factor is not independent of the rest given A");
    }
  }
  report.passed = true;
  report.hypothesis_holds = true;
  report.conclusion_holds = true;
  report.detail = "independence of " + pivot + " verified on all windows within depth " +
                  std::to_string(depth);
  return report;
}

/// If the joint of X and T = s(X) displays their independence given A, the
/// composite s after p must be deterministic. The implication must never be
/// violated; hypothesis and conclusion are both reported.
template <Category C>
CheckReport check_determinism_lemma(const C& cat, const typename C::Morphism& p,
                                    const typename C::Morphism& s) {
  if (!kernel::is_deterministic(cat, s)) {
    throw std::invalid_argument("determinism lemma requires a deterministic statistic");
  }
  const auto x = cat.cod(p);
  if (!cat.object_equal(cat.dom(s), x)) {
    throw std::invalid_argument("statistic domain must match the codomain of p");
  }
  const auto joint =
      cat.compose(cat.compose(p, cat.copy(x)), cat.tensor(cat.identity(x), s));
  const bool hypothesis = kernel::displays_ci(
      cat, joint, kernel::TensorSplit<typename C::Object>{{x, cat.cod(s)}});
  const bool conclusion = kernel::is_deterministic(cat, cat.compose(p, s));
  CheckReport report;
  report.hypothesis_holds = hypothesis;
  report.conclusion_holds = conclusion;
  report.passed = !(hypothesis && !conclusion);
  report.detail = std::string("joint CI ") + (hypothesis ? "holds" : "fails") +
                  ", composite " + (conclusion ? "deterministic" : "not deterministic");
  if (!report.passed) {
    report.witness = "p=" + cat.show_morphism(p) + " s=" + cat.show_morphism(s);
  }
  return report;
}

/// Finite-window form of the zero-one law: p : A -> X_F displays the full
/// independence, s factors through G inside F, and whenever the joint of
/// X_F' and T displays independence for every F' inside F, the composite
/// statistic must be deterministic.
template <Category C>
CheckReport check_kolmogorov_finite(const C& cat, const typename C::Morphism& p,
                                    const std::vector<typename C::Object>& factors,
                                    const Statistic<C>& statistic) {
  if (!kernel::is_deterministic(cat, statistic.map)) {
    throw std::invalid_argument("statistic must be deterministic");
  }
  const kernel::TensorSplit<typename C::Object> split{factors};
  kernel::require_split_matches(cat, p, split);
  for (auto g : statistic.positions) {
    if (g >= factors.size()) {
      throw std::invalid_argument("statistic window must lie inside the factor list");
    }
  }
  CheckReport report;
  if (!kernel::displays_ci(cat, p, split)) {
    report.passed = true;
    report.precondition_holds = false;
    report.detail = "p does not display the independence of its factors; not applicable";
    return report;
  }
  report.precondition_holds = true;

  const auto projection_g = kernel::projection(
      cat, factors,
      [&] {
        std::vector<bool> mask(factors.size(), false);
        for (auto g : statistic.positions) mask[g] = true;
        return mask;
      }());
  const auto s_of_x = cat.compose(projection_g, statistic.map);
  const auto x_f = kernel::tensor_all(cat, factors);
  if (!cat.object_equal(cat.dom(s_of_x), x_f)) {
    throw std::invalid_argument("statistic map does not match the selected window");
  }

  // one full joint A -> X_F (x) T; every smaller joint is a marginal of it
  const auto full_joint = cat.compose(cat.compose(p, cat.copy(x_f)),
                                      cat.tensor(cat.identity(x_f), s_of_x));
  std::vector<typename C::Object> joint_factors = factors;
  joint_factors.push_back(cat.cod(statistic.map));
  const kernel::TensorSplit<typename C::Object> joint_split{joint_factors};

  bool hypothesis = true;
  std::string failing_window;
  for (std::size_t mask = 0; mask < (std::size_t{1} << factors.size()); ++mask) {
    std::vector<std::size_t> keep;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (mask & (std::size_t{1} << i)) keep.push_back(i);
    }
    keep.push_back(factors.size());  // keep T
    const auto joint = kernel::marginalize(cat, full_joint, joint_split, keep);
    std::vector<typename C::Object> kept;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (mask & (std::size_t{1} << i)) kept.push_back(factors[i]);
    }
    const kernel::TensorSplit<typename C::Object> binary{
        {kernel::tensor_all(cat, kept), cat.cod(statistic.map)}};
    if (!kernel::displays_ci(cat, joint, binary)) {
      hypothesis = false;
      failing_window = std::to_string(mask);
      break;
    }
  }
  const bool conclusion = kernel::is_deterministic(cat, cat.compose(p, s_of_x));
  report.hypothesis_holds = hypothesis;
  report.conclusion_holds = conclusion;
  report.passed = !(hypothesis && !conclusion);
  report.detail = hypothesis
                      ? std::string("all window joints display independence from T; "
                                    "composite ") +
                            (conclusion ? "deterministic" : "NOT deterministic")
                      : "joint with T fails independence at window mask " + failing_window +
                            "; no claim";
  if (!report.passed) report.witness = "p=" + cat.show_morphism(p);
  return report;
}

/// Truncated splitting equation behind the permutation-invariance law: for
/// injections with disjoint images, the pair of reindexed joints under a
/// copied domain equals the reindexed joint over the union window.
template <Category C>
CheckReport check_hs_splitting(const CompatibleFamily<C>& fam, const IndexInjection& tau1,
                               const IndexInjection& tau2,
                               const std::vector<std::size_t>& f1,
                               const std::vector<std::size_t>& f2) {
  const C& cat = fam.category();
  std::vector<std::size_t> image1, image2;
  for (auto i : f1) image1.push_back(tau1.map(i));
  for (auto i : f2) image2.push_back(tau2.map(i));
  for (auto a : image1) {
    for (auto b : image2) {
      if (a == b) {
        throw std::invalid_argument("injection images overlap on the window at position " +
                                    std::to_string(a));
      }
    }
  }
  std::vector<std::size_t> union_positions = image1;
  union_positions.insert(union_positions.end(), image2.begin(), image2.end());

  CheckReport report;
  if (!family_displays_independence(fam, union_positions)) {
    report.passed = true;
    report.precondition_holds = false;
    report.detail = "family does not display independence on the union window";
    return report;
  }
  // exchangeability at truncation: transpositions within the union window
  for (std::size_t a = 0; a < union_positions.size(); ++a) {
    for (std::size_t b = a + 1; b < union_positions.size(); ++b) {
      const auto tr =
          IndexInjection::transposition(union_positions[a], union_positions[b]);
      if (!injection_invariant(fam, tr, union_positions)) {
        report.passed = true;
        report.precondition_holds = false;
        report.detail = "family is not exchangeable on the union window";
        return report;
      }
    }
  }
  report.precondition_holds = true;

  const auto act1 = injection_action(fam, tau1, f1);
  const auto act2 = injection_action(fam, tau2, f2);
  const auto lhs =
      cat.compose(cat.copy(fam.domain()), cat.tensor(act1, act2));

  // reindex the union joint onto the concatenated F1, F2 slots
  std::vector<Label> f1_labels, f2_labels, mapped_labels;
  for (auto i : f1) f1_labels.push_back(fam.index().label_at(i));
  for (auto i : f2) f2_labels.push_back(fam.index().label_at(i));
  for (auto i : union_positions) mapped_labels.push_back(fam.index().label_at(i));
  const LabelSet union_sorted = canonical_labels(mapped_labels);
  const auto union_joint = fam.assign(union_sorted);

  const LabelSet t1 = canonical_labels(f1_labels);
  const LabelSet t2 = canonical_labels(f2_labels);
  std::vector<std::size_t> perm;
  auto source_slot_for = [&](const IndexInjection& tau, const std::vector<std::size_t>& window,
                             const std::vector<Label>& window_labels, const Label& l) {
    const std::size_t k = static_cast<std::size_t>(
        std::find(window_labels.begin(), window_labels.end(), l) - window_labels.begin());
    const Label source_label = fam.index().label_at(tau.map(window[k]));
    return static_cast<std::size_t>(
        std::find(union_sorted.begin(), union_sorted.end(), source_label) -
        union_sorted.begin());
  };
  for (const auto& l : t1) perm.push_back(source_slot_for(tau1, f1, f1_labels, l));
  for (const auto& l : t2) perm.push_back(source_slot_for(tau2, f2, f2_labels, l));
  const auto rhs =
      perm.empty() ? union_joint
                   : cat.compose(union_joint,
                                 kernel::permute_factors(cat, fam.factors(union_sorted), perm));

  if (cat.morphism_equal(lhs, rhs)) {
    report.passed = true;
    report.hypothesis_holds = true;
    report.conclusion_holds = true;
    report.detail = "splitting equation holds on windows " + show_labels(t1) + " and " +
                    show_labels(t2);
    return report;
  }
  return CheckReport::fail(
      "lhs=" + cat.show_morphism(lhs) + " rhs=" + cat.show_morphism(rhs),
      "splitting equation fails on windows " + show_labels(t1) + " and " + show_labels(t2));
}

/// If pairing two applications of a deterministic f with one of g over a
/// copied input of p gives the same joint as pairing f with itself, then f
/// and g agree p-almost surely. Valid in causal instances.
template <Category C>
CheckReport check_aseq_lemma(const C& cat, const typename C::Morphism& p,
                             const typename C::Morphism& f, const typename C::Morphism& g) {
  if (!kernel::is_deterministic(cat, f)) {
    throw std::invalid_argument("the lemma requires f deterministic");
  }
  const auto x = cat.cod(p);
  const auto paired = cat.compose(p, cat.copy(x));
  const bool hypothesis = cat.morphism_equal(cat.compose(paired, cat.tensor(f, f)),
                                             cat.compose(paired, cat.tensor(f, g)));
  const bool conclusion = kernel::as_equal(cat, p, f, g);
  CheckReport report;
  report.hypothesis_holds = hypothesis;
  report.conclusion_holds = conclusion;
  report.passed = !(hypothesis && !conclusion);
  report.detail = std::string("pairing equation ") + (hypothesis ? "holds" : "fails") +
                  ", almost-sure equality " + (conclusion ? "holds" : "fails");
  if (!report.passed) {
    report.witness = "p=" + cat.show_morphism(p) + " f=" + cat.show_morphism(f) +
                     " g=" + cat.show_morphism(g);
  }
  return report;
}

/// The structural marginalization onto the kept factors is deterministic.
template <Category C>
CheckReport check_marginalization_determinism(const C& cat,
                                              const std::vector<typename C::Object>& factors,
                                              const std::vector<bool>& keep) {
  const auto projection = kernel::projection(cat, factors, keep);
  if (kernel::is_deterministic(cat, projection)) {
    return CheckReport::pass("structural marginalization is deterministic");
  }
  return CheckReport::fail(cat.show_morphism(projection),
                           "structural marginalization is not deterministic");
}

}  // namespace markovcat::projective
