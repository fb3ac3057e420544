#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "markovcat/category.hpp"
#include "markovcat/check_report.hpp"

namespace markovcat::kernel {

/// Ordered factor decomposition of a morphism's codomain.
template <typename Obj>
struct TensorSplit {
  std::vector<Obj> factors;
};

template <Category C>
typename C::Object tensor_all(const C& cat, const std::vector<typename C::Object>& factors) {
  if (factors.empty()) return cat.unit();
  auto acc = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) {
    acc = cat.tensor_object(acc, factors[i]);
  }
  return acc;
}

template <Category C>
void require_split_matches(const C& cat, const typename C::Morphism& p,
                           const TensorSplit<typename C::Object>& split) {
  if (!cat.object_equal(cat.cod(p), tensor_all(cat, split.factors))) {
    throw std::invalid_argument("tensor split does not match the codomain " +
                                cat.show_object(cat.cod(p)));
  }
}

/// Tensor of a list of morphisms, left-associated; empty list gives id_I.
template <Category C>
typename C::Morphism tensor_list(const C& cat, const std::vector<typename C::Morphism>& ms) {
  if (ms.empty()) return cat.identity(cat.unit());
  auto acc = ms.front();
  for (std::size_t i = 1; i < ms.size(); ++i) acc = cat.tensor(acc, ms[i]);
  return acc;
}

/// n-output copy X -> X^(tensor n); n = 0 is discard, n = 1 the identity.
/// Coassociativity makes the bracketing irrelevant; this one duplicates the
/// last wire at each step.
template <Category C>
typename C::Morphism n_fold_copy(const C& cat, const typename C::Object& x, std::size_t n) {
  if (n == 0) return cat.discard(x);
  if (n == 1) return cat.identity(x);
  auto acc = cat.copy(x);
  auto prefix = x;  // X^(k-1) while acc : X -> X^k
  for (std::size_t k = 2; k < n; ++k) {
    acc = cat.compose(acc, cat.tensor(cat.identity(prefix), cat.copy(x)));
    prefix = cat.tensor_object(prefix, x);
  }
  return acc;
}

/// Realizes a permutation of tensor factors as a composite of adjacent swap
/// morphisms. perm[k] is the input slot whose factor lands at output slot k.
template <Category C>
typename C::Morphism permute_factors(const C& cat,
                                     const std::vector<typename C::Object>& factors,
                                     const std::vector<std::size_t>& perm) {
  const std::size_t n = factors.size();
  if (perm.size() != n) throw std::invalid_argument("permutation size mismatch");
  {
    std::vector<bool> seen(n, false);
    for (auto k : perm) {
      if (k >= n || seen[k]) throw std::invalid_argument("not a permutation");
      seen[k] = true;
    }
  }
  // current[i]: index of the input factor currently sitting at slot i
  std::vector<std::size_t> current(n);
  std::iota(current.begin(), current.end(), 0);
  std::vector<std::size_t> target_slot(n);  // input k should end at slot target_slot[k]
  for (std::size_t k = 0; k < n; ++k) target_slot[perm[k]] = k;

  auto result = cat.identity(tensor_all(cat, factors));
  bool moved = true;
  while (moved) {
    moved = false;
    for (std::size_t i = 0; i + 1 < n; ++i) {
      if (target_slot[current[i]] > target_slot[current[i + 1]]) {
        // build id (x) swap (x) id acting on slots i, i+1
        std::vector<typename C::Morphism> layer;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == i) {
            layer.push_back(cat.swap(factors[current[i]], factors[current[i + 1]]));
            ++k;  // consumed two slots
          } else {
            layer.push_back(cat.identity(factors[current[k]]));
          }
        }
        result = cat.compose(result, tensor_list(cat, layer));
        std::swap(current[i], current[i + 1]);
        moved = true;
      }
    }
  }
  return result;
}

/// id on kept factors, discard elsewhere: the structural marginalization.
template <Category C>
typename C::Morphism projection(const C& cat, const std::vector<typename C::Object>& factors,
                                const std::vector<bool>& keep) {
  if (keep.size() != factors.size()) throw std::invalid_argument("keep mask size mismatch");
  std::vector<typename C::Morphism> legs;
  legs.reserve(factors.size());
  for (std::size_t i = 0; i < factors.size(); ++i) {
    legs.push_back(keep[i] ? cat.identity(factors[i]) : cat.discard(factors[i]));
  }
  return tensor_list(cat, legs);
}

/// Marginalizes f : A -> (x)_{i in F} X_i onto the kept factor indices.
/// keep indices must be a subset of the factor positions; keeping all of them
/// returns f unchanged.
template <Category C>
typename C::Morphism marginalize(const C& cat, const typename C::Morphism& f,
                                 const TensorSplit<typename C::Object>& split,
                                 const std::vector<std::size_t>& keep) {
  require_split_matches(cat, f, split);
  std::vector<bool> mask(split.factors.size(), false);
  for (auto i : keep) {
    if (i >= split.factors.size()) {
      throw std::invalid_argument("marginalize: kept index outside the factor decomposition");
    }
    mask[i] = true;
  }
  if (std::all_of(mask.begin(), mask.end(), [](bool b) { return b; })) return f;
  return cat.compose(f, projection(cat, split.factors, mask));
}

/// Coassociativity, left/right counitality and cocommutativity of copy/discard.
template <Category C>
CheckReport check_comonoid_laws(const C& cat, const typename C::Object& x) {
  const auto cp = cat.copy(x);
  const auto id = cat.identity(x);
  const auto lhs_assoc = cat.compose(cp, cat.tensor(cp, id));
  const auto rhs_assoc = cat.compose(cp, cat.tensor(id, cp));
  std::vector<std::pair<std::string, CheckReport>> parts;
  auto law = [&](const std::string& name, const typename C::Morphism& a,
                 const typename C::Morphism& b) {
    if (cat.morphism_equal(a, b)) {
      parts.emplace_back(name, CheckReport::pass());
    } else {
      parts.emplace_back(name, CheckReport::fail(cat.show_morphism(a) + " vs " +
                                                 cat.show_morphism(b),
                                                 "on object " + cat.show_object(x)));
    }
  };
  law("coassociativity", lhs_assoc, rhs_assoc);
  law("left counit", cat.compose(cp, cat.tensor(cat.discard(x), id)), id);
  law("right counit", cat.compose(cp, cat.tensor(id, cat.discard(x))), id);
  law("cocommutativity", cat.compose(cp, cat.swap(x, x)), cp);
  return CheckReport::all(parts);
}

/// copy(X (x) Y) = (id (x) swap (x) id) after (copy X (x) copy Y).
template <Category C>
CheckReport check_multiplicativity(const C& cat, const typename C::Object& x,
                                   const typename C::Object& y) {
  const auto lhs = cat.copy(cat.tensor_object(x, y));
  const auto mid =
      cat.tensor(cat.tensor(cat.identity(x), cat.swap(x, y)), cat.identity(y));
  const auto rhs = cat.compose(cat.tensor(cat.copy(x), cat.copy(y)), mid);
  if (cat.morphism_equal(lhs, rhs)) return CheckReport::pass();
  return CheckReport::fail(cat.show_morphism(lhs) + " vs " + cat.show_morphism(rhs),
                           "objects " + cat.show_object(x) + ", " + cat.show_object(y));
}

/// f is deterministic iff it is a comonoid homomorphism:
/// copy after f equals (f (x) f) after copy.
template <Category C>
bool is_deterministic(const C& cat, const typename C::Morphism& f) {
  const auto lhs = cat.compose(f, cat.copy(cat.cod(f)));
  const auto rhs = cat.compose(cat.copy(cat.dom(f)), cat.tensor(f, f));
  return cat.morphism_equal(lhs, rhs);
}

/// f and g agree almost surely with respect to p: pairing the input of f/g
/// with a copy of the output of p yields equal joints.
template <Category C>
bool as_equal(const C& cat, const typename C::Morphism& p, const typename C::Morphism& f,
              const typename C::Morphism& g) {
  const auto x = cat.cod(p);
  if (!cat.object_equal(cat.dom(f), x) || !cat.object_equal(cat.dom(g), x) ||
      !cat.object_equal(cat.cod(f), cat.cod(g))) {
    throw std::invalid_argument("as_equal: morphism shapes do not match p");
  }
  const auto paired = cat.compose(p, cat.copy(x));
  const auto lhs = cat.compose(paired, cat.tensor(cat.identity(x), f));
  const auto rhs = cat.compose(paired, cat.tensor(cat.identity(x), g));
  return cat.morphism_equal(lhs, rhs);
}

/// Marginal of p onto the i-th factor of the split.
template <Category C>
typename C::Morphism factor_marginal(const C& cat, const typename C::Morphism& p,
                                     const TensorSplit<typename C::Object>& split,
                                     std::size_t i) {
  return marginalize(cat, p, split, {i});
}

/// p : A -> X_1 (x) ... (x) X_n displays the conditional independence of the
/// factors given A iff it equals the n-fold copy of A followed by the tensor
/// of its single-factor marginals. Splits of size <= 1 hold trivially.
template <Category C>
bool displays_ci(const C& cat, const typename C::Morphism& p,
                 const TensorSplit<typename C::Object>& split) {
  require_split_matches(cat, p, split);
  const std::size_t n = split.factors.size();
  if (n <= 1) return true;
  std::vector<typename C::Morphism> marginals;
  marginals.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    marginals.push_back(factor_marginal(cat, p, split, i));
  }
  const auto a = cat.dom(p);
  const auto factored =
      cat.compose(n_fold_copy(cat, a, n), tensor_list(cat, marginals));
  return cat.morphism_equal(p, factored);
}

/// Causality probe for a composable quadruple. The hypothesis pairs the
/// output of g with h_i; the conclusion additionally retains a copy of the
/// intermediate X. In a causal category hypothesis implies conclusion, so a
/// report with hypothesis_holds and not conclusion_holds is a violation.
template <Category C>
CheckReport check_causality_triple(const C& cat, const typename C::Morphism& f,
                                   const typename C::Morphism& g,
                                   const typename C::Morphism& h1,
                                   const typename C::Morphism& h2) {
  const auto x = cat.cod(f);
  const auto y = cat.cod(g);
  if (!cat.object_equal(cat.dom(g), x) || !cat.object_equal(cat.dom(h1), y) ||
      !cat.object_equal(cat.dom(h2), y) ||
      !cat.object_equal(cat.cod(h1), cat.cod(h2))) {
    throw std::invalid_argument("check_causality_triple: shapes do not compose");
  }
  auto instrument = [&](const typename C::Morphism& h) {
    // g, then copy Y, keeping Y on the left and feeding the right copy to h
    return cat.compose(cat.compose(g, cat.copy(y)),
                       cat.tensor(cat.identity(y), h));
  };
  const auto probe1 = instrument(h1);
  const auto probe2 = instrument(h2);
  const bool hypothesis =
      cat.morphism_equal(cat.compose(f, probe1), cat.compose(f, probe2));
  auto retained = [&](const typename C::Morphism& probe) {
    return cat.compose(cat.compose(f, cat.copy(x)),
                       cat.tensor(cat.identity(x), probe));
  };
  const bool conclusion = cat.morphism_equal(retained(probe1), retained(probe2));
  CheckReport r;
  r.hypothesis_holds = hypothesis;
  r.conclusion_holds = conclusion;
  r.passed = !(hypothesis && !conclusion);
  r.detail = std::string("hypothesis ") + (hypothesis ? "holds" : "fails") +
             ", conclusion " + (conclusion ? "holds" : "fails");
  if (!r.passed) {
    r.witness = "f=" + cat.show_morphism(f) + " g=" + cat.show_morphism(g) +
                " h1=" + cat.show_morphism(h1) + " h2=" + cat.show_morphism(h2);
  }
  return r;
}

}  // namespace markovcat::kernel
