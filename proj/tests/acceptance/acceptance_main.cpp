// Acceptance suite: one pass/fail line per criterion, exit 0 iff all pass.
// Every numeric bound is pinned here; reports are rendered to stable JSON and
// the final criterion re-runs everything to confirm byte-identical output.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <set>
#include <string>
#include <vector>

#include "markovcat/cringplus.hpp"
#include "markovcat/finstoch.hpp"
#include "markovcat/kernel.hpp"
#include "markovcat/montecarlo.hpp"
#include "markovcat/projective.hpp"
#include "markovcat/reporting.hpp"
#include "markovcat/rng.hpp"
#include "markovcat/setmulti.hpp"
#include "markovcat/vietoris.hpp"

using namespace markovcat;
using reporting::SuiteReport;

namespace {

constexpr std::uint64_t kMasterSeed = 0x6d61726b6f76ull;

const finstoch::FinStoch kFinStoch;
const setmulti::SetMulti kSetMulti;

finstoch::FinSet sized_set(const std::string& prefix, std::size_t n) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
  return finstoch::FinSet(labels);
}

CheckReport bool_report(bool ok, const std::string& good, const std::string& bad) {
  return ok ? CheckReport::pass(good) : CheckReport::fail(bad, bad);
}

// ---------------------------------------------------------------------------
// Criterion 1: axiom suite.

template <typename C>
CheckReport exhaustive_axioms(const C& cat, const std::vector<typename C::Object>& objects) {
  for (const auto& x : objects) {
    const auto laws = kernel::check_comonoid_laws(cat, x);
    if (!laws.passed) return laws;
    for (const auto& y : objects) {
      const auto mult = kernel::check_multiplicativity(cat, x, y);
      if (!mult.passed) return mult;
    }
  }
  return CheckReport::pass(std::to_string(objects.size()) + " objects, " +
                           std::to_string(objects.size() * objects.size()) +
                           " multiplicativity pairs");
}

CheckReport finstoch_random_morphism_checks(std::uint64_t seed, int rounds) {
  Rng rng(seed);
  const auto a = sized_set("a", 2), b = sized_set("b", 3), c = sized_set("c", 2);
  for (int i = 0; i < rounds; ++i) {
    const auto f = finstoch::random_kernel(a, b, rng, 4);
    const auto g = finstoch::random_kernel(b, c, rng, 4);
    const auto h = finstoch::random_kernel(c, a, rng, 4);
    if (kFinStoch.compose(f, kFinStoch.discard(b)) != kFinStoch.discard(a)) {
      return CheckReport::fail(f.show(), "discard naturality failed");
    }
    if (kFinStoch.compose(kFinStoch.compose(f, g), h) !=
        kFinStoch.compose(f, kFinStoch.compose(g, h))) {
      return CheckReport::fail(f.show(), "associativity failed");
    }
    const auto lhs = kFinStoch.compose(kFinStoch.tensor(f, g), kFinStoch.tensor(g, h));
    const auto rhs = kFinStoch.tensor(kFinStoch.compose(f, g), kFinStoch.compose(g, h));
    if (lhs != rhs) return CheckReport::fail(f.show(), "interchange failed");
    const auto df = finstoch::random_kernel(a, b, rng, 1);
    const auto dg = finstoch::random_kernel(b, c, rng, 1);
    if (!kernel::is_deterministic(kFinStoch, kFinStoch.compose(df, dg)) ||
        !kernel::is_deterministic(kFinStoch, kFinStoch.tensor(df, dg))) {
      return CheckReport::fail(df.show(), "determinism closure failed");
    }
  }
  return CheckReport::pass(std::to_string(rounds) + " random morphism rounds");
}

CheckReport setmulti_random_morphism_checks(std::uint64_t seed, int rounds) {
  Rng rng(seed);
  const auto a = sized_set("a", 2), b = sized_set("b", 3), c = sized_set("c", 2);
  for (int i = 0; i < rounds; ++i) {
    const auto f = setmulti::random_multimap(a, b, rng);
    const auto g = setmulti::random_multimap(b, c, rng);
    const auto h = setmulti::random_multimap(c, a, rng);
    if (kSetMulti.compose(f, kSetMulti.discard(b)) != kSetMulti.discard(a)) {
      return CheckReport::fail(f.show(), "discard naturality failed");
    }
    if (kSetMulti.compose(kSetMulti.compose(f, g), h) !=
        kSetMulti.compose(f, kSetMulti.compose(g, h))) {
      return CheckReport::fail(f.show(), "associativity failed");
    }
    const auto lhs = kSetMulti.compose(kSetMulti.tensor(f, g), kSetMulti.tensor(g, h));
    const auto rhs = kSetMulti.tensor(kSetMulti.compose(f, g), kSetMulti.compose(g, h));
    if (lhs != rhs) return CheckReport::fail(f.show(), "interchange failed");
  }
  return CheckReport::pass(std::to_string(rounds) + " random morphism rounds");
}

SuiteReport criterion_axioms(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "01-axioms";
  report.seed = seed;

  std::vector<finstoch::FinSet> small_sets;
  for (std::size_t n = 1; n <= 3; ++n) small_sets.push_back(sized_set("x", n));
  report.add("finstoch-exhaustive-size<=3", exhaustive_axioms(kFinStoch, small_sets));
  report.add("finstoch-random-500", finstoch_random_morphism_checks(derive_seed(seed, 1), 500));
  report.add("setmulti-exhaustive-size<=3", exhaustive_axioms(kSetMulti, small_sets));
  report.add("setmulti-random-500", setmulti_random_morphism_checks(derive_seed(seed, 2), 500));

  std::vector<vietoris::FiniteTopSpace> spaces;
  for (std::size_t n = 1; n <= 3; ++n) {
    for (auto& space : vietoris::all_topologies(sized_set("p", n))) {
      spaces.push_back(std::move(space));
    }
  }
  report.add("vietoris-exhaustive-all-" + std::to_string(spaces.size()) + "-spaces",
             exhaustive_axioms(vietoris::Vietoris{}, spaces));

  const cringplus::CRingPlusOp cring{6};
  const std::vector<cringplus::PolyRing> rings{cringplus::PolyRing({"t"}),
                                               cringplus::PolyRing({"u", "v"})};
  report.add("cringplus-monomial-bases-degree-6", exhaustive_axioms(cring, rings));
  return report;
}

// ---------------------------------------------------------------------------
// Criterion 2: determinism lemma, >= 1000 random instances, carriers <= 4.

SuiteReport criterion_determinism_lemma(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "02-determinism-lemma";
  report.seed = seed;
  Rng rng(seed);
  const int instances = 1000;
  int hypothesis_true = 0, violations = 0;
  for (int i = 0; i < instances; ++i) {
    const auto a = sized_set("a", 1 + rng.below(3));
    const auto x = sized_set("x", 2 + rng.below(3));
    const auto t = sized_set("t", 2 + rng.below(2));
    const unsigned denom = i % 3 == 0 ? 1 : (i % 3 == 1 ? 2 : 4);
    const auto p = finstoch::random_kernel(a, x, rng, denom);
    auto s = finstoch::random_kernel(x, t, rng, 1);
    if (i % 7 == 0) {
      // constant statistic: replicate the first row everywhere
      std::vector<Rational> rows;
      for (std::size_t r = 0; r < x.size(); ++r) {
        for (std::size_t col = 0; col < t.size(); ++col) rows.push_back(s.at(0, col));
      }
      s = finstoch::StochMatrix(x, t, std::move(rows));
    }
    const auto probe = projective::check_determinism_lemma(kFinStoch, p, s);
    if (probe.hypothesis_holds.value()) ++hypothesis_true;
    if (!probe.passed) ++violations;
  }
  report.add("implication",
             bool_report(violations == 0,
                         std::to_string(instances) + " instances, " +
                             std::to_string(hypothesis_true) + " with the hypothesis true, "
                             "zero violations",
                         std::to_string(violations) + " violations"));
  report.add("non-vacuous", bool_report(hypothesis_true > 0, "hypothesis-true cases occurred",
                                        "suite never exercised the hypothesis"));
  return report;
}

// ---------------------------------------------------------------------------
// Criterion 3: finite zero-one law, >= 1000 random instances, |F| <= 4.

SuiteReport criterion_kolmogorov_finite(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "03-kolmogorov-finite";
  report.seed = seed;
  Rng rng(seed);
  const int instances = 1000;
  int applicable = 0, hypothesis_true = 0, violations = 0;
  for (int i = 0; i < instances; ++i) {
    const std::size_t n = 1 + rng.below(4);
    // carrier sizes in {2,3,4} with total product capped at 36
    std::vector<std::size_t> sizes(n);
    for (;;) {
      std::size_t product = 1;
      for (auto& s : sizes) {
        s = 2 + rng.below(3);
        product *= s;
      }
      if (product <= 36) break;
    }
    std::vector<finstoch::FinSet> factors;
    for (std::size_t k = 0; k < n; ++k) {
      factors.push_back(sized_set("x" + std::to_string(k) + "_", sizes[k]));
    }
    const auto a = sized_set("a", 1 + rng.below(3));
    const auto t = sized_set("t", 2 + rng.below(2));
    const auto x_f = kernel::tensor_all(kFinStoch, factors);

    finstoch::StochMatrix p = [&] {
      if (i % 5 == 4) {
        // correlated joint: exercises the reported-not-applicable path
        return finstoch::random_kernel(a, x_f, rng, 4);
      }
      std::vector<finstoch::StochMatrix> comps;
      comps.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        comps.push_back(finstoch::random_kernel(a, factors[k], rng, 3));
      }
      return kFinStoch.compose(kernel::n_fold_copy(kFinStoch, a, n),
                               kernel::tensor_list(kFinStoch, comps));
    }();

    std::vector<std::size_t> window;
    for (std::size_t k = 0; k < n; ++k) {
      if (rng.coin()) window.push_back(k);
    }
    std::vector<finstoch::FinSet> window_factors;
    for (auto k : window) window_factors.push_back(factors[k]);
    const auto x_g = kernel::tensor_all(kFinStoch, window_factors);
    const auto s = finstoch::random_kernel(x_g, t, rng, 1);

    const auto probe = projective::check_kolmogorov_finite(
        kFinStoch, p, factors, projective::Statistic<finstoch::FinStoch>{window, s});
    if (probe.precondition_holds.value()) ++applicable;
    if (probe.precondition_holds.value() && probe.hypothesis_holds.value_or(false)) {
      ++hypothesis_true;
    }
    if (!probe.passed) ++violations;
  }
  report.add("implication",
             bool_report(violations == 0,
                         std::to_string(instances) + " instances, " +
                             std::to_string(applicable) + " applicable, " +
                             std::to_string(hypothesis_true) +
                             " with all window joints independent, zero violations",
                         std::to_string(violations) + " violations"));
  report.add("non-vacuous",
             bool_report(applicable > 0 && hypothesis_true > 0,
                         "both the precondition and the hypothesis were exercised",
                         "suite was vacuous"));
  return report;
}

// ---------------------------------------------------------------------------
// Criterion 4: infinite independence lemma at depth 5, >= 200 families.

SuiteReport criterion_infindep(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "04-infinite-independence";
  report.seed = seed;
  Rng rng(seed);
  const int families = 200;
  int failures = 0;
  for (int i = 0; i < families; ++i) {
    const auto domain =
        i % 4 == 0 ? sized_set("a", 2) : finstoch::FinSet::unit();
    // the depth-5 window only ever touches labels i0..i4; draw those
    // component kernels up front so the family is a pure value
    auto components = std::make_shared<std::map<projective::Label, finstoch::StochMatrix>>();
    for (std::size_t k = 0; k < 5; ++k) {
      const projective::Label label = "i" + std::to_string(k);
      const auto carrier = sized_set(label + "_", 2 + rng.below(2));
      components->emplace(label, finstoch::random_kernel(domain, carrier, rng, 4));
    }
    auto component = [components](const projective::Label& l) {
      return components->at(l);
    };
    const auto fam = projective::independent_family<finstoch::FinStoch>(
        kFinStoch, domain, projective::IndexSet::naturals("i"), component, "random");
    const auto probe = projective::check_infindep_lemma(fam, rng.below(5), 5);
    if (!(probe.passed && probe.precondition_holds.value())) ++failures;
  }
  report.add("all-windows-display-independence",
             bool_report(failures == 0,
                         std::to_string(families) + " independent families at depth 5",
                         std::to_string(failures) + " failures"));
  return report;
}

// ---------------------------------------------------------------------------
// Criterion 5: exchangeability and the splitting equation.

SuiteReport criterion_hewitt_savage(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "05-hewitt-savage-machinery";
  report.seed = seed;

  const auto coin = finstoch::state(sized_set("b", 2), {Rational(1, 3), Rational(2, 3)});
  const auto fam = projective::iid_family(kFinStoch, coin, projective::IndexSet::naturals("i"));

  // all 720 finite permutations supported on the 6-label window, all windows
  // F inside it; deduplicate by the restriction of the permutation to F
  std::vector<std::size_t> perm{0, 1, 2, 3, 4, 5};
  std::set<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> checked;
  std::uint64_t checks = 0, perms = 0;
  bool exchangeable = true;
  do {
    ++perms;
    const auto sigma = projective::IndexInjection::permutation(perm);
    for (std::size_t mask = 0; mask < 64 && exchangeable; ++mask) {
      std::vector<std::size_t> window, image;
      for (std::size_t k = 0; k < 6; ++k) {
        if (mask & (std::size_t{1} << k)) {
          window.push_back(k);
          image.push_back(perm[k]);
        }
      }
      if (!checked.emplace(window, image).second) continue;
      ++checks;
      if (!projective::injection_invariant(fam, sigma, window)) exchangeable = false;
    }
  } while (std::next_permutation(perm.begin(), perm.end()) && exchangeable);
  report.add("exchangeability-720-permutations",
             bool_report(exchangeable,
                         std::to_string(perms) + " permutations, " +
                             std::to_string(checks) + " distinct window restrictions, exact",
                         "invariance failed"));

  Rng rng(seed);
  const int instances = 200;
  int failures = 0;
  for (int i = 0; i < instances; ++i) {
    const auto bias_num = rng.below(5);
    Rational low(static_cast<long>(bias_num), 4), high(static_cast<long>(4 - bias_num), 4);
    low.canonicalize();
    high.canonicalize();
    const auto q = finstoch::state(sized_set("b", 2), {low, high});
    const auto family = projective::iid_family(kFinStoch, q, projective::IndexSet::naturals("i"));
    const std::size_t stride = 2 + rng.below(2);
    const auto tau1 = projective::IndexInjection::stride(stride, 0);
    const auto tau2 = projective::IndexInjection::stride(stride, 1);
    std::vector<std::size_t> f1, f2;
    for (std::size_t k = 0; k < 3; ++k) {
      if (rng.coin()) f1.push_back(k);
      if (rng.coin()) f2.push_back(k);
    }
    if (f1.size() > 2) f1.resize(2);
    if (f2.size() > 2) f2.resize(2);
    const auto probe = projective::check_hs_splitting(family, tau1, tau2, f1, f2);
    if (!(probe.passed && probe.precondition_holds.value())) ++failures;
  }
  report.add("splitting-equation-200-instances",
             bool_report(failures == 0,
                         std::to_string(instances) + " disjoint-image instances, exact",
                         std::to_string(failures) + " failures"));
  return report;
}

// ---------------------------------------------------------------------------
// Criterion 6: almost-sure equality lemma, >= 1000 constructed instances.

SuiteReport criterion_aseq(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "06-almost-sure-equality";
  report.seed = seed;
  Rng rng(seed);
  const int instances = 1000;
  int positives = 0, hypothesis_true = 0, violations = 0;
  for (int i = 0; i < instances; ++i) {
    const auto a = sized_set("a", 1 + rng.below(2));
    const std::size_t nx = 3 + rng.below(2);
    const auto x = sized_set("x", nx);
    const auto y = sized_set("y", 2 + rng.below(2));
    const auto f = finstoch::random_kernel(x, y, rng, 1);

    if (i % 2 == 0) {
      // off-support perturbation: p lands in a proper subset of x, g differs
      // from f only outside it
      const std::size_t support_size = 1 + rng.below(nx - 1);
      const auto sub = sized_set("s", support_size);
      std::vector<Rational> incl(sub.size() * x.size(), Rational(0));
      for (std::size_t k = 0; k < support_size; ++k) incl[k * x.size() + k] = 1;
      const auto inject = finstoch::StochMatrix(sub, x, std::move(incl));
      const auto p = kFinStoch.compose(finstoch::random_kernel(a, sub, rng, 4), inject);

      std::vector<Rational> g_rows;
      for (std::size_t r = 0; r < x.size(); ++r) {
        if (r < support_size) {
          for (std::size_t col = 0; col < y.size(); ++col) g_rows.push_back(f.at(r, col));
        } else {
          const auto random_row = finstoch::random_kernel(sized_set("r", 1), y, rng, 3);
          for (std::size_t col = 0; col < y.size(); ++col) g_rows.push_back(random_row.at(0, col));
        }
      }
      const auto g = finstoch::StochMatrix(x, y, std::move(g_rows));
      const auto probe = projective::check_aseq_lemma(kFinStoch, p, f, g);
      ++positives;
      if (!probe.hypothesis_holds.value() || !probe.conclusion_holds.value()) ++violations;
    } else {
      const auto p = finstoch::random_kernel(a, x, rng, 2);
      const auto g = finstoch::random_kernel(x, y, rng, i % 4 == 1 ? 1 : 3);
      const auto probe = projective::check_aseq_lemma(kFinStoch, p, f, g);
      if (probe.hypothesis_holds.value()) ++hypothesis_true;
      if (!probe.passed) ++violations;
    }
  }
  report.add("implication",
             bool_report(violations == 0,
                         std::to_string(instances) + " instances (" +
                             std::to_string(positives) + " off-support constructions, " +
                             std::to_string(hypothesis_true) +
                             " random instances with the hypothesis true), zero violations",
                         std::to_string(violations) + " violations"));
  return report;
}

// ---------------------------------------------------------------------------
// Criteria 7 and 8: the two concrete counterexample computations.

SuiteReport criterion_cring_noncausality(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "07-cringplus-noncausality";
  report.seed = seed;
  report.add("degree-12", cringplus::check_noncausality(12));
  return report;
}

SuiteReport criterion_setmulti_witness(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "08-setmulti-witness";
  report.seed = seed;
  for (unsigned n = 1; n <= 8; ++n) {
    report.add("n=" + std::to_string(n), setmulti::nonextension_witness(n).report);
  }
  return report;
}

// ---------------------------------------------------------------------------
// Criterion 9: >= 10^4 random causality quadruples over carriers <= 3.

SuiteReport criterion_finstoch_causality(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "09-finstoch-causality";
  report.seed = seed;
  Rng rng(seed);
  const int quadruples = 10000;
  int hypothesis_true = 0, violations = 0;
  for (int i = 0; i < quadruples; ++i) {
    const auto a = sized_set("a", 1 + rng.below(3));
    const auto x = sized_set("x", 1 + rng.below(3));
    const auto y = sized_set("y", 1 + rng.below(3));
    const auto z = sized_set("z", 1 + rng.below(3));
    const auto f = finstoch::random_kernel(a, x, rng, 2);
    const auto g = finstoch::random_kernel(x, y, rng, 2);
    const auto h1 = finstoch::random_kernel(y, z, rng, 2);
    const auto h2 = finstoch::random_kernel(y, z, rng, 2);
    const auto probe = kernel::check_causality_triple(kFinStoch, f, g, h1, h2);
    if (probe.hypothesis_holds.value()) ++hypothesis_true;
    if (!probe.passed) ++violations;
  }
  report.add("implication",
             bool_report(violations == 0,
                         std::to_string(quadruples) + " quadruples, " +
                             std::to_string(hypothesis_true) +
                             " with the hypothesis true, zero violations",
                         std::to_string(violations) + " violations"));
  report.add("non-vacuous", bool_report(hypothesis_true > 0, "hypothesis-true cases occurred",
                                        "suite never exercised the hypothesis"));
  return report;
}

// ---------------------------------------------------------------------------
// Criteria 10 and 11: Monte Carlo demonstrations at the pinned configs.

SuiteReport criterion_mc_kolmogorov(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "10-montecarlo-kolmogorov";
  report.seed = seed;

  montecarlo::CoinDemoConfig config;
  config.bias = Rational(1, 2);
  config.threshold = Rational(3, 5);
  config.window = 10000;
  config.samples = 10000;
  config.seed = seed;
  config.shards = 4;
  const auto above = montecarlo::simulate_kolmogorov_demo(config);
  // Hoeffding oracle: P(mean >= 3/5) <= exp(-2 * 10^4 * (1/10)^2) ~= 2e-87
  report.add("upper-tail",
             bool_report(above.empirical() <= 0.01,
                         "empirical " + std::to_string(above.empirical()) +
                             " <= 0.01 (Hoeffding bound exp(-200))",
                         "empirical " + std::to_string(above.empirical()) + " > 0.01"));

  auto mirrored = config;
  mirrored.threshold = Rational(2, 5);
  const auto below = montecarlo::simulate_kolmogorov_demo(mirrored);
  report.add("lower-tail",
             bool_report(below.empirical() >= 0.99,
                         "empirical " + std::to_string(below.empirical()) +
                             " >= 0.99 (mirrored Hoeffding bound)",
                         "empirical " + std::to_string(below.empirical()) + " < 0.99"));
  return report;
}

SuiteReport criterion_mc_hewitt_savage(std::uint64_t seed) {
  SuiteReport report;
  report.suite = "11-montecarlo-hewitt-savage";
  report.seed = seed;

  montecarlo::MixtureDemoConfig config;
  config.bias_low = Rational(3, 10);
  config.bias_high = Rational(7, 10);
  config.weight_low = Rational(1, 2);
  config.threshold = Rational(1, 2);
  config.window = 10000;
  config.samples = 10000;
  config.seed = seed;
  config.shards = 4;
  const auto result = montecarlo::simulate_hs_negative_control(config);
  report.add("interior-band",
             bool_report(result.empirical() >= 0.45 && result.empirical() <= 0.55,
                         "empirical " + std::to_string(result.empirical()) +
                             " inside [0.45, 0.55]: without independence the statistic "
                             "is genuinely mixed",
                         "empirical " + std::to_string(result.empirical()) +
                             " outside [0.45, 0.55]"));
  return report;
}

// ---------------------------------------------------------------------------

struct Criterion {
  std::string id;
  SuiteReport (*run)(std::uint64_t seed);
  double budget_seconds;  // 0 = no runtime bound in the criterion
};

const std::vector<Criterion> kCriteria = {
    {"01-axioms", criterion_axioms, 120.0},
    {"02-determinism-lemma", criterion_determinism_lemma, 0},
    {"03-kolmogorov-finite", criterion_kolmogorov_finite, 0},
    {"04-infinite-independence", criterion_infindep, 0},
    {"05-hewitt-savage-machinery", criterion_hewitt_savage, 0},
    {"06-almost-sure-equality", criterion_aseq, 0},
    {"07-cringplus-noncausality", criterion_cring_noncausality, 0},
    {"08-setmulti-witness", criterion_setmulti_witness, 0},
    {"09-finstoch-causality", criterion_finstoch_causality, 0},
    {"10-montecarlo-kolmogorov", criterion_mc_kolmogorov, 60.0},
    {"11-montecarlo-hewitt-savage", criterion_mc_hewitt_savage, 60.0},
};

}  // namespace

int main(int argc, char** argv) {
  const std::uint64_t seed = argc > 1 ? std::stoull(argv[1]) : kMasterSeed;
  bool all_passed = true;
  std::vector<std::string> first_run;
  first_run.reserve(kCriteria.size());

  for (const auto& criterion : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    auto report = criterion.run(derive_seed(seed, std::hash<std::string>{}(criterion.id)));
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (criterion.budget_seconds > 0) {
      report.add("runtime",
                 bool_report(seconds < criterion.budget_seconds,
                             "within the runtime budget", "runtime budget exceeded"));
    }
    const bool passed = report.passed();
    all_passed = all_passed && passed;
    first_run.push_back(reporting::render_report(report));
    std::cout << (passed ? "[PASS] " : "[FAIL] ") << criterion.id;
    std::printf(" (%.1fs)\n", seconds);
    if (!passed) {
      for (const auto& c : report.cases) {
        if (!c.report.passed) {
          std::cout << "       " << c.name << ": " << c.report.detail << "\n";
        }
      }
    }
  }

  // Criterion 12: every suite re-run with the same seed emits byte-identical
  // JSON.
  {
    const auto start = std::chrono::steady_clock::now();
    bool reproducible = true;
    std::string first_diff;
    for (std::size_t k = 0; k < kCriteria.size(); ++k) {
      auto report =
          kCriteria[k].run(derive_seed(seed, std::hash<std::string>{}(kCriteria[k].id)));
      if (kCriteria[k].budget_seconds > 0) {
        report.add("runtime", bool_report(true, "within the runtime budget", ""));
      }
      if (reporting::render_report(report) != first_run[k]) {
        reproducible = false;
        first_diff = kCriteria[k].id;
        break;
      }
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_passed = all_passed && reproducible;
    std::cout << (reproducible ? "[PASS] " : "[FAIL] ") << "12-reproducibility";
    std::printf(" (%.1fs)\n", seconds);
    if (!reproducible) {
      std::cout << "       first differing suite: " << first_diff << "\n";
    }
  }

  return all_passed ? 0 : 1;
}
