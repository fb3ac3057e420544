#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "markovcat/montecarlo.hpp"
#include "markovcat/reporting.hpp"
#include "markovcat/script.hpp"
#include "markovcat/setmulti.hpp"
#include "markovcat/version.hpp"
#include "markovcat/vietoris.hpp"

namespace {

using namespace markovcat;

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

Rational parse_probability(const std::string& text, const char* what) {
  try {
    const Rational p = parse_rational(text);
    if (sgn(p) < 0 || p > 1) throw std::invalid_argument("out of [0,1]");
    return p;
  } catch (const std::exception& e) {
    throw CLI::ValidationError(std::string(what) + ": " + e.what());
  }
}

int run_check(const std::string& path, const script::RunOptions& options) {
  std::ifstream in(path);
  if (!in.good()) {
    std::cerr << "cannot open script file: " << path << "\n";
    return kExitUsage;
  }
  std::ostringstream text;
  text << in.rdbuf();
  script::Script parsed = script::Script::parse(text.str());
  const auto outcome = script::run_checks(parsed, options);
  std::cout << reporting::render_report(outcome.report);
  return outcome.exit_code;
}

struct DemoFlags {
  std::string bias = "1/2";
  std::string theta = "3/5";
  std::uint64_t window = 10000;
  std::uint64_t samples = 10000;
};

struct MixtureFlags {
  std::string biases = "3/10,7/10";
  std::string weight = "1/2";
  std::string theta = "1/2";
  std::uint64_t window = 10000;
  std::uint64_t samples = 10000;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Markov-category checks and zero-one law demonstrations"};
  app.set_version_flag("--version", std::string("markovcat ") + kVersion);
  app.require_subcommand(1);

  std::uint64_t seed = 0;
  unsigned shards = 1;
  std::size_t depth = 4;
  bool as_json = false;
  app.add_option("--seed", seed, "seed for all randomized suites")->capture_default_str();
  app.add_option("--shards", shards, "worker shards for Monte Carlo runs")
      ->check(CLI::Range(1u, 256u))
      ->capture_default_str();
  app.add_option("--depth", depth, "default truncation depth for family checks")
      ->capture_default_str();
  app.add_flag("--json", as_json, "emit machine-readable JSON instead of summaries");

  // check
  std::string script_path;
  auto* check = app.add_subcommand("check", "run the directives of a JSON check script");
  check->add_option("script", script_path, "path to the script")->required();

  // demo-kolmogorov
  DemoFlags coin;
  auto* demo_k = app.add_subcommand(
      "demo-kolmogorov", "tail statistic of i.i.d. flips concentrates on 0 or 1");
  demo_k->add_option("--bias", coin.bias, "success probability")->capture_default_str();
  demo_k->add_option("--theta", coin.theta, "mean threshold")->capture_default_str();
  demo_k->add_option("--window", coin.window, "flips per window")->capture_default_str();
  demo_k->add_option("--samples", coin.samples, "number of windows")->capture_default_str();

  // demo-hewitt-savage
  MixtureFlags mixture;
  auto* demo_hs = app.add_subcommand(
      "demo-hewitt-savage",
      "exchangeable-but-dependent control: the empirical probability stays interior");
  demo_hs->add_option("--biases", mixture.biases, "two comma-separated biases")
      ->capture_default_str();
  demo_hs->add_option("--weight", mixture.weight, "mixture weight of the first bias")
      ->capture_default_str();
  demo_hs->add_option("--theta", mixture.theta, "mean threshold")->capture_default_str();
  demo_hs->add_option("--window", mixture.window, "flips per window")->capture_default_str();
  demo_hs->add_option("--samples", mixture.samples, "number of windows")
      ->capture_default_str();

  // search-causality
  unsigned max_points = 3;
  std::uint64_t budget = 1000;
  bool discrete_only = false;
  auto* search = app.add_subcommand(
      "search-causality",
      "randomized search for a causality violation over small finite spaces");
  search->add_option("--max-points", max_points, "largest space size")
      ->check(CLI::Range(1u, 4u))
      ->capture_default_str();
  search->add_option("--budget", budget, "quadruples to examine")->capture_default_str();
  search->add_flag("--discrete", discrete_only, "restrict the pool to discrete spaces");

  // witness-setmulti
  unsigned upto = 8;
  auto* witness = app.add_subcommand(
      "witness-setmulti",
      "distinct multivalued states sharing all proper-window marginal images");
  witness->add_option("--upto", upto, "check all window lengths 1..upto")
      ->check(CLI::Range(1u, 16u))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (check->parsed()) {
      return run_check(script_path, script::RunOptions{seed, depth, shards});
    }

    if (demo_k->parsed()) {
      montecarlo::CoinDemoConfig config;
      config.bias = parse_probability(coin.bias, "--bias");
      config.threshold = parse_probability(coin.theta, "--theta");
      config.window = coin.window;
      config.samples = coin.samples;
      config.seed = seed;
      config.shards = shards;
      const auto result = montecarlo::simulate_kolmogorov_demo(config);
      if (as_json) {
        std::cout << montecarlo::demo_report(config, result).dump(2) << "\n";
      } else {
        std::cout << "empirical probability " << result.empirical() << " ("
                  << result.positives << "/" << result.samples << " windows)\n";
      }
      return kExitPass;
    }

    if (demo_hs->parsed()) {
      montecarlo::MixtureDemoConfig config;
      const auto comma = mixture.biases.find(',');
      if (comma == std::string::npos) {
        std::cerr << "--biases expects two comma-separated rationals\n";
        return kExitUsage;
      }
      config.bias_low = parse_probability(mixture.biases.substr(0, comma), "--biases");
      config.bias_high = parse_probability(mixture.biases.substr(comma + 1), "--biases");
      config.weight_low = parse_probability(mixture.weight, "--weight");
      config.threshold = parse_probability(mixture.theta, "--theta");
      config.window = mixture.window;
      config.samples = mixture.samples;
      config.seed = seed;
      config.shards = shards;
      const auto result = montecarlo::simulate_hs_negative_control(config);
      if (as_json) {
        std::cout << montecarlo::demo_report(config, result).dump(2) << "\n";
      } else {
        std::cout << "empirical probability " << result.empirical() << " ("
                  << result.positives << "/" << result.samples << " windows)\n";
      }
      return kExitPass;
    }

    if (search->parsed()) {
      const auto result = vietoris::causality_search(
          {.max_points = max_points, .seed = seed, .budget = budget,
           .discrete_only = discrete_only});
      if (as_json) {
        nlohmann::ordered_json out;
        out["search"] = "causality";
        out["examined"] = result.examined;
        out["found"] = result.counterexample.has_value();
        if (result.report.witness) out["witness"] = *result.report.witness;
        out["detail"] = result.report.detail;
        out["seed"] = seed;
        std::cout << out.dump(2) << "\n";
      } else {
        std::cout << result.report.detail << "\n";
      }
      return kExitPass;
    }

    if (witness->parsed()) {
      reporting::SuiteReport report;
      report.suite = "witness-setmulti";
      report.seed = seed;
      for (unsigned n = 1; n <= upto; ++n) {
        report.add("n=" + std::to_string(n), setmulti::nonextension_witness(n).report);
      }
      if (as_json) {
        std::cout << reporting::render_report(report);
      } else {
        for (const auto& c : report.cases) {
          std::cout << (c.report.passed ? "[pass] " : "[FAIL] ") << c.name << "\n";
        }
      }
      return report.passed() ? kExitPass : kExitCheckFailure;
    }
  } catch (const script::ScriptError& e) {
    std::cerr << "script error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
