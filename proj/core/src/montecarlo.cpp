#include "markovcat/montecarlo.hpp"

#include <future>
#include <stdexcept>
#include <vector>

#include "markovcat/rng.hpp"
#include "markovcat/version.hpp"

namespace markovcat::montecarlo {

namespace {

struct ExactBernoulli {
  std::uint64_t numerator;
  std::uint64_t denominator;

  explicit ExactBernoulli(const Rational& p) {
    if (sgn(p) < 0 || p > 1) {
      throw std::invalid_argument("probability must lie in [0, 1]");
    }
    if (!p.get_num().fits_ulong_p() || !p.get_den().fits_ulong_p()) {
      throw std::invalid_argument("probability numerator/denominator too large");
    }
    numerator = p.get_num().get_ui();
    denominator = p.get_den().get_ui();
  }

  bool draw(Rng& rng) const {
    if (denominator == 1) return numerator == 1;
    return rng.below(denominator) < numerator;
  }
};

/// k / window >= threshold, compared exactly as k * den >= num * window.
struct ExactThreshold {
  Integer num;
  Integer den;

  explicit ExactThreshold(const Rational& theta) : num(theta.get_num()), den(theta.get_den()) {
    if (sgn(theta) < 0 || theta > 1) {
      throw std::invalid_argument("threshold must lie in [0, 1]");
    }
  }

  bool reached(std::uint64_t successes, std::uint64_t window) const {
    return Integer(static_cast<unsigned long>(successes)) * den >=
           num * Integer(static_cast<unsigned long>(window));
  }
};

void validate_sizes(std::uint64_t window, std::uint64_t samples, unsigned shards) {
  if (window < 1 || samples < 1) {
    throw std::invalid_argument("window length and sample count must be >= 1");
  }
  if (shards < 1) throw std::invalid_argument("shard count must be >= 1");
}

/// Runs `samples` windows, handing window w to shard w % shards; the window
/// kernel returns whether the statistic fired. Pooling is a sum, so the
/// result does not depend on the shard layout.
template <typename WindowFn>
std::uint64_t run_sharded(std::uint64_t samples, unsigned shards, const WindowFn& window_fn) {
  auto run_shard = [&](unsigned shard) {
    std::uint64_t count = 0;
    for (std::uint64_t w = shard; w < samples; w += shards) {
      if (window_fn(w)) ++count;
    }
    return count;
  };
  if (shards == 1) return run_shard(0);
  std::vector<std::future<std::uint64_t>> futures;
  futures.reserve(shards);
  for (unsigned s = 0; s < shards; ++s) {
    futures.push_back(std::async(std::launch::async, run_shard, s));
  }
  std::uint64_t total = 0;
  for (auto& f : futures) total += f.get();
  return total;
}

constexpr std::uint64_t kCoinStream = 0x636f696eull;     // per-window tag
constexpr std::uint64_t kMixtureStream = 0x6d697874ull;  // per-window tag

}  // namespace

DemoResult simulate_kolmogorov_demo(const CoinDemoConfig& config) {
  validate_sizes(config.window, config.samples, config.shards);
  const ExactBernoulli flip(config.bias);
  const ExactThreshold threshold(config.threshold);
  const auto positives = run_sharded(config.samples, config.shards, [&](std::uint64_t w) {
    Rng rng(derive_seed(config.seed, kCoinStream, w));
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < config.window; ++i) {
      if (flip.draw(rng)) ++successes;
    }
    return threshold.reached(successes, config.window);
  });
  return DemoResult{positives, config.samples};
}

DemoResult simulate_hs_negative_control(const MixtureDemoConfig& config) {
  validate_sizes(config.window, config.samples, config.shards);
  const ExactBernoulli low(config.bias_low);
  const ExactBernoulli high(config.bias_high);
  const ExactBernoulli pick_low(config.weight_low);
  const ExactThreshold threshold(config.threshold);
  const auto positives = run_sharded(config.samples, config.shards, [&](std::uint64_t w) {
    Rng rng(derive_seed(config.seed, kMixtureStream, w));
    const ExactBernoulli& flip = pick_low.draw(rng) ? low : high;
    std::uint64_t successes = 0;
    for (std::uint64_t i = 0; i < config.window; ++i) {
      if (flip.draw(rng)) ++successes;
    }
    return threshold.reached(successes, config.window);
  });
  return DemoResult{positives, config.samples};
}

namespace {

nlohmann::ordered_json result_fields(const DemoResult& result) {
  nlohmann::ordered_json out;
  out["positives"] = result.positives;
  out["samples"] = result.samples;
  out["empirical"] = result.empirical();
  return out;
}

nlohmann::ordered_json versions() {
  return {{"markovcat", kVersion}, {"report", kReportSchemaVersion}};
}

}  // namespace

nlohmann::ordered_json demo_report(const CoinDemoConfig& config, const DemoResult& result) {
  nlohmann::ordered_json out;
  out["demo"] = "kolmogorov";
  out["config"] = {{"bias", format_rational(config.bias)},
                   {"threshold", format_rational(config.threshold)},
                   {"window", config.window},
                   {"samples", config.samples},
                   {"shards", config.shards}};
  out["result"] = result_fields(result);
  out["seed"] = config.seed;
  out["versions"] = versions();
  return out;
}

nlohmann::ordered_json demo_report(const MixtureDemoConfig& config, const DemoResult& result) {
  nlohmann::ordered_json out;
  out["demo"] = "hewitt-savage-control";
  out["config"] = {{"bias_low", format_rational(config.bias_low)},
                   {"bias_high", format_rational(config.bias_high)},
                   {"weight_low", format_rational(config.weight_low)},
                   {"threshold", format_rational(config.threshold)},
                   {"window", config.window},
                   {"samples", config.samples},
                   {"shards", config.shards}};
  out["result"] = result_fields(result);
  out["seed"] = config.seed;
  out["versions"] = versions();
  return out;
}

}  // namespace markovcat::montecarlo
