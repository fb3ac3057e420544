#pragma once

#include <nlohmann/json.hpp>

#include <cstdint>
#include <string>

#include "markovcat/rational.hpp"

namespace markovcat::montecarlo {

/// Monte Carlo demonstrations of the zero-one behavior of tail statistics.
/// All randomness flows through per-window substreams derived from (seed,
/// window index), so results are byte-identical for a fixed seed and do not
/// depend on the shard count; shards only distribute the windows over
/// threads. Thresholds are compared in exact integer arithmetic; floating
/// point appears only in the final empirical ratio.

struct CoinDemoConfig {
  Rational bias{1, 2};       // success probability of each flip
  Rational threshold{3, 5};  // the statistic is [sample mean >= threshold]
  std::uint64_t window = 10000;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned shards = 1;
};

struct MixtureDemoConfig {
  Rational bias_low{3, 10};
  Rational bias_high{7, 10};
  Rational weight_low{1, 2};  // probability of drawing bias_low per window
  Rational threshold{1, 2};
  std::uint64_t window = 10000;
  std::uint64_t samples = 10000;
  std::uint64_t seed = 0;
  unsigned shards = 1;
};

struct DemoResult {
  std::uint64_t positives = 0;
  std::uint64_t samples = 0;
  double empirical() const {
    return samples ? static_cast<double>(positives) / static_cast<double>(samples) : 0.0;
  }
};

/// Windows of independent identically distributed flips: the mean-threshold
/// statistic concentrates, so the empirical probability approaches 0 or 1.
DemoResult simulate_kolmogorov_demo(const CoinDemoConfig& config);

/// Windows whose bias is drawn once from a two-point mixture and then flipped
/// independently: exchangeable but not independent, and with biases
/// straddling the threshold the empirical probability stays strictly between
/// 0 and 1, isolating the independence hypothesis.
DemoResult simulate_hs_negative_control(const MixtureDemoConfig& config);

/// Stable JSON documents for the demos; identical configs serialize to
/// byte-identical reports.
nlohmann::ordered_json demo_report(const CoinDemoConfig& config, const DemoResult& result);
nlohmann::ordered_json demo_report(const MixtureDemoConfig& config, const DemoResult& result);

}  // namespace markovcat::montecarlo
