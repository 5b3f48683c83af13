#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace tiersim {

/// Index of one simulated page (fixed size, default 2 MiB).
using PageId = std::uint32_t;

enum class TierId : std::uint8_t { Fast = 0, Slow = 1 };

inline const char* to_string(TierId t) { return t == TierId::Fast ? "fast" : "slow"; }

/// Per-page tiering metadata. ~20 bytes of policy state per page plus residency.
struct PageRecord {
  TierId tier = TierId::Slow;
  std::uint64_t accesses = 0;  // sampled accesses in the current policy interval
  double ewma_s = 0.0;         // short-term moving average (fast-moving)
  double ewma_l = 0.0;         // long-term moving average (slow-moving)
  double score = 0.0;
  double prev_score = 0.0;
  std::uint32_t hot_age = 0;   // consecutive intervals in the top-k set
};

/// Platform model: capacities, per-access latencies, bandwidth and
/// migration parameters for the two tiers.
struct TierModel {
  std::uint64_t fast_capacity_pages = 0;
  std::uint64_t slow_capacity_pages = 0;
  double latency_fast_ns = 80.0;
  double latency_slow_ns = 200.0;
  double bw_max_slow = 7.45e9;    // peak slow-tier bandwidth, bytes/s
  std::uint32_t bs_max = 8;       // max migration batch size, pages
  std::uint64_t page_size = 2ull * 1024 * 1024;
  std::uint64_t access_size = 64; // bytes charged to bandwidth per reference

  double latency_diff_ns() const { return latency_slow_ns - latency_fast_ns; }
};

/// Policy-engine configuration. Defaults follow the platform-independent
/// values documented in the README; presets override for desk-scale runs.
struct EngineConfig {
  // EWMA responsiveness. By default alpha is the weight given to the new
  // sample (alpha_s fast/short-term, alpha_l slow/long-term). Setting
  // alpha_is_history_weight interprets alpha as the weight on the stored
  // average instead, i.e. v <- alpha*v + (1-alpha)*x.
  double alpha_s = 0.7;
  double alpha_l = 0.1;
  bool alpha_is_history_weight = false;

  // Hotness-score weights per mode. Must sum to 1 within each mode.
  double w_s_history = 0.3;
  double w_l_history = 0.7;
  double w_s_recency = 0.8;
  double w_l_recency = 0.2;

  // Event sampling: 1 sample per N accesses.
  std::uint32_t sample_period_history = 10000;
  std::uint32_t sample_period_recency = 5000;

  std::int64_t policy_interval_history_ns = 500'000'000;
  std::int64_t policy_interval_recency_ns = 100'000'000;

  std::uint32_t hot_age_min = 2;  // candidacy age threshold

  // Change detection, expressed relative to bw_max_slow.
  double pht_delta_frac = 0.05;
  double pht_lambda_frac = 0.50;
  std::uint32_t recency_max_intervals = 20;
  double bw_stable_frac = 0.10;

  std::uint32_t wasteful_window = 10;  // intervals; promote-then-demote counts as wasteful

  bool eager_demotion = false;  // demote surplus cold pages beyond pairing

  double migration_overhead_ns = 50'000.0;  // fixed per-migration overhead
  double migration_latency_ewma = 0.3;      // weight of new observation in latency estimates

  // Effective weight on the new sample for each EWMA.
  double beta_s() const { return alpha_is_history_weight ? 1.0 - alpha_s : alpha_s; }
  double beta_l() const { return alpha_is_history_weight ? 1.0 - alpha_l : alpha_l; }
};

/// StaticThreshold baseline knobs (count-threshold engine with cooling).
struct StaticThresholdKnobs {
  std::uint32_t hot_threshold = 8;
  std::uint32_t cooling_threshold = 18;
  std::uint32_t migration_period = 1;  // intervals between serial promotions
};

/// TwoAccess baseline knobs (promote on 2nd observed access).
struct TwoAccessKnobs {
  double watermark = 0.95;  // demote LRU pages above this fraction of fast capacity
};

/// Checks every documented invariant; returns one message per violation,
/// empty when the configuration is valid.
std::vector<std::string> validate_config(const EngineConfig& cfg, const TierModel& tiers);

}  // namespace tiersim
