#include "tiersim/types.hpp"

#include <cmath>
#include <sstream>

namespace tiersim {

namespace {

bool in_unit_open_closed(double x) { return x > 0.0 && x <= 1.0; }

}  // namespace

std::vector<std::string> validate_config(const EngineConfig& cfg, const TierModel& tiers) {
  std::vector<std::string> out;
  auto bad = [&out](const std::string& msg) { out.push_back(msg); };

  if (!in_unit_open_closed(cfg.alpha_s)) bad("alpha_s must be in (0,1]");
  if (!in_unit_open_closed(cfg.alpha_l)) bad("alpha_l must be in (0,1]");

  constexpr double kEps = 1e-9;
  if (std::abs(cfg.w_s_history + cfg.w_l_history - 1.0) > kEps)
    bad("w_s_history/w_l_history: weights must sum to 1");
  if (std::abs(cfg.w_s_recency + cfg.w_l_recency - 1.0) > kEps)
    bad("w_s_recency/w_l_recency: weights must sum to 1");
  if (cfg.w_s_history < 0.0 || cfg.w_l_history < 0.0) bad("history weights must be >= 0");
  if (cfg.w_s_recency < 0.0 || cfg.w_l_recency < 0.0) bad("recency weights must be >= 0");
  if (!(cfg.w_s_recency > cfg.w_s_history))
    bad("w_s_recency must exceed w_s_history");

  if (cfg.sample_period_history < 1) bad("sample_period_history must be >= 1");
  if (cfg.sample_period_recency < 1) bad("sample_period_recency must be >= 1");
  if (cfg.policy_interval_history_ns <= 0) bad("policy_interval_history_ns must be > 0");
  if (cfg.policy_interval_recency_ns <= 0) bad("policy_interval_recency_ns must be > 0");
  if (cfg.hot_age_min < 1) bad("hot_age_min must be >= 1");
  if (cfg.pht_delta_frac <= 0.0) bad("pht_delta_frac must be > 0");
  if (cfg.pht_lambda_frac <= 0.0) bad("pht_lambda_frac must be > 0");
  if (cfg.recency_max_intervals < 1) bad("recency_max_intervals must be >= 1");
  if (cfg.bw_stable_frac <= 0.0) bad("bw_stable_frac must be > 0");
  if (cfg.wasteful_window < 1) bad("wasteful_window must be >= 1");
  if (cfg.migration_overhead_ns < 0.0) bad("migration_overhead_ns must be >= 0");
  if (!in_unit_open_closed(cfg.migration_latency_ewma))
    bad("migration_latency_ewma must be in (0,1]");

  if (tiers.fast_capacity_pages == 0) bad("fast_capacity_pages must be > 0");
  if (tiers.slow_capacity_pages == 0) bad("slow_capacity_pages must be > 0");
  if (!(tiers.latency_fast_ns > 0.0)) bad("latency_fast_ns must be > 0");
  if (!(tiers.latency_slow_ns > tiers.latency_fast_ns))
    bad("latency_slow_ns must exceed latency_fast_ns");
  if (!(tiers.bw_max_slow > 0.0)) bad("bw_max_slow must be > 0");
  if (tiers.bs_max < 1) bad("bs_max must be >= 1");
  if (tiers.page_size == 0) bad("page_size must be > 0");
  if (tiers.access_size == 0) bad("access_size must be > 0");

  return out;
}

}  // namespace tiersim
