#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiersim/trace.hpp"

namespace tiersim {

enum class WorkloadKind {
  Uniform,
  Zipfian,
  HotsetShift,
  OneHitWonder,
  Oscillating,
  Mixed,
};

const char* to_string(WorkloadKind kind);
bool parse_workload_kind(const std::string& name, WorkloadKind* out);

/// Synthetic workload description. Only the fields relevant to `kind` are
/// consulted; the rest keep their defaults.
struct WorkloadSpec {
  WorkloadKind kind = WorkloadKind::Uniform;
  std::uint32_t total_pages = 0;
  std::int64_t duration_ns = 0;
  double access_rate = 0.0;  // events per virtual second
  double write_fraction = 0.1;
  std::uint64_t seed = 1;
  bool poisson_arrivals = false;  // IID arrivals and draws instead of the
                                  // deterministic constant-rate schedule

  // Reference interval used for zipf stratification, oscillation phases and
  // burst windows. Matches the policy interval of the run it feeds.
  std::int64_t interval_ns = 500'000'000;

  double zipf_s = 0.99;

  // HotsetShift: disjoint hot set per phase, shifting at shift_times_ns.
  double hot_fraction = 0.1;
  std::vector<std::int64_t> shift_times_ns;
  double hot_concentration = 0.9;

  // OneHitWonder: burst-only pages that surge once and go silent.
  double burst_fraction = 0.02;
  std::int64_t burst_interval_ns = 1'000'000'000;
  double burst_mass = 0.3;    // share of events in a burst window hitting the burst page
  double backdrop_zipf_s = 0.9;

  // Oscillating: a page group alternating hot/idle every period_intervals.
  std::uint32_t period_intervals = 4;
  double page_fraction = 0.2;
  double osc_mass = 0.5;  // share of events to the group while hot
};

/// Returns one message per violated spec invariant; empty when valid.
std::vector<std::string> validate_spec(const WorkloadSpec& spec);

/// Deterministic generation: the trace is fully determined by the spec,
/// including the seed. Throws std::invalid_argument on an invalid spec.
Trace generate(const WorkloadSpec& spec);

}  // namespace tiersim
