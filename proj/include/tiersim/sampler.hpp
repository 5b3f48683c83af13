#pragma once

#include <random>
#include <span>
#include <unordered_map>

#include "tiersim/trace.hpp"

namespace tiersim {

/// PEBS-style event sampling: each event is counted independently with
/// probability 1/period. Deterministic given the rng state; one rng draw is
/// consumed per event so the stream stays aligned across period changes.
std::unordered_map<PageId, std::uint64_t> sample_interval(std::span<const AccessEvent> events,
                                                          std::uint32_t period,
                                                          std::mt19937_64& rng);

/// Exact per-page event counts.
std::unordered_map<PageId, std::uint64_t> true_counts(std::span<const AccessEvent> events);

}  // namespace tiersim
