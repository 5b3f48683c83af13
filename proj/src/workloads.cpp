#include "tiersim/workloads.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

namespace tiersim {

namespace {

// Uniform double in [0,1) from the top 53 bits. Avoids std::*_distribution,
// whose output is implementation-defined.
double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Unbiased uniform integer in [0, n) by rejection.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t n) {
  const std::uint64_t threshold = -n % n;  // 2^64 mod n
  for (;;) {
    const std::uint64_t r = rng();
    if (r >= threshold) return r % n;
  }
}

template <typename T>
void fisher_yates(std::vector<T>& v, std::mt19937_64& rng) {
  for (std::size_t i = v.size(); i > 1; --i)
    std::swap(v[i - 1], v[bounded(rng, i)]);
}

// Zipf(s) over ranks 0..n-1: mass(r) proportional to (r+1)^-s.
// Sampling goes through the cumulative masses with binary search.
struct ZipfTable {
  std::vector<double> cum;  // cum[r] = P(rank <= r)

  ZipfTable(std::uint32_t n, double s) {
    cum.resize(n);
    double total = 0.0;
    for (std::uint32_t r = 0; r < n; ++r) {
      total += std::pow(static_cast<double>(r) + 1.0, -s);
      cum[r] = total;
    }
    for (std::uint32_t r = 0; r < n; ++r) cum[r] /= total;
  }

  std::uint32_t rank_of(double u) const {
    auto it = std::upper_bound(cum.begin(), cum.end(), u);
    if (it == cum.end()) --it;
    return static_cast<std::uint32_t>(it - cum.begin());
  }
};

std::vector<PageId> seeded_permutation(std::uint32_t n, std::uint64_t seed) {
  std::vector<PageId> perm(n);
  std::iota(perm.begin(), perm.end(), PageId{0});
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ull);
  fisher_yates(perm, rng);
  return perm;
}

std::uint64_t event_count(const WorkloadSpec& spec) {
  return static_cast<std::uint64_t>(
      std::llround(spec.access_rate * static_cast<double>(spec.duration_ns) / 1e9));
}

std::vector<std::int64_t> event_times(const WorkloadSpec& spec, std::mt19937_64& rng) {
  const std::uint64_t n = event_count(spec);
  std::vector<std::int64_t> times(n);
  if (spec.poisson_arrivals) {
    // Conditional on the event count, Poisson arrivals are order statistics
    // of uniform draws.
    for (auto& t : times)
      t = static_cast<std::int64_t>(bounded(rng, static_cast<std::uint64_t>(spec.duration_ns)));
    std::sort(times.begin(), times.end());
  } else {
    for (std::uint64_t i = 0; i < n; ++i) {
      const auto num = static_cast<unsigned __int128>(i) *
                       static_cast<unsigned __int128>(spec.duration_ns);
      times[i] = static_cast<std::int64_t>(num / n);
    }
  }
  return times;
}

// Per-interval page pre-assignment used by the stratified zipf generator:
// the interval's m draws go through the quantile grid (j+0.5)/m, so the
// per-page counts repeat exactly in every interval of equal size.
std::vector<std::uint32_t> stratified_ranks(const ZipfTable& table, std::size_t m,
                                            std::mt19937_64& rng) {
  std::vector<std::uint32_t> ranks(m);
  for (std::size_t j = 0; j < m; ++j)
    ranks[j] = table.rank_of((static_cast<double>(j) + 0.5) / static_cast<double>(m));
  fisher_yates(ranks, rng);
  return ranks;
}

// Groups consecutive events into reference intervals and hands each group to
// `fill`, which assigns pages for [begin, end).
template <typename Fill>
void for_each_interval(const std::vector<std::int64_t>& times, std::int64_t interval_ns,
                       Fill&& fill) {
  std::size_t begin = 0;
  while (begin < times.size()) {
    const std::int64_t bucket = times[begin] / interval_ns;
    std::size_t end = begin;
    while (end < times.size() && times[end] / interval_ns == bucket) ++end;
    fill(begin, end);
    begin = end;
  }
}

void generate_uniform(const WorkloadSpec& spec, std::vector<PageId>& pages,
                      std::mt19937_64& rng) {
  for (auto& p : pages) p = static_cast<PageId>(bounded(rng, spec.total_pages));
}

void generate_zipfian(const WorkloadSpec& spec, const std::vector<std::int64_t>& times,
                      std::vector<PageId>& pages, std::mt19937_64& rng) {
  const ZipfTable table(spec.total_pages, spec.zipf_s);
  const std::vector<PageId> perm = seeded_permutation(spec.total_pages, spec.seed);
  if (spec.poisson_arrivals) {
    for (auto& p : pages) p = perm[table.rank_of(u01(rng))];
    return;
  }
  for_each_interval(times, spec.interval_ns, [&](std::size_t begin, std::size_t end) {
    const std::vector<std::uint32_t> ranks = stratified_ranks(table, end - begin, rng);
    for (std::size_t i = begin; i < end; ++i) pages[i] = perm[ranks[i - begin]];
  });
}

void generate_hotset_shift(const WorkloadSpec& spec, const std::vector<std::int64_t>& times,
                           std::vector<PageId>& pages, std::mt19937_64& rng) {
  const std::uint32_t n = spec.total_pages;
  const auto h = std::max<std::uint32_t>(
      1, static_cast<std::uint32_t>(std::llround(spec.hot_fraction * n)));
  const std::vector<PageId> perm = seeded_permutation(n, spec.seed);

  auto phase_of = [&](std::int64_t t) {
    std::size_t p = 0;
    while (p < spec.shift_times_ns.size() && t >= spec.shift_times_ns[p]) ++p;
    return p;
  };

  // Hot flags are allocated per interval (ceil(concentration * m) hot draws,
  // positions shuffled) so every phase meets the concentration floor exactly.
  std::vector<std::uint8_t> hot_flags;
  for_each_interval(times, spec.interval_ns, [&](std::size_t begin, std::size_t end) {
    const std::size_t m = end - begin;
    const auto n_hot = static_cast<std::size_t>(
        std::ceil(spec.hot_concentration * static_cast<double>(m)));
    hot_flags.assign(m, 0);
    std::fill(hot_flags.begin(), hot_flags.begin() + std::min(n_hot, m), std::uint8_t{1});
    fisher_yates(hot_flags, rng);
    for (std::size_t i = begin; i < end; ++i) {
      const std::size_t phase = phase_of(times[i]);
      const std::uint64_t start = (static_cast<std::uint64_t>(phase) * h) % n;
      std::uint64_t idx;
      if (hot_flags[i - begin])
        idx = (start + bounded(rng, h)) % n;
      else
        idx = (start + h + bounded(rng, n - h)) % n;
      pages[i] = perm[idx];
    }
  });
}

void generate_one_hit_wonder(const WorkloadSpec& spec, const std::vector<std::int64_t>& times,
                             std::vector<PageId>& pages, std::mt19937_64& rng) {
  const std::uint32_t n = spec.total_pages;
  const auto n_burst = std::max<std::uint32_t>(
      1, static_cast<std::uint32_t>(std::llround(spec.burst_fraction * n)));
  const std::vector<PageId> perm = seeded_permutation(n, spec.seed);
  const ZipfTable backdrop(n - n_burst, spec.backdrop_zipf_s);

  for (std::size_t i = 0; i < pages.size(); ++i) {
    const std::int64_t t = times[i];
    const auto window = static_cast<std::uint64_t>(t / spec.burst_interval_ns);
    const bool in_window = window < n_burst && (t % spec.burst_interval_ns) < spec.interval_ns;
    if (in_window && u01(rng) < spec.burst_mass)
      pages[i] = perm[window];  // the window's burst page, never touched again
    else
      pages[i] = perm[n_burst + backdrop.rank_of(u01(rng))];
  }
}

void generate_oscillating(const WorkloadSpec& spec, const std::vector<std::int64_t>& times,
                          std::vector<PageId>& pages, std::mt19937_64& rng) {
  const std::uint32_t n = spec.total_pages;
  const auto n_osc = std::max<std::uint32_t>(
      1, static_cast<std::uint32_t>(std::llround(spec.page_fraction * n)));
  const std::vector<PageId> perm = seeded_permutation(n, spec.seed);
  const ZipfTable backdrop(n - n_osc, spec.backdrop_zipf_s);
  const std::int64_t period_ns = spec.interval_ns * spec.period_intervals;

  for (std::size_t i = 0; i < pages.size(); ++i) {
    const bool on = (times[i] / period_ns) % 2 == 0;
    if (on && u01(rng) < spec.osc_mass)
      pages[i] = perm[bounded(rng, n_osc)];
    else
      pages[i] = perm[n_osc + backdrop.rank_of(u01(rng))];
  }
}

// Zipfian core with an oscillating overlay and occasional one-off bursts.
void generate_mixed(const WorkloadSpec& spec, const std::vector<std::int64_t>& times,
                    std::vector<PageId>& pages, std::mt19937_64& rng) {
  const std::uint32_t n = spec.total_pages;
  const auto n_osc = std::max<std::uint32_t>(
      1, static_cast<std::uint32_t>(std::llround(spec.page_fraction * n)));
  const auto n_burst = std::max<std::uint32_t>(
      1, static_cast<std::uint32_t>(std::llround(spec.burst_fraction * n)));
  if (n_osc + n_burst >= n) throw std::invalid_argument("mixed: groups exhaust all pages");
  const std::vector<PageId> perm = seeded_permutation(n, spec.seed);
  const ZipfTable core(n - n_osc - n_burst, spec.zipf_s);
  const std::int64_t period_ns = spec.interval_ns * spec.period_intervals;

  for (std::size_t i = 0; i < pages.size(); ++i) {
    const std::int64_t t = times[i];
    const auto window = static_cast<std::uint64_t>(t / spec.burst_interval_ns);
    const bool in_window = window < n_burst && (t % spec.burst_interval_ns) < spec.interval_ns;
    if (in_window && u01(rng) < spec.burst_mass) {
      pages[i] = perm[n_osc + window];
    } else if ((t / period_ns) % 2 == 0 && u01(rng) < spec.osc_mass) {
      pages[i] = perm[bounded(rng, n_osc)];
    } else {
      pages[i] = perm[n_osc + n_burst + core.rank_of(u01(rng))];
    }
  }
}

}  // namespace

const char* to_string(WorkloadKind kind) {
  switch (kind) {
    case WorkloadKind::Uniform: return "uniform";
    case WorkloadKind::Zipfian: return "zipfian";
    case WorkloadKind::HotsetShift: return "hotset_shift";
    case WorkloadKind::OneHitWonder: return "one_hit_wonder";
    case WorkloadKind::Oscillating: return "oscillating";
    case WorkloadKind::Mixed: return "mixed";
  }
  return "unknown";
}

bool parse_workload_kind(const std::string& name, WorkloadKind* out) {
  for (WorkloadKind k : {WorkloadKind::Uniform, WorkloadKind::Zipfian, WorkloadKind::HotsetShift,
                         WorkloadKind::OneHitWonder, WorkloadKind::Oscillating,
                         WorkloadKind::Mixed}) {
    if (name == to_string(k)) {
      *out = k;
      return true;
    }
  }
  return false;
}

std::vector<std::string> validate_spec(const WorkloadSpec& spec) {
  std::vector<std::string> out;
  auto bad = [&out](const std::string& m) { out.push_back(m); };
  auto open_unit = [](double x) { return x > 0.0 && x < 1.0; };

  if (spec.total_pages == 0) bad("total_pages must be > 0");
  if (spec.duration_ns <= 0) bad("duration_ns must be > 0");
  if (!(spec.access_rate > 0.0)) bad("access_rate must be > 0");
  if (!open_unit(spec.write_fraction)) bad("write_fraction must be in (0,1)");
  if (spec.interval_ns <= 0) bad("interval_ns must be > 0");
  if (spec.zipf_s < 0.0) bad("zipf_s must be >= 0");

  switch (spec.kind) {
    case WorkloadKind::HotsetShift: {
      if (!open_unit(spec.hot_fraction)) bad("hot_fraction must be in (0,1)");
      if (!open_unit(spec.hot_concentration)) bad("hot_concentration must be in (0,1)");
      std::int64_t prev = 0;
      for (std::int64_t t : spec.shift_times_ns) {
        if (t <= prev || t >= spec.duration_ns)
          bad("shift_times_ns must be strictly increasing within (0, duration)");
        prev = t;
      }
      break;
    }
    case WorkloadKind::OneHitWonder:
      if (!open_unit(spec.burst_fraction)) bad("burst_fraction must be in (0,1)");
      if (!open_unit(spec.burst_mass)) bad("burst_mass must be in (0,1)");
      if (spec.burst_interval_ns <= 0) bad("burst_interval_ns must be > 0");
      break;
    case WorkloadKind::Oscillating:
      if (!open_unit(spec.page_fraction)) bad("page_fraction must be in (0,1)");
      if (!open_unit(spec.osc_mass)) bad("osc_mass must be in (0,1)");
      if (spec.period_intervals < 1) bad("period_intervals must be >= 1");
      break;
    case WorkloadKind::Mixed:
      if (!open_unit(spec.page_fraction)) bad("page_fraction must be in (0,1)");
      if (!open_unit(spec.burst_fraction)) bad("burst_fraction must be in (0,1)");
      if (!open_unit(spec.osc_mass)) bad("osc_mass must be in (0,1)");
      if (!open_unit(spec.burst_mass)) bad("burst_mass must be in (0,1)");
      if (spec.burst_interval_ns <= 0) bad("burst_interval_ns must be > 0");
      if (spec.period_intervals < 1) bad("period_intervals must be >= 1");
      break;
    default:
      break;
  }
  return out;
}

Trace generate(const WorkloadSpec& spec) {
  const std::vector<std::string> violations = validate_spec(spec);
  if (!violations.empty()) throw std::invalid_argument("invalid workload spec: " + violations[0]);

  std::mt19937_64 rng(spec.seed);
  const std::vector<std::int64_t> times = event_times(spec, rng);
  std::vector<PageId> pages(times.size());

  switch (spec.kind) {
    case WorkloadKind::Uniform: generate_uniform(spec, pages, rng); break;
    case WorkloadKind::Zipfian: generate_zipfian(spec, times, pages, rng); break;
    case WorkloadKind::HotsetShift: generate_hotset_shift(spec, times, pages, rng); break;
    case WorkloadKind::OneHitWonder: generate_one_hit_wonder(spec, times, pages, rng); break;
    case WorkloadKind::Oscillating: generate_oscillating(spec, times, pages, rng); break;
    case WorkloadKind::Mixed: generate_mixed(spec, times, pages, rng); break;
  }

  Trace trace;
  trace.total_pages = spec.total_pages;
  trace.events.resize(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) {
    trace.events[i].time_ns = times[i];
    trace.events[i].page = pages[i];
    trace.events[i].is_write = u01(rng) < spec.write_fraction;
  }
  return trace;
}

}  // namespace tiersim
