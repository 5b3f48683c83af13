#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tiersim/types.hpp"

namespace tiersim {

/// One sampled-or-true memory reference in the ground-truth stream.
struct AccessEvent {
  std::int64_t time_ns = 0;
  PageId page = 0;
  bool is_write = false;

  friend bool operator==(const AccessEvent&, const AccessEvent&) = default;
};

/// Timestamped page reference stream; the simulator's ground truth.
/// Events are non-decreasing in time.
struct Trace {
  std::uint32_t total_pages = 0;
  std::vector<AccessEvent> events;

  friend bool operator==(const Trace&, const Trace&) = default;
};

// .mtrace binary format: 8-byte magic "MTRACE\0" + version, u32 total_pages,
// u64 event count, then fixed-width little-endian records
// (time: 8 bytes, page: 4 bytes, flags: 1 byte).
void write_trace(const Trace& trace, const std::string& path);
Trace read_trace(const std::string& path);

/// Human-readable exporter: header line `time_ns,page,is_write`.
void export_trace_csv(const Trace& trace, const std::string& path);

}  // namespace tiersim
