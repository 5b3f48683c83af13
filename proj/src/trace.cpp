#include "tiersim/trace.hpp"

#include <array>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <stdexcept>

namespace tiersim {

namespace {

constexpr std::array<char, 7> kMagic = {'M', 'T', 'R', 'A', 'C', 'E', '\0'};
constexpr std::uint8_t kVersion = 1;
constexpr std::size_t kRecordSize = 13;  // 8 time + 4 page + 1 flags

void put_u32(unsigned char* p, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

void put_u64(unsigned char* p, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) p[i] = static_cast<unsigned char>(v >> (8 * i));
}

std::uint32_t get_u32(const unsigned char* p) {
  std::uint32_t v = 0;
  for (int i = 0; i < 4; ++i) v |= static_cast<std::uint32_t>(p[i]) << (8 * i);
  return v;
}

std::uint64_t get_u64(const unsigned char* p) {
  std::uint64_t v = 0;
  for (int i = 0; i < 8; ++i) v |= static_cast<std::uint64_t>(p[i]) << (8 * i);
  return v;
}

}  // namespace

void write_trace(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open trace file for writing: " + path);

  unsigned char header[20];
  std::memcpy(header, kMagic.data(), kMagic.size());
  header[7] = kVersion;
  put_u32(header + 8, trace.total_pages);
  put_u64(header + 12, trace.events.size());
  out.write(reinterpret_cast<const char*>(header), sizeof(header));

  unsigned char rec[kRecordSize];
  for (const AccessEvent& ev : trace.events) {
    put_u64(rec, static_cast<std::uint64_t>(ev.time_ns));
    put_u32(rec + 8, ev.page);
    rec[12] = ev.is_write ? 1 : 0;
    out.write(reinterpret_cast<const char*>(rec), kRecordSize);
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

Trace read_trace(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open trace file: " + path);

  unsigned char header[20];
  in.read(reinterpret_cast<char*>(header), sizeof(header));
  if (in.gcount() != sizeof(header))
    throw std::runtime_error("truncated trace header: " + path);
  if (std::memcmp(header, kMagic.data(), kMagic.size()) != 0)
    throw std::runtime_error("bad magic, not a trace file: " + path);
  if (header[7] != kVersion)
    throw std::runtime_error("unsupported trace version " + std::to_string(header[7]));

  Trace trace;
  trace.total_pages = get_u32(header + 8);
  const std::uint64_t count = get_u64(header + 12);
  trace.events.reserve(count);

  unsigned char rec[kRecordSize];
  std::int64_t prev_time = 0;
  for (std::uint64_t i = 0; i < count; ++i) {
    in.read(reinterpret_cast<char*>(rec), kRecordSize);
    if (in.gcount() != static_cast<std::streamsize>(kRecordSize))
      throw std::runtime_error("truncated trace record " + std::to_string(i));
    AccessEvent ev;
    ev.time_ns = static_cast<std::int64_t>(get_u64(rec));
    ev.page = get_u32(rec + 8);
    const unsigned char flags = rec[12];
    if (flags > 1)
      throw std::runtime_error("malformed flags in record " + std::to_string(i));
    ev.is_write = flags != 0;
    if (i > 0 && ev.time_ns < prev_time)
      throw std::runtime_error("non-monotone timestamp at record " + std::to_string(i));
    prev_time = ev.time_ns;
    if (trace.total_pages > 0 && ev.page >= trace.total_pages)
      throw std::runtime_error("page id out of range at record " + std::to_string(i));
    trace.events.push_back(ev);
  }
  return trace;
}

void export_trace_csv(const Trace& trace, const std::string& path) {
  std::ofstream out(path, std::ios::trunc);
  if (!out) throw std::runtime_error("cannot open csv file for writing: " + path);
  out << "time_ns,page,is_write\n";
  char line[64];
  for (const AccessEvent& ev : trace.events) {
    std::snprintf(line, sizeof(line), "%lld,%u,%d\n",
                  static_cast<long long>(ev.time_ns), ev.page, ev.is_write ? 1 : 0);
    out << line;
  }
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace tiersim
