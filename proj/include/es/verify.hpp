#pragma once

#include "es/families.hpp"

#include <array>
#include <iosfwd>
#include <string>
#include <vector>

namespace es {

/// Exact check of 4/n = 1/x + 1/y + 1/z via the cleared-denominator identity
/// 4xyz = n(yz + xz + xy). Tries the 128-bit path first and falls back to
/// arbitrary precision on overflow; the two are tested to agree.
bool verify(const Natural& n, const Triple& t);

/// 128-bit route alone: absent when any intermediate overflows.
std::optional<bool> verify_u128(u128 n, u128 x, u128 y, u128 z);

struct Failure {
  Natural n;
  std::string reason;  // "search_exhausted" | "verify_failed"
};

struct RangeReport {
  Natural lo, hi;
  std::array<u64, 7> per_family_counts{};  // indexed by Family
  u64 search_count = 0;
  u64 mordell_hard_count = 0;
  std::vector<Failure> failures;
  double wall_time_seconds = 0.0;
  double throughput_per_second = 0.0;

  u64 count(Family f) const { return per_family_counts[static_cast<int>(f)]; }
};

struct RangeOptions {
  unsigned workers = 0;           // 0 = all hardware threads
  u64 chunk_size = 4096;          // contiguous values of n per work unit
  std::string checkpoint_path;    // empty = no checkpointing
  std::ostream* verbose_sink = nullptr;  // per-n CSV rows when set
  u64 max_chunks = 0;             // 0 = unlimited; otherwise stop early after
                                  // that many fresh chunks (crash simulation)
};

/// Solves and verifies every n in [lo, hi]. Work is split into fixed-size
/// contiguous chunks handed to OpenMP workers; chunk results are merged in
/// chunk order, so every aggregate except the timing fields is independent
/// of worker count and scheduling. A failure is recorded, not thrown.
///
/// Checkpointing: one line "<chunk_start> done" is appended and flushed as
/// each chunk completes cleanly. On restart the done chunks are not re-solved;
/// their aggregate contribution is recomputed by classification census, which
/// matches the original because a chunk is only marked done when every n in
/// it verified.
RangeReport verify_range(const Natural& lo, const Natural& hi, const RangeOptions& opts = {});

/// Plain single loop, no chunking, no OpenMP, no checkpoint. The reference
/// the parallel version is tested and benchmarked against.
RangeReport verify_range_serial(const Natural& lo, const Natural& hi);

/// JSON object with fields lo, hi, per_family_counts, search_count,
/// mordell_hard_count, failures, wall_time_seconds, throughput_per_second.
/// lo/hi and failure n values are decimal strings (they are arbitrary
/// precision); counts are numbers.
std::string report_json(const RangeReport& r);

inline constexpr const char* kCsvHeader = "n,family,x,y,z,path,cost_ns";

}  // namespace es
