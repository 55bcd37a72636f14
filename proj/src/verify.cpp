#include "es/verify.hpp"

#include "es/search.hpp"

#include <json.hpp>
#include <omp.h>

#include <atomic>
#include <chrono>
#include <fstream>
#include <limits>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

namespace es {

namespace {

// Same bound as the search module: below this everything fits the 128-bit path.
constexpr u64 kFastN = u64{1} << 31;

void require_verify_domain(bool ok) {
  if (!ok) throw std::domain_error("verify requires n >= 2 and positive triple components");
}

}  // namespace

std::optional<bool> verify_u128(u128 n, u128 x, u128 y, u128 z) {
  require_verify_domain(n >= 2 && x >= 1 && y >= 1 && z >= 1);
  u128 xy, yz, xz, xyz, lhs, sum, rhs;
  if (__builtin_mul_overflow(x, y, &xy)) return std::nullopt;
  if (__builtin_mul_overflow(y, z, &yz)) return std::nullopt;
  if (__builtin_mul_overflow(x, z, &xz)) return std::nullopt;
  if (__builtin_mul_overflow(xy, z, &xyz)) return std::nullopt;
  if (__builtin_mul_overflow(xyz, (u128)4, &lhs)) return std::nullopt;
  if (__builtin_add_overflow(yz, xz, &sum)) return std::nullopt;
  if (__builtin_add_overflow(sum, xy, &sum)) return std::nullopt;
  if (__builtin_mul_overflow(n, sum, &rhs)) return std::nullopt;
  return lhs == rhs;
}

bool verify(const Natural& n, const Triple& t) {
  require_verify_domain(n >= Natural(2) && !t.x.is_zero() && !t.y.is_zero() && !t.z.is_zero());
  auto nn = n.narrow(), nx = t.x.narrow(), ny = t.y.narrow(), nz = t.z.narrow();
  if (nn && nx && ny && nz) {
    if (auto fast = verify_u128(*nn, *nx, *ny, *nz)) return *fast;
  }
  const mpz_class &x = t.x.mpz(), &y = t.y.mpz(), &z = t.z.mpz();
  mpz_class lhs = 4 * x * y * z;
  mpz_class rhs = n.mpz() * (y * z + x * z + x * y);
  return lhs == rhs;
}

namespace {

using Clock = std::chrono::steady_clock;

struct ChunkResult {
  std::array<u64, 7> counts{};
  u64 search_count = 0;
  u64 mordell = 0;
  std::vector<Failure> failures;
  std::string rows;
  bool processed = false;
};

void append_row(ChunkResult& out, const std::string& n, Family f, const Triple& t,
                const char* path, long long cost_ns) {
  out.rows += n;
  out.rows += ',';
  out.rows += family_name(f);
  out.rows += ',';
  out.rows += t.x.str();
  out.rows += ',';
  out.rows += t.y.str();
  out.rows += ',';
  out.rows += t.z.str();
  out.rows += ',';
  out.rows += path;
  out.rows += ',';
  out.rows += std::to_string(cost_ns);
  out.rows += '\n';
}

void process_one_u64(u64 n, bool verbose, ChunkResult& out) {
  Clock::time_point t0;
  if (verbose) t0 = Clock::now();
  ResidueClassU64 c = classify_u64(n);
  out.counts[static_cast<int>(c.family)]++;
  if (c.mordell_hard) out.mordell++;

  TripleU128 t;
  const char* path;
  if (c.family != Family::Search) {
    t = construct_u128(c);
    path = "closed_form";
  } else {
    auto found = search_min_u64(n);
    if (!found) {
      out.failures.push_back({Natural(n), "search_exhausted"});
      return;
    }
    t = *found;
    out.search_count++;
    path = "search";
  }

  auto fast = verify_u128(n, t.x, t.y, t.z);
  bool ok = fast ? *fast : verify(Natural(n), widen(t));
  if (!ok) {
    out.failures.push_back({Natural(n), "verify_failed"});
    return;
  }
  if (verbose) {
    auto cost = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
    append_row(out, std::to_string(n), c.family, widen(t), path, cost);
  }
}

void process_one_big(const Natural& n, bool verbose, ChunkResult& out) {
  Clock::time_point t0;
  if (verbose) t0 = Clock::now();
  SolveResult r = solve(n);
  out.counts[static_cast<int>(r.family)]++;
  if (r.mordell_hard) out.mordell++;
  if (r.status != SearchStatus::found) {
    out.failures.push_back({n, "search_exhausted"});
    return;
  }
  if (r.family == Family::Search) out.search_count++;
  if (!verify(n, *r.triple)) {
    out.failures.push_back({n, "verify_failed"});
    return;
  }
  if (verbose) {
    auto cost = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - t0).count();
    append_row(out, n.str(), r.family, *r.triple,
               r.family == Family::Search ? "search" : "closed_form", cost);
  }
}

void process_chunk(const Natural& base, u64 len, bool verbose, ChunkResult& out) {
  auto nb = base.narrow();
  if (nb && *nb + (len - 1) <= kFastN) {
    u64 b = static_cast<u64>(*nb);
    for (u64 i = 0; i < len; ++i) process_one_u64(b + i, verbose, out);
  } else {
    for (u64 i = 0; i < len; ++i) process_one_big(base + Natural(i), verbose, out);
  }
  out.processed = true;
}

// Aggregate contribution of a chunk already checkpointed as done: it verified
// cleanly, so its counts equal the classification census and it adds no
// failures. Classification is cheap; nothing gets re-solved.
void census_chunk(const Natural& base, u64 len, ChunkResult& out) {
  auto nb = base.narrow();
  bool fast = nb && *nb + (len - 1) <= std::numeric_limits<u64>::max();
  for (u64 i = 0; i < len; ++i) {
    Family f;
    bool mordell;
    if (fast) {
      ResidueClassU64 c = classify_u64(static_cast<u64>(*nb) + i);
      f = c.family;
      mordell = c.mordell_hard;
    } else {
      ResidueClass c = classify(base + Natural(i));
      f = c.family;
      mordell = c.mordell_hard;
    }
    out.counts[static_cast<int>(f)]++;
    if (f == Family::Search) out.search_count++;
    if (mordell) out.mordell++;
  }
  out.processed = true;
}

u64 range_width(const Natural& lo, const Natural& hi) {
  if (lo < Natural(2) || hi < lo)
    throw std::invalid_argument("verify_range requires 2 <= lo <= hi");
  Natural w = hi.checked_sub(lo) + Natural(1);
  if (!w.fits_u64()) throw std::invalid_argument("range too wide");
  return w.to_u64();
}

RangeReport assemble(const Natural& lo, const Natural& hi, std::vector<ChunkResult>& chunks,
                     std::ostream* verbose_sink, double seconds) {
  RangeReport r;
  r.lo = lo;
  r.hi = hi;
  u64 total = 0;
  if (verbose_sink) *verbose_sink << kCsvHeader << '\n';
  for (ChunkResult& c : chunks) {
    if (!c.processed) continue;
    for (size_t f = 0; f < r.per_family_counts.size(); ++f) {
      r.per_family_counts[f] += c.counts[f];
      total += c.counts[f];
    }
    r.search_count += c.search_count;
    r.mordell_hard_count += c.mordell;
    for (Failure& fl : c.failures) r.failures.push_back(std::move(fl));
    if (verbose_sink && !c.rows.empty()) *verbose_sink << c.rows;
  }
  r.wall_time_seconds = seconds;
  r.throughput_per_second = seconds > 0 ? static_cast<double>(total) / seconds : 0.0;
  return r;
}

}  // namespace

RangeReport verify_range(const Natural& lo, const Natural& hi, const RangeOptions& opts) {
  const auto t0 = Clock::now();
  const u64 width = range_width(lo, hi);
  const u64 chunk_size = opts.chunk_size ? opts.chunk_size : 4096;
  const u64 n_chunks = (width + chunk_size - 1) / chunk_size;

  std::set<u64> done;
  std::ofstream checkpoint;
  if (!opts.checkpoint_path.empty()) {
    std::ifstream in(opts.checkpoint_path);
    std::string start, word;
    while (in >> start >> word) {
      if (word != "done") continue;
      auto v = Natural::from_decimal(start);
      if (!v || *v < lo) continue;
      Natural off = v->checked_sub(lo);
      if (!off.fits_u64()) continue;
      u64 o = off.to_u64();
      if (o % chunk_size == 0 && o / chunk_size < n_chunks) done.insert(o / chunk_size);
    }
    checkpoint.open(opts.checkpoint_path, std::ios::app);
    if (!checkpoint)
      throw std::runtime_error("cannot open checkpoint file: " + opts.checkpoint_path);
  }

  std::vector<ChunkResult> results(n_chunks);
  std::mutex checkpoint_mutex;
  std::atomic<u64> fresh{0};
  std::atomic<bool> io_failed{false};
  const bool verbose = opts.verbose_sink != nullptr;
  const int threads =
      opts.workers ? static_cast<int>(opts.workers) : omp_get_max_threads();

#pragma omp parallel for schedule(dynamic) num_threads(threads)
  for (long long i = 0; i < static_cast<long long>(n_chunks); ++i) {
    if (io_failed.load(std::memory_order_relaxed)) continue;
    const u64 idx = static_cast<u64>(i);
    const Natural base = lo + Natural(idx * chunk_size);
    const u64 len = std::min(chunk_size, width - idx * chunk_size);
    const bool resumed = done.count(idx) > 0;
    if (resumed && !verbose) {
      census_chunk(base, len, results[idx]);
      continue;
    }
    if (opts.max_chunks && fresh.fetch_add(1) >= opts.max_chunks) continue;
    process_chunk(base, len, verbose, results[idx]);
    if (!resumed && checkpoint.is_open() && results[idx].failures.empty()) {
      std::lock_guard<std::mutex> lock(checkpoint_mutex);
      checkpoint << base.str() << " done\n";
      checkpoint.flush();
      if (!checkpoint) io_failed.store(true, std::memory_order_relaxed);
    }
  }
  if (io_failed)
    throw std::runtime_error("checkpoint write failed (partial checkpoint left intact): " +
                             opts.checkpoint_path);

  double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return assemble(lo, hi, results, opts.verbose_sink, seconds);
}

RangeReport verify_range_serial(const Natural& lo, const Natural& hi) {
  const auto t0 = Clock::now();
  const u64 width = range_width(lo, hi);
  std::vector<ChunkResult> one(1);
  process_chunk(lo, width, false, one[0]);
  double seconds = std::chrono::duration<double>(Clock::now() - t0).count();
  return assemble(lo, hi, one, nullptr, seconds);
}

std::string report_json(const RangeReport& r) {
  nlohmann::ordered_json j;
  j["lo"] = r.lo.str();
  j["hi"] = r.hi.str();
  nlohmann::ordered_json counts;
  for (Family f : kAllFamilies) counts[family_name(f)] = r.count(f);
  j["per_family_counts"] = counts;
  j["search_count"] = r.search_count;
  j["mordell_hard_count"] = r.mordell_hard_count;
  nlohmann::ordered_json failures = nlohmann::ordered_json::array();
  for (const Failure& f : r.failures) failures.push_back({{"n", f.n.str()}, {"reason", f.reason}});
  j["failures"] = failures;
  j["wall_time_seconds"] = r.wall_time_seconds;
  j["throughput_per_second"] = r.throughput_per_second;
  return j.dump(2) + "\n";
}

}  // namespace es
