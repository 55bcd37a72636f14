// esbench: timing comparison of the range-verification kernels.
//
//   esbench [hi] [jobs]
//
// Runs [2, hi] through the serial reference and the OpenMP chunked verifier,
// then times the single-triple verification kernel on its 128-bit path
// against the arbitrary-precision path.

#include "es/search.hpp"
#include "es/verify.hpp"

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

using namespace es;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

// arbitrary-precision route only, for the kernel comparison
bool verify_exact(const Natural& n, const Triple& t) {
  const mpz_class &x = t.x.mpz(), &y = t.y.mpz(), &z = t.z.mpz();
  return 4 * x * y * z == n.mpz() * (y * z + x * z + x * y);
}

}  // namespace

int main(int argc, char** argv) {
  u64 hi = argc > 1 ? std::strtoull(argv[1], nullptr, 10) : 200000;
  int jobs = argc > 2 ? std::atoi(argv[2]) : omp_get_max_threads();
  if (hi < 2 || jobs < 1) {
    std::fprintf(stderr, "usage: esbench [hi>=2] [jobs>=1]\n");
    return 1;
  }

  std::printf("range [2, %llu]\n", static_cast<unsigned long long>(hi));

  auto t0 = Clock::now();
  RangeReport serial = verify_range_serial(Natural(2), Natural(hi));
  double t_serial = seconds_since(t0);
  std::printf("  serial reference:   %8.3f s  %12.0f n/s\n", t_serial,
              (hi - 1) / t_serial);

  t0 = Clock::now();
  RangeOptions opts;
  opts.workers = static_cast<unsigned>(jobs);
  RangeReport parallel = verify_range(Natural(2), Natural(hi), opts);
  double t_parallel = seconds_since(t0);
  std::printf("  openmp x%-2d chunked: %8.3f s  %12.0f n/s  (%.2fx)\n", jobs, t_parallel,
              (hi - 1) / t_parallel, t_serial / t_parallel);

  bool agree = true;
  for (size_t f = 0; f < serial.per_family_counts.size(); ++f)
    agree = agree && serial.per_family_counts[f] == parallel.per_family_counts[f];
  agree = agree && serial.failures.empty() && parallel.failures.empty();
  std::printf("  aggregate agreement: %s\n", agree ? "yes" : "NO");

  // single-triple kernel: closed forms for n in [2, kernel_hi]
  const u64 kernel_hi = std::min<u64>(hi, 200000);
  u64 checked = 0;
  t0 = Clock::now();
  for (u64 n = 2; n <= kernel_hi; ++n) {
    ResidueClassU64 c = classify_u64(n);
    if (c.family == Family::Search) continue;
    TripleU128 t = construct_u128(c);
    auto ok = verify_u128(n, t.x, t.y, t.z);
    if (!ok || !*ok) {
      std::fprintf(stderr, "kernel disagreement at n=%llu\n", (unsigned long long)n);
      return 1;
    }
    ++checked;
  }
  double t_fast = seconds_since(t0);

  t0 = Clock::now();
  for (u64 n = 2; n <= kernel_hi; ++n) {
    ResidueClass c = classify(Natural(n));
    if (c.family == Family::Search) continue;
    if (!verify_exact(Natural(n), construct(c))) {
      std::fprintf(stderr, "kernel disagreement at n=%llu\n", (unsigned long long)n);
      return 1;
    }
  }
  double t_slow = seconds_since(t0);

  std::printf("verification kernel on %llu closed forms\n",
              static_cast<unsigned long long>(checked));
  std::printf("  128-bit path:       %8.3f s  %12.0f verifications/s\n", t_fast,
              checked / t_fast);
  std::printf("  bignum path:        %8.3f s  %12.0f verifications/s  (%.1fx slower)\n", t_slow,
              checked / t_slow, t_slow / t_fast);
  return agree ? 0 : 1;
}
