#pragma once

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace sawsine {

/// Worker count for grid verification: TOOL_THREADS if set to a positive
/// value, otherwise (unset or 0) the hardware concurrency.
inline unsigned tool_threads() {
  if (const char* s = std::getenv("TOOL_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(s, &end, 10);
    if (end != s && v > 0) return static_cast<unsigned>(v);
  }
  unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

/// Applies fn(lo, hi) to fixed-size chunks of [0, n) and returns the chunk
/// results in chunk order.  Chunk boundaries depend only on n, never on the
/// worker count, so any subsequent in-order reduction is schedule-independent.
template <class R, class Fn>
std::vector<R> map_chunks(long n, Fn fn, long chunk = 1 << 16) {
  const long nchunks = n > 0 ? (n + chunk - 1) / chunk : 0;
  std::vector<R> results(static_cast<std::size_t>(nchunks));
  unsigned workers = tool_threads();
  if (workers <= 1 || nchunks <= 1) {
    for (long c = 0; c < nchunks; ++c)
      results[static_cast<std::size_t>(c)] = fn(c * chunk, std::min(n, (c + 1) * chunk));
    return results;
  }
  std::atomic<long> next{0};
  auto work = [&] {
    for (long c = next.fetch_add(1); c < nchunks; c = next.fetch_add(1))
      results[static_cast<std::size_t>(c)] = fn(c * chunk, std::min(n, (c + 1) * chunk));
  };
  std::vector<std::thread> pool;
  const unsigned nthreads = std::min<unsigned>(workers, static_cast<unsigned>(nchunks));
  pool.reserve(nthreads);
  for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(work);
  for (auto& th : pool) th.join();
  return results;
}

}  // namespace sawsine
