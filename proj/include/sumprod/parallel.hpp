#pragma once

#include <atomic>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace sumprod {

namespace detail {
inline std::atomic<unsigned>& thread_override() {
  static std::atomic<unsigned> v{0};
  return v;
}
} // namespace detail

inline void set_thread_count(unsigned n) { detail::thread_override().store(n); }

inline unsigned thread_count() {
  unsigned o = detail::thread_override().load();
  if (o) return o;
  if (const char* env = std::getenv("SUMPROD_THREADS")) {
    int v = std::atoi(env);
    if (v > 0) return static_cast<unsigned>(v);
  }
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? hc : 1;
}

// Runs fn(chunk_index, begin, end) over [0, n) split into contiguous chunks,
// one per worker.  Chunk boundaries depend only on n and the worker count,
// so any per-chunk outputs can be reduced in chunk order for deterministic
// results.
template <class Fn>
void parallel_chunks(std::size_t n, Fn&& fn, unsigned threads = 0) {
  if (threads == 0) threads = thread_count();
  if (n == 0) return;
  if (threads <= 1 || n < 2) {
    fn(0u, std::size_t(0), n);
    return;
  }
  unsigned t = static_cast<unsigned>(std::min<std::size_t>(threads, n));
  std::vector<std::thread> workers;
  workers.reserve(t);
  std::size_t chunk = (n + t - 1) / t;
  for (unsigned i = 0; i < t; ++i) {
    std::size_t b = std::min(n, static_cast<std::size_t>(i) * chunk);
    std::size_t e = std::min(n, b + chunk);
    if (b >= e) break;
    workers.emplace_back([&fn, i, b, e] { fn(i, b, e); });
  }
  for (auto& w : workers) w.join();
}

} // namespace sumprod
