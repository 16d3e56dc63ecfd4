#pragma once
// Deterministic work splitting: results are merged in chunk order so the output
// is independent of the QMT_THREADS setting.

#include <cstdlib>
#include <functional>
#include <string>
#include <thread>
#include <vector>

namespace qmt {

inline int thread_count() {
  const char* env = std::getenv("QMT_THREADS");
  if (!env) return 1;
  int n = std::atoi(env);
  if (n < 1) n = 1;
  if (n > 64) n = 64;
  return n;
}

// Runs worker(begin, end) over a partition of [0, n) and hands the per-chunk
// results to merge in ascending chunk order.
template <class R>
R parallel_chunks(long n, const std::function<R(long, long)>& worker,
                  const std::function<R(std::vector<R>&)>& merge) {
  int threads = thread_count();
  if (threads == 1 || n < 2) {
    std::vector<R> one;
    one.push_back(worker(0, n));
    return merge(one);
  }
  int chunks = std::min<long>(threads, n);
  std::vector<R> results(chunks);
  std::vector<std::thread> pool;
  for (int c = 0; c < chunks; ++c) {
    long b = n * c / chunks, e = n * (c + 1) / chunks;
    pool.emplace_back([&, c, b, e] { results[c] = worker(b, e); });
  }
  for (auto& t : pool) t.join();
  return merge(results);
}

}  // namespace qmt
