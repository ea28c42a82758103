#ifndef HUBS_PARALLEL_HPP
#define HUBS_PARALLEL_HPP

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

#include "hubs/common.hpp"

namespace hubs {

inline int resolve_threads(int threads) {
  if (threads > 0) return threads;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Work-stealing-free parallel loop: items are claimed from a shared
// counter, each item writes only to its own output slot, so the result
// is identical for any thread count.
inline void parallel_for(Index begin, Index end, int threads, const std::function<void(Index)>& body) {
  const Index count = end - begin;
  if (count <= 0) return;
  const int nthreads = std::min<Index>(resolve_threads(threads), count);
  if (nthreads <= 1) {
    for (Index i = begin; i < end; ++i) body(i);
    return;
  }
  std::atomic<Index> cursor{begin};
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  std::exception_ptr error;
  std::mutex error_mutex;
  for (int t = 0; t < nthreads; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        const Index i = cursor.fetch_add(1);
        if (i >= end) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace hubs

#endif  // HUBS_PARALLEL_HPP
