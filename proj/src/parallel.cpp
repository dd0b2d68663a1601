#include "hrg/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace hrg {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw <= 0) hw = 1;
  if (const char* env = std::getenv("HRG_THREADS")) {
    int v = std::atoi(env);
    if (v >= 1) return std::min(v, hw);
  }
  return hw;
}

namespace {
thread_local bool inside_worker = false;
}

void parallel_blocks(std::size_t n_blocks, const std::function<void(std::size_t)>& fn) {
  if (n_blocks == 0) return;
  const std::size_t workers =
      inside_worker ? 1
                    : std::min<std::size_t>(static_cast<std::size_t>(worker_count()),
                                            n_blocks);
  if (workers <= 1) {
    for (std::size_t b = 0; b < n_blocks; ++b) fn(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  // nested calls run inline instead of spawning again; restore on exit because
  // the calling thread runs body() too
  struct nesting_guard {
    bool saved = inside_worker;
    nesting_guard() { inside_worker = true; }
    ~nesting_guard() { inside_worker = saved; }
  };
  auto body = [&] {
    nesting_guard guard;
    for (;;) {
      std::size_t b = next.fetch_add(1);
      if (b >= n_blocks) return;
      try {
        fn(b);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

void parallel_ranges(std::size_t n, std::size_t min_chunk,
                     const std::function<void(std::size_t, std::size_t)>& fn) {
  if (n == 0) return;
  min_chunk = std::max<std::size_t>(min_chunk, 1);
  const std::size_t n_blocks = (n + min_chunk - 1) / min_chunk;
  parallel_blocks(n_blocks, [&](std::size_t b) {
    const std::size_t begin = b * min_chunk;
    fn(begin, std::min(n, begin + min_chunk));
  });
}

}  // namespace hrg
