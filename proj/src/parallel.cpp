#include "floatberg/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace floatberg {

int worker_count() {
  static int cached = [] {
    int hw = static_cast<int>(std::thread::hardware_concurrency());
    if (hw < 1) hw = 1;
    if (const char* env = std::getenv("FLOATBERG_THREADS")) {
      int cap = std::atoi(env);
      if (cap >= 1 && cap < hw) hw = cap;
    }
    return hw;
  }();
  return cached;
}

namespace {
thread_local bool in_worker = false;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& f) {
  int workers = worker_count();
  if (n == 0) return;
  if (in_worker || workers == 1 || n < 2) {
    for (std::size_t i = 0; i < n; ++i) f(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error = nullptr;
  std::atomic<bool> failed{false};
  auto run = [&] {
    in_worker = true;
    for (;;) {
      std::size_t i = next.fetch_add(1);
      if (i >= n || failed.load()) break;
      try {
        f(i);
      } catch (...) {
        if (!failed.exchange(true)) first_error = std::current_exception();
        break;
      }
    }
    in_worker = false;
  };
  std::vector<std::thread> pool;
  int spawn = static_cast<int>(std::min<std::size_t>(workers, n));
  for (int t = 1; t < spawn; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace floatberg
