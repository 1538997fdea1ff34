#include "qweyl/numeric.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>

namespace qweyl {

namespace {

int worker_count() {
  if (const char* env = std::getenv("QWEYL_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace

void parallel_for(size_t count, const std::function<void(size_t)>& fn) {
  int workers = worker_count();
  if (workers <= 1 || count < 2) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  auto run = [&] {
    for (;;) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      fn(i);
    }
  };
  std::vector<std::thread> pool;
  for (int t = 1; t < workers; ++t) pool.emplace_back(run);
  run();
  for (auto& th : pool) th.join();
}

}  // namespace qweyl
