#pragma once

#include <cstddef>
#include <thread>
#include <vector>

namespace rainbow {

// RAINBOW_THREADS caps the count; defaults to the hardware concurrency.
int worker_count();

// Runs body(worker, index) for index in [0, n). Index i goes to worker
// i % workers so the split is fixed for a given worker count.
template <class Body>
void parallel_for(std::size_t n, Body body) {
  int w = worker_count();
  if (w <= 1 || n <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(0, i);
    return;
  }
  std::vector<std::thread> ts;
  for (int t = 0; t < w; ++t)
    ts.emplace_back([&, t] {
      for (std::size_t i = t; i < n; i += w) body(t, i);
    });
  for (auto& t : ts) t.join();
}

}  // namespace rainbow
