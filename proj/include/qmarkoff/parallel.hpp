#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <vector>

namespace qmarkoff {

/// Worker threads for internal loops: QMARKOFF_THREADS when set to a
/// positive integer, otherwise the hardware concurrency (at least 1).
std::size_t worker_count();

/// out[i] = fn(i) for i in [0, n). Results and the rethrown exception (the
/// one with the lowest index) do not depend on the thread count.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<std::invoke_result_t<Fn, std::size_t>> {
  using Result = std::invoke_result_t<Fn, std::size_t>;
  std::vector<Result> out(n);
  std::vector<std::exception_ptr> errors(n);
  const std::size_t workers = std::min(worker_count(), n);
  auto run = [&](std::size_t begin, std::size_t stride) {
    for (std::size_t i = begin; i < n; i += stride) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers <= 1) {
    run(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(run, t, workers);
    for (auto& th : pool) th.join();
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

}  // namespace qmarkoff
