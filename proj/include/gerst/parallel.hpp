#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace gerst {

// Worker count: an explicit override if set, else GERST_THREADS, else the
// hardware concurrency.
size_t thread_count();
// 0 restores the environment-derived default.
void set_thread_count(size_t n);

// Runs body(i) for i in [0, n). Work items must write only to their own
// output slots; the lowest-index exception is rethrown so failures are
// reported deterministically.
template <class Body>
void parallel_for(size_t n, Body&& body) {
  const size_t workers = std::min(thread_count(), n);
  if (workers <= 1) {
    for (size_t i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(n);
  auto run = [&] {
    for (size_t i = next++; i < n; i = next++) {
      try {
        body(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (size_t w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace gerst
