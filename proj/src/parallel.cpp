#include "gerst/parallel.hpp"

#include <cstdlib>
#include <string>

namespace gerst {

namespace {
std::atomic<size_t> g_override{0};
}

size_t thread_count() {
  if (size_t o = g_override.load()) return o;
  if (const char* env = std::getenv("GERST_THREADS")) {
    try {
      long v = std::stol(env);
      if (v >= 1) return static_cast<size_t>(v);
    } catch (...) {
    }
  }
  size_t hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void set_thread_count(size_t n) { g_override.store(n); }

}  // namespace gerst
