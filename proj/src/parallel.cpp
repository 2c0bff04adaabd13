#include "qmarkoff/parallel.hpp"

#include <cstdlib>
#include <string>

namespace qmarkoff {

std::size_t worker_count() {
  if (const char* env = std::getenv("QMARKOFF_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n > 0) return static_cast<std::size_t>(n);
    } catch (const std::exception&) {
      // fall through to the hardware default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace qmarkoff
