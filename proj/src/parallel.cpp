#include "regmat/parallel.hpp"

#include <cstdlib>
#include <string>

namespace regmat {

int default_thread_count() {
  const int hardware = std::max(1U, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("MATROID_THREADS")) {
    try {
      const int cap = std::stoi(env);
      if (cap >= 1) return std::min(cap, hardware);
    } catch (const std::exception&) {
      // Unparseable values fall back to the default.
    }
  }
  return hardware;
}

}  // namespace regmat
