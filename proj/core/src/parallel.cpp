#include "tqg/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tqg {

int worker_count() {
  if (const char* env = std::getenv("TQG_WORKERS")) {
    try {
      const int n = std::stoi(env);
      if (n >= 1) return n;
    } catch (const std::exception&) {
      // fall through to the default
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

}  // namespace tqg
