#include "cayley/util/parallel.hpp"

#include <cstdlib>
#include <string>

namespace cayley::util {

unsigned worker_count() {
  if (const char* env = std::getenv("CAYLEY_THREADS")) {
    const int n = std::atoi(env);
    if (n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace cayley::util
