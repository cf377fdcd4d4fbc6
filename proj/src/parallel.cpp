#include "rainbow/parallel.hpp"

#include <cstdlib>
#include <string>

namespace rainbow {

int worker_count() {
  int hw = static_cast<int>(std::thread::hardware_concurrency());
  if (hw < 1) hw = 1;
  if (const char* s = std::getenv("RAINBOW_THREADS")) {
    try {
      int v = std::stoi(s);
      if (v >= 1) return v;
    } catch (...) {
    }
  }
  return hw;
}

}  // namespace rainbow
