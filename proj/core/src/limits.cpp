#include "overlay/limits.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

#include "overlay/error.hpp"

namespace overlay {
namespace {

int initial_cap() {
  if (const char* env = std::getenv("OVERLAY_MAX_HYPEREDGE")) {
    try {
      int value = std::stoi(env);
      if (value > 0) return value;
    } catch (const std::exception&) {
    }
  }
  return 16;
}

std::atomic<int>& cap_storage() {
  static std::atomic<int> cap{initial_cap()};
  return cap;
}

}  // namespace

int max_hyperedge_size() { return cap_storage().load(std::memory_order_relaxed); }

void set_max_hyperedge_size(int cap) {
  if (cap < 1 || cap > kMaxGraphOrder) {
    throw PreconditionError("hyperedge size cap must lie in [1, 64]");
  }
  cap_storage().store(cap, std::memory_order_relaxed);
}

}  // namespace overlay
