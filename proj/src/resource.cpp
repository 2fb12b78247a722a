#include "iterwb/resource.hpp"

#include <atomic>
#include <cstdlib>
#include <string>

namespace iterwb {
namespace {

std::size_t initial_cap() {
  if (const char* env = std::getenv("ITERWB_CAP")) {
    try {
      return static_cast<std::size_t>(std::stoull(env));
    } catch (const std::exception&) {
      // Malformed values fall back to the default.
    }
  }
  return kDefaultWordCap;
}

std::atomic<std::size_t>& cap_slot() {
  static std::atomic<std::size_t> cap{initial_cap()};
  return cap;
}

}  // namespace

ResourceExceeded::ResourceExceeded(std::size_t length)
    : std::runtime_error("resource exceeded: word of length " +
                         std::to_string(length) + " exceeds cap of " +
                         std::to_string(word_cap()) + " symbols"),
      length_(length) {}

std::size_t word_cap() noexcept {
  return cap_slot().load(std::memory_order_relaxed);
}

void set_word_cap(std::size_t cap) noexcept {
  cap_slot().store(cap, std::memory_order_relaxed);
}

}  // namespace iterwb
