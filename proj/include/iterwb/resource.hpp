#pragma once

#include <cstddef>
#include <stdexcept>

#include "iterwb/word.hpp"

namespace iterwb {

inline constexpr std::size_t kDefaultWordCap = std::size_t{1} << 20;

/// Raised when a word longer than the current cap is produced.
class ResourceExceeded : public std::runtime_error {
 public:
  explicit ResourceExceeded(std::size_t length);
  std::size_t length() const noexcept { return length_; }

 private:
  std::size_t length_;
};

/// Process-wide word-length cap. Initialized from ITERWB_CAP when set.
std::size_t word_cap() noexcept;
void set_word_cap(std::size_t cap) noexcept;

/// Throws ResourceExceeded when |w| exceeds the cap; returns w otherwise.
inline const Word& guard(const Word& w) {
  if (w.size() > word_cap()) throw ResourceExceeded(w.size());
  return w;
}

/// Restores the previous cap on scope exit.
class ScopedWordCap {
 public:
  explicit ScopedWordCap(std::size_t cap) : saved_(word_cap()) {
    set_word_cap(cap);
  }
  ~ScopedWordCap() { set_word_cap(saved_); }
  ScopedWordCap(const ScopedWordCap&) = delete;
  ScopedWordCap& operator=(const ScopedWordCap&) = delete;

 private:
  std::size_t saved_;
};

}  // namespace iterwb
