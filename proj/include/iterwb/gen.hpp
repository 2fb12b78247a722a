#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>

#include "iterwb/dsl.hpp"
#include "iterwb/word.hpp"

namespace iterwb {

/// Seeded generator whose draws are identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n);
  /// Uniform in [lo, hi].
  std::size_t between(std::size_t lo, std::size_t hi) {
    return lo + static_cast<std::size_t>(below(hi - lo + 1));
  }
  bool coin() { return below(2) == 1; }
  /// True with probability num/den.
  bool chance(std::uint64_t num, std::uint64_t den) { return below(den) < num; }
  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// Derives an independent seed for sub-stream `index` of `seed`.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index);

/// Length uniform in [0, max_len], symbols uniform.
Word gen_word(Rng& rng, std::size_t max_len);
Word gen_word(std::uint64_t seed, std::size_t max_len);
/// Uniform symbols, fixed length.
Word gen_word_of_length(Rng& rng, std::size_t len);

/// Options for step-function generation. With `pivot` set, word parameters
/// (constants, truncation and clamp widths, length thresholds) cluster at
/// lengths pivot - 1, pivot and pivot + 1 so answers land on the revision
/// baseline; otherwise their lengths are uniform in [0, 8].
struct GenOptions {
  std::size_t max_depth = 3;
  std::optional<std::size_t> pivot;
};

DslPtr gen_step_fn(Rng& rng, const GenOptions& options);
DslPtr gen_step_fn(std::uint64_t seed, std::size_t max_depth);
Step2 gen_step2(Rng& rng, const GenOptions& options);

}  // namespace iterwb
