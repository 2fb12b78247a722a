#include "iterwb/gen.hpp"

#include <algorithm>
#include <array>
#include <limits>

namespace iterwb {
namespace {

constexpr std::size_t kMaxConstant = 8;

Word gen_param(Rng& rng, const GenOptions& options) {
  if (!options.pivot) return gen_word(rng, kMaxConstant);
  std::size_t p = std::min(*options.pivot, kMaxConstant);
  std::size_t lo = p == 0 ? 0 : p - 1;
  std::size_t hi = std::min(p + 1, kMaxConstant);
  return gen_word_of_length(rng, rng.between(lo, hi));
}

DslPtr gen_leaf(Rng& rng, const GenOptions& options) {
  // Weighted: selfcat is rare because it doubles lengths.
  static constexpr std::array<std::pair<DslOp, int>, 8> kLeaves{{
      {DslOp::id, 2},
      {DslOp::constant, 3},
      {DslOp::app0, 2},
      {DslOp::app1, 2},
      {DslOp::dropl, 2},
      {DslOp::selfcat, 1},
      {DslOp::trunc_to, 2},
      {DslOp::lmin_with, 2},
  }};
  int total = 0;
  for (const auto& [op, weight] : kLeaves) total += weight;
  auto pick = static_cast<int>(rng.below(static_cast<std::uint64_t>(total)));
  for (const auto& [op, weight] : kLeaves) {
    if (pick < weight) {
      bool has_word = op == DslOp::constant || op == DslOp::trunc_to ||
                      op == DslOp::lmin_with;
      return Dsl::leaf(op, has_word ? gen_param(rng, options) : Word());
    }
    pick -= weight;
  }
  return Dsl::leaf(DslOp::id);
}

DslPtr gen_tree(Rng& rng, const GenOptions& options, std::size_t depth) {
  if (depth <= 1 || rng.chance(2, 5)) return gen_leaf(rng, options);
  static constexpr std::array<DslOp, 3> kNodes{DslOp::compose, DslOp::cond_empty,
                                               DslOp::ite_longer};
  DslOp op = kNodes[rng.below(kNodes.size())];
  Word w = op == DslOp::ite_longer ? gen_param(rng, options) : Word();
  DslPtr f = gen_tree(rng, options, depth - 1);
  DslPtr g = gen_tree(rng, options, depth - 1);
  return Dsl::node(op, std::move(f), std::move(g), std::move(w));
}

}  // namespace

std::uint64_t Rng::below(std::uint64_t n) {
  // Rejection sampling keeps the draw identical across standard libraries.
  std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                        std::numeric_limits<std::uint64_t>::max() % n;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return x % n;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 finalizer over the combined value
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Word gen_word_of_length(Rng& rng, std::size_t len) {
  std::string bits(len, '0');
  for (auto& ch : bits) ch = rng.coin() ? '1' : '0';
  return from_bits(std::move(bits));
}

Word gen_word(Rng& rng, std::size_t max_len) {
  return gen_word_of_length(rng, rng.between(0, max_len));
}

Word gen_word(std::uint64_t seed, std::size_t max_len) {
  Rng rng(seed);
  return gen_word(rng, max_len);
}

DslPtr gen_step_fn(Rng& rng, const GenOptions& options) {
  return gen_tree(rng, options, std::max<std::size_t>(options.max_depth, 1));
}

DslPtr gen_step_fn(std::uint64_t seed, std::size_t max_depth) {
  Rng rng(seed);
  return gen_step_fn(rng, GenOptions{max_depth, std::nullopt});
}

Step2 gen_step2(Rng& rng, const GenOptions& options) {
  static constexpr std::array<Combine, 4> kCombines{Combine::t, Combine::d,
                                                    Combine::cat, Combine::pair};
  Combine c = kCombines[rng.below(kCombines.size())];
  return Step2{c, gen_step_fn(rng, options)};
}

}  // namespace iterwb
