#pragma once

// Random well-typed λ-terms for the interpreter property suites.

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "iterwb/eval.hpp"
#include "iterwb/gen.hpp"
#include "iterwb/term.hpp"
#include "iterwb/type.hpp"

namespace iterwb {

struct TermGenOptions {
  /// Budget on nested applications/abstractions; the resulting term_depth is
  /// not bounded by it exactly, so callers filter on term_depth.
  std::size_t depth = 6;
  /// Allow recursion/iteration primitive constants.
  bool primitives = true;
  /// Free variables the term may mention.
  std::vector<std::pair<std::string, Type>> scope;
};

/// A term of type `target`. Binder names come from a small pool so
/// shadowing and capture situations arise often.
Term gen_term(Rng& rng, const Type& target, const TermGenOptions& options);

/// A closed value of type `t` for argument positions in property tests:
/// random words, or generated closed terms evaluated.
Value gen_value(Rng& rng, const Type& t, std::size_t depth = 3);

}  // namespace iterwb
