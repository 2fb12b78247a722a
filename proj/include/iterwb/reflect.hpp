#pragma once

// Concrete λ-terms for the translation builders. Each reflected term is a
// closed abstraction over the supplied primitive, of type
// T_primitive -> T_target, mentioning base constants only; applying it to the
// primitive's constant (or any functional of that type) yields the composite.

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "iterwb/term.hpp"
#include "iterwb/type.hpp"

namespace iterwb {

struct Reflection {
  std::string builder;
  Type primitive;
  Type target;
  Term term;
};

/// Names accepted by reflect(): argmax, max, rec_from_rec0, iter_from_rec,
/// rec0p_from_iter, rec0_from_rec0p, iter_from_jter, jter_from_iter,
/// iter0_from_iter, iterk_from_iter, jterk_from_iterk, jter_from_jterk,
/// all_empty_via_rec, search_via_iter.
const std::vector<std::string>& reflected_builders();

/// Throws std::invalid_argument for an unknown builder. `k` matters for
/// iterk_from_iter only.
Reflection reflect(std::string_view builder, std::size_t k = 0);

/// Describes why `r` breaks the closure discipline (free variables, wrong
/// type, a primitive constant inside the body), or nothing when it is sound.
std::optional<std::string> closure_violation(const Reflection& r);

}  // namespace iterwb
