#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>

#include "iterwb/term.hpp"
#include "iterwb/type.hpp"

namespace iterwb {

class TypeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Synthesizes the unique type of `t`. Variables bound by an enclosing
/// abstraction must carry the binder's type; free variables must be listed in
/// `context` with the type they carry.
Type infer_type(const Term& t, const std::map<std::string, Type>& context = {});

}  // namespace iterwb
