#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "iterwb/term.hpp"
#include "iterwb/type.hpp"

namespace iterwb {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& msg, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

/// Types of the free variables a parse may reference.
using TypeContext = std::map<std::string, Type>;

/// Parses one term. Free variables must appear in `free`; identifiers that
/// name constants are reserved and cannot be bound.
Term parse(std::string_view text, const TypeContext& free = {});

Type parse_type(std::string_view text);

}  // namespace iterwb
