#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

namespace iterwb {

/// Simple types over the single base type W of words.
class Type {
 public:
  /// The base type W.
  Type() = default;

  static Type word() { return Type(); }
  static Type arrow(Type domain, Type codomain);
  /// t_1 -> ... -> t_k -> W.
  static Type function(const std::vector<Type>& params);

  bool is_word() const noexcept { return arrow_ == nullptr; }
  bool is_arrow() const noexcept { return arrow_ != nullptr; }

  /// Precondition: is_arrow().
  const Type& domain() const;
  const Type& codomain() const;

  /// Argument types t_1..t_k of the normal form t_1 -> ... -> t_k -> W.
  std::vector<Type> params() const;
  std::size_t level() const;

  /// Arrows associate to the right; only left operands get parentheses.
  std::string str() const;

  friend bool operator==(const Type& x, const Type& y);

 private:
  struct Arrow;
  std::shared_ptr<const Arrow> arrow_;
};

struct Type::Arrow {
  Type domain;
  Type codomain;
};

}  // namespace iterwb
