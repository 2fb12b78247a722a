#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>

#include "iterwb/type.hpp"
#include "iterwb/word.hpp"

namespace iterwb {

enum class ConstKind {
  // base functions
  trunc,
  dropl,
  lmin,
  cond,
  app0,
  app1,
  tup2,
  tup3,
  pi2_1,
  pi2_2,
  pi3_1,
  pi3_2,
  pi3_3,
  zeros,
  monus,
  shorter,
  eqw,
  last1,
  cat,
  // recursion and iteration primitives
  rec,
  rec0,
  iter,
  jter,
  iterk,
  jterk,
};

/// A built-in constant. `budget` is meaningful for iterk and jterk only.
struct Constant {
  ConstKind kind = ConstKind::trunc;
  std::size_t budget = 0;

  std::string name() const;
  Type type() const;
  /// True for the six recursion/iteration primitives.
  bool is_primitive() const;

  friend auto operator<=>(const Constant&, const Constant&) = default;
};

/// Resolves a reserved identifier such as "lmin" or "iterk2".
std::optional<Constant> lookup_constant(std::string_view name);

/// Every non-primitive constant.
const std::vector<Constant>& base_constants();

class Term;

struct Var {
  std::string name;
  Type type;
};
struct Const {
  Constant constant;
};
struct Lit {
  Word word;
};
struct Abs;
struct App;
struct TermNode;

/// Immutable λ-term with shared structure.
class Term {
 public:
  using Node = TermNode;

  static Term var(std::string name, Type type);
  static Term constant(Constant c);
  static Term constant(ConstKind kind, std::size_t budget = 0);
  static Term lit(Word w);
  static Term abs(std::string param, Type param_type, Term body);
  static Term app(Term fun, Term arg);

  const Node& node() const noexcept;

  template <typename T>
  const T* as() const noexcept;

  /// Structural equality (bound names included).
  friend bool operator==(const Term& x, const Term& y);

 private:
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct Abs {
  std::string param;
  Type param_type;
  Term body;
};
struct App {
  Term fun;
  Term arg;
};

struct TermNode : std::variant<Var, Const, Lit, Abs, App> {
  using variant::variant;
};

inline const TermNode& Term::node() const noexcept { return *node_; }

template <typename T>
const T* Term::as() const noexcept {
  return std::get_if<T>(static_cast<const TermNode::variant*>(node_.get()));
}

/// f x1 ... xn
Term apply(Term fun, std::initializer_list<Term> args);

std::set<std::string> free_vars(const Term& t);
std::set<Constant> constants_in(const Term& t);
std::size_t term_size(const Term& t);
std::size_t term_depth(const Term& t);

/// Capture-avoiding substitution of `replacement` for free occurrences of
/// `name`.
Term substitute(const Term& t, const std::string& name,
                const Term& replacement);

/// Grammar rendering with minimal parentheses.
std::string print(const Term& t);

}  // namespace iterwb
