#pragma once

#include <functional>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>

#include "iterwb/iterators.hpp"
#include "iterwb/term.hpp"
#include "iterwb/type.hpp"
#include "iterwb/word.hpp"

namespace iterwb {

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A functional of some type: a word, or a total map between functionals.
class Value {
 public:
  using Fn = std::function<Value(const Value&)>;

  Value(Word w) : rep_(std::move(w)) {}  // NOLINT: words are values
  static Value function(Type type, Fn fn);

  bool is_word() const noexcept { return std::holds_alternative<Word>(rep_); }
  /// Throws EvalError on a function value.
  const Word& word() const;
  Type type() const;

  /// Throws EvalError when this is a word.
  Value operator()(const Value& arg) const;
  Value operator()(const Value& x, const Value& y) const {
    return (*this)(x)(y);
  }

 private:
  struct Func {
    Type type;
    std::shared_ptr<const Fn> fn;
  };
  explicit Value(Func f) : rep_(std::move(f)) {}
  std::variant<Word, Func> rep_;
};

/// Variable bindings; each value's type must equal the declared type.
class Assignment {
 public:
  Assignment& bind(const std::string& name, Value value);
  /// Throws TypeError unless value.type() == declared.
  Assignment& bind(const std::string& name, const Type& declared, Value value);
  const std::map<std::string, Value>& bindings() const noexcept {
    return bindings_;
  }
  std::map<std::string, Type> types() const;

 private:
  std::map<std::string, Value> bindings_;
};

/// The fixed functional a constant denotes.
Value constant_value(const Constant& c);

/// The value of `t` under `env`, after type-checking `t` against the types of
/// the bindings (TypeError). Words longer than the cap raise ResourceExceeded.
Value evaluate(const Term& t, const Assignment& env = {});

/// Views a W->W functional as a step function.
StepFn as_step(const Value& f);
/// Views a W->W->W functional as a two-argument step function.
StepFn2 as_step2(const Value& f);

/// Wraps host step functions as functionals.
Value step_value(StepFn f);
Value step2_value(StepFn2 f);

}  // namespace iterwb
