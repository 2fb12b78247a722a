#pragma once

// Combinator language for total step functions W -> W, with an s-expression
// text form such as (compose app1 dropl) or (cond_empty (const '111') dropl).

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "iterwb/iterators.hpp"
#include "iterwb/word.hpp"

namespace iterwb {

enum class DslOp {
  id,
  constant,
  app0,
  app1,
  dropl,
  selfcat,
  trunc_to,
  lmin_with,
  compose,     // (compose f g) x = f (g x)
  cond_empty,  // (cond_empty f g) x = f x if x = ε else g x
  ite_longer,  // (ite_longer w f g) x = f x if |x| > |w| else g x
};

struct Dsl;
using DslPtr = std::shared_ptr<const Dsl>;

struct Dsl {
  DslOp op = DslOp::id;
  Word word;  // constant, trunc_to, lmin_with, ite_longer
  DslPtr f;
  DslPtr g;

  static DslPtr leaf(DslOp op, Word w = {});
  static DslPtr node(DslOp op, DslPtr f, DslPtr g, Word w = {});
};

class DslError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Every result passes the resource guard.
Word denote(const Dsl& f, const Word& x);
StepFn to_step(DslPtr f);

std::string print_dsl(const Dsl& f);
DslPtr parse_dsl(std::string_view text);

std::size_t dsl_depth(const Dsl& f);
std::size_t dsl_size(const Dsl& f);
bool dsl_equal(const Dsl& x, const Dsl& y);

/// How a two-argument step (d, t) is reduced to one word before the DSL body
/// runs.
enum class Combine { t, d, cat, pair };

/// Two-argument step function (on2 COMB F): (d, t) |-> F(COMB(d, t)).
struct Step2 {
  Combine combine = Combine::t;
  DslPtr body;
};

Word denote2(const Step2& f, const Word& d, const Word& t);
StepFn2 to_step2(Step2 f);
std::string print_step2(const Step2& f);
/// Accepts (on2 COMB F); a bare DSL term means (on2 t F).
Step2 parse_step2(std::string_view text);

}  // namespace iterwb
