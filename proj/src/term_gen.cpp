#include "iterwb/term_gen.hpp"

#include <array>

namespace iterwb {
namespace {

constexpr std::array<const char*, 6> kNames{"x", "y", "z", "f", "g", "u"};

using Scope = std::vector<std::pair<std::string, Type>>;

/// Result type after supplying every parameter.
bool ends_in(const Type& t, const Type& target, std::size_t& arity) {
  Type cur = t;
  arity = 0;
  while (true) {
    if (cur == target) return true;
    if (!cur.is_arrow()) return false;
    cur = cur.codomain();
    ++arity;
  }
}

std::vector<Constant> all_constants(bool primitives) {
  std::vector<Constant> out = base_constants();
  if (primitives) {
    for (ConstKind k : {ConstKind::rec, ConstKind::rec0, ConstKind::iter,
                        ConstKind::jter}) {
      out.push_back(Constant{k, 0});
    }
    for (std::size_t b = 0; b <= 2; ++b) {
      out.push_back(Constant{ConstKind::iterk, b});
      out.push_back(Constant{ConstKind::jterk, b});
    }
  }
  return out;
}

/// Visible bindings: the innermost binding of each name wins.
Scope visible(const Scope& scope) {
  Scope out;
  for (auto it = scope.rbegin(); it != scope.rend(); ++it) {
    bool shadowed = false;
    for (const auto& [n, t] : out) shadowed = shadowed || n == it->first;
    if (!shadowed) out.push_back(*it);
  }
  return out;
}

class Generator {
 public:
  Generator(Rng& rng, bool primitives)
      : rng_(rng), constants_(all_constants(primitives)) {}

  Term gen(const Type& target, std::size_t depth, Scope& scope) {
    if (target.is_arrow()) return gen_arrow(target, depth, scope);
    return gen_word(depth, scope);
  }

 private:
  Term literal() {
    return Term::lit(iterwb::gen_word(rng_, 4));
  }

  Term gen_arrow(const Type& target, std::size_t depth, Scope& scope) {
    // A variable or constant of exactly this type, or an abstraction.
    std::vector<Term> exact;
    for (const auto& [n, t] : visible(scope)) {
      if (t == target) exact.push_back(Term::var(n, t));
    }
    for (const Constant& c : constants_) {
      if (c.type() == target) exact.push_back(Term::constant(c));
    }
    if (!exact.empty() && (depth == 0 || rng_.chance(1, 3))) {
      return exact[rng_.below(exact.size())];
    }
    std::string name = kNames[rng_.below(kNames.size())];
    scope.emplace_back(name, target.domain());
    Term body = gen(target.codomain(), depth == 0 ? 0 : depth - 1, scope);
    scope.pop_back();
    return Term::abs(name, target.domain(), body);
  }

  Term gen_word(std::size_t depth, Scope& scope) {
    std::vector<Term> leaves;
    for (const auto& [n, t] : visible(scope)) {
      if (t.is_word()) leaves.push_back(Term::var(n, t));
    }
    if (depth == 0 || rng_.chance(1, 4)) {
      if (!leaves.empty() && rng_.coin()) return leaves[rng_.below(leaves.size())];
      return literal();
    }
    std::size_t choice = rng_.below(10);
    if (choice == 0) {
      // β-redex with a word-typed or first-order parameter.
      Type param = rng_.chance(2, 3) ? Type::word() : Type::arrow(Type::word(), Type::word());
      std::string name = kNames[rng_.below(kNames.size())];
      scope.emplace_back(name, param);
      Term body = gen_word(depth - 1, scope);
      scope.pop_back();
      return Term::app(Term::abs(name, param, body), gen(param, depth - 1, scope));
    }
    // Head: a function variable in scope or a constant, fully applied.
    std::vector<std::pair<Term, Type>> heads;
    for (const auto& [n, t] : visible(scope)) {
      std::size_t arity;
      if (t.is_arrow() && ends_in(t, Type::word(), arity)) {
        heads.emplace_back(Term::var(n, t), t);
      }
    }
    if (heads.empty() || choice < 7) {
      const Constant& c = constants_[rng_.below(constants_.size())];
      heads.clear();
      heads.emplace_back(Term::constant(c), c.type());
    }
    auto [head, type] = heads[rng_.below(heads.size())];
    Term out = head;
    for (const Type& p : type.params()) {
      out = Term::app(out, gen(p, depth - 1, scope));
    }
    return out;
  }

  Rng& rng_;
  std::vector<Constant> constants_;
};

}  // namespace

Term gen_term(Rng& rng, const Type& target, const TermGenOptions& options) {
  Generator g(rng, options.primitives);
  Scope scope = options.scope;
  return g.gen(target, options.depth, scope);
}

Value gen_value(Rng& rng, const Type& t, std::size_t depth) {
  if (t.is_word()) return iterwb::gen_word(rng, 6);
  TermGenOptions options;
  options.depth = depth;
  options.primitives = false;
  return evaluate(gen_term(rng, t, options));
}

}  // namespace iterwb
