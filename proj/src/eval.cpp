#include "iterwb/eval.hpp"

#include <array>
#include <optional>
#include <unordered_map>

#include "iterwb/resource.hpp"
#include "iterwb/typecheck.hpp"

namespace iterwb {
namespace {

Type w() { return Type::word(); }
Type fn(std::initializer_list<Type> params) { return Type::function(params); }

Value word_fn1(Word (*f)(const Word&)) {
  return Value::function(fn({w()}), [f](const Value& x) -> Value {
    return guard(f(x.word()));
  });
}

template <typename F>
Value word_fn2(F f) {
  return Value::function(fn({w(), w()}), [f](const Value& x) {
    const Word& first = x.word();
    return Value::function(fn({w()}), [f, first](const Value& y) -> Value {
      return guard(f(first, y.word()));
    });
  });
}

template <typename F>
Value word_fn3(F f) {
  return Value::function(fn({w(), w(), w()}), [f](const Value& x) {
    return word_fn2([f, first = x.word()](const Word& y, const Word& z) {
      return f(first, y, z);
    });
  });
}

/// Curries a function of one functional argument followed by `Words`
/// word arguments.
template <std::size_t Words, typename F>
Value higher_order(Type type, F f) {
  return Value::function(type, [f](const Value& step) {
    if constexpr (Words == 2) {
      return word_fn2([f, step](const Word& x, const Word& y) {
        return f(step, std::array<Word, 2>{x, y});
      });
    } else {
      return word_fn3([f, step](const Word& x, const Word& y, const Word& z) {
        return f(step, std::array<Word, 3>{x, y, z});
      });
    }
  });
}

struct Frame {
  std::string name;
  Value value;
  std::shared_ptr<const Frame> next;
};
using Env = std::shared_ptr<const Frame>;

/// Types of the abstraction nodes of one term, keyed by node address.
using AbsTypes = std::unordered_map<const Term::Node*, Type>;

Type annotate(const Term& t, std::map<std::string, Type>& ctx, AbsTypes& out) {
  if (auto v = t.as<Var>()) return v->type;
  if (auto c = t.as<Const>()) return c->constant.type();
  if (t.as<Lit>()) return Type::word();
  if (auto a = t.as<Abs>()) {
    std::optional<Type> shadowed;
    if (auto it = ctx.find(a->param); it != ctx.end()) shadowed = it->second;
    ctx[a->param] = a->param_type;
    Type type = Type::arrow(a->param_type, annotate(a->body, ctx, out));
    if (shadowed) {
      ctx[a->param] = *shadowed;
    } else {
      ctx.erase(a->param);
    }
    out.emplace(&t.node(), type);
    return type;
  }
  const App& ap = *t.as<App>();
  annotate(ap.arg, ctx, out);
  return annotate(ap.fun, ctx, out).codomain();
}

Value eval(const Term& t, const Env& env,
           const std::shared_ptr<const AbsTypes>& types) {
  if (auto v = t.as<Var>()) {
    for (const Frame* f = env.get(); f; f = f->next.get()) {
      if (f->name == v->name) return f->value;
    }
    throw EvalError("unbound variable '" + v->name + "'");
  }
  if (auto c = t.as<Const>()) return constant_value(c->constant);
  if (auto l = t.as<Lit>()) return guard(l->word);
  if (auto a = t.as<Abs>()) {
    Term body = a->body;
    std::string param = a->param;
    return Value::function(
        types->at(&t.node()), [body, param, env, types](const Value& arg) {
          return eval(body,
                      std::make_shared<const Frame>(Frame{param, arg, env}),
                      types);
        });
  }
  const App& ap = *t.as<App>();
  Value fun = eval(ap.fun, env, types);
  Value arg = eval(ap.arg, env, types);
  return fun(arg);
}

}  // namespace

Value Value::function(Type type, Fn fn) {
  return Value(Func{std::move(type), std::make_shared<const Fn>(std::move(fn))});
}

const Word& Value::word() const {
  if (auto w = std::get_if<Word>(&rep_)) return *w;
  throw EvalError("expected a word, found a function of type " +
                  std::get<Func>(rep_).type.str());
}

Type Value::type() const {
  if (is_word()) return Type::word();
  return std::get<Func>(rep_).type;
}

Value Value::operator()(const Value& arg) const {
  const Func* f = std::get_if<Func>(&rep_);
  if (!f) {
    throw EvalError("cannot apply the word " + to_literal(std::get<Word>(rep_)));
  }
  return (*f->fn)(arg);
}

Assignment& Assignment::bind(const std::string& name, Value value) {
  bindings_.insert_or_assign(name, std::move(value));
  return *this;
}

Assignment& Assignment::bind(const std::string& name, const Type& declared,
                             Value value) {
  if (!(value.type() == declared)) {
    throw TypeError("binding for '" + name + "' has type " +
                    value.type().str() + ", declared " + declared.str());
  }
  return bind(name, std::move(value));
}

std::map<std::string, Type> Assignment::types() const {
  std::map<std::string, Type> out;
  for (const auto& [name, value] : bindings_) out.emplace(name, value.type());
  return out;
}

StepFn as_step(const Value& f) {
  return [f](const Word& x) { return f(Value(x)).word(); };
}

StepFn2 as_step2(const Value& f) {
  return [f](const Word& d, const Word& t) { return f(Value(d), Value(t)).word(); };
}

Value step_value(StepFn f) {
  return Value::function(fn({w()}), [f = std::move(f)](const Value& x) -> Value {
    return guard(f(x.word()));
  });
}

Value step2_value(StepFn2 f) {
  return word_fn2([f = std::move(f)](const Word& d, const Word& t) {
    return f(d, t);
  });
}

Value constant_value(const Constant& c) {
  switch (c.kind) {
    case ConstKind::trunc: return word_fn2(truncate);
    case ConstKind::dropl: return word_fn1(drop_last);
    case ConstKind::lmin: return word_fn2(lmin);
    case ConstKind::cond: return word_fn3(cond);
    case ConstKind::app0:
      return word_fn1([](const Word& x) { return append_sym(x, Sym::zero); });
    case ConstKind::app1:
      return word_fn1([](const Word& x) { return append_sym(x, Sym::one); });
    case ConstKind::tup2:
      return word_fn2([](const Word& x, const Word& y) {
        std::array<Word, 2> parts{x, y};
        return tuple(parts);
      });
    case ConstKind::tup3:
      return word_fn3([](const Word& x, const Word& y, const Word& z) {
        std::array<Word, 3> parts{x, y, z};
        return tuple(parts);
      });
    case ConstKind::pi2_1:
      return word_fn1([](const Word& x) { return project(x, 2, 1); });
    case ConstKind::pi2_2:
      return word_fn1([](const Word& x) { return project(x, 2, 2); });
    case ConstKind::pi3_1:
      return word_fn1([](const Word& x) { return project(x, 3, 1); });
    case ConstKind::pi3_2:
      return word_fn1([](const Word& x) { return project(x, 3, 2); });
    case ConstKind::pi3_3:
      return word_fn1([](const Word& x) { return project(x, 3, 3); });
    case ConstKind::zeros: return word_fn1(zeros);
    case ConstKind::monus: return word_fn2(monus);
    case ConstKind::shorter: return word_fn2(shorter);
    case ConstKind::eqw: return word_fn2(same_word);
    case ConstKind::last1: return word_fn1(ends_in_one);
    case ConstKind::cat: return word_fn2(concat);
    case ConstKind::rec:
      return Value::function(c.type(), [](const Value& phi) {
        return Value::function(fn({fn({w()}), w(), w()}), [phi](const Value& psi) {
          return word_fn2([phi, psi](const Word& a, const Word& cw) {
            return rec(as_step2(phi), as_step(psi), a, cw);
          });
        });
      });
    case ConstKind::rec0:
      return higher_order<3>(c.type(), [](const Value& phi, const auto& args) {
        return rec0(as_step2(phi), args[0], args[1], args[2]);
      });
    case ConstKind::iter:
      return higher_order<3>(c.type(), [](const Value& phi, const auto& args) {
        return iter(as_step(phi), args[0], args[1], args[2]);
      });
    case ConstKind::jter:
      return higher_order<3>(c.type(), [](const Value& phi, const auto& args) {
        return jter(as_step(phi), args[0], args[1], args[2]);
      });
    case ConstKind::iterk:
      return higher_order<2>(c.type(), [k = c.budget](const Value& phi,
                                                      const auto& args) {
        return iter_k(k, as_step(phi), args[0], args[1]).value;
      });
    case ConstKind::jterk:
      return higher_order<2>(c.type(), [k = c.budget](const Value& phi,
                                                      const auto& args) {
        return jter_k(k, as_step(phi), args[0], args[1]).value;
      });
  }
  throw EvalError("constant without a denotation");
}

Value evaluate(const Term& t, const Assignment& env) {
  std::map<std::string, Type> ctx = env.types();
  infer_type(t, ctx);
  auto types = std::make_shared<AbsTypes>();
  annotate(t, ctx, *types);
  Env frames;
  for (const auto& [name, value] : env.bindings()) {
    frames = std::make_shared<const Frame>(Frame{name, value, frames});
  }
  return eval(t, frames, types);
}

}  // namespace iterwb
