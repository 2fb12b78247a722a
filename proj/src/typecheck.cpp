#include "iterwb/typecheck.hpp"

namespace iterwb {
namespace {

Type infer(const Term& t, std::map<std::string, Type>& ctx) {
  if (auto v = t.as<Var>()) {
    auto it = ctx.find(v->name);
    if (it == ctx.end()) {
      throw TypeError("unbound variable '" + v->name + "'");
    }
    if (!(it->second == v->type)) {
      throw TypeError("variable '" + v->name + "' used at type " +
                      v->type.str() + " but bound at type " +
                      it->second.str());
    }
    return v->type;
  }
  if (auto c = t.as<Const>()) return c->constant.type();
  if (t.as<Lit>()) return Type::word();
  if (auto a = t.as<Abs>()) {
    auto saved = ctx.find(a->param);
    std::optional<Type> shadowed;
    if (saved != ctx.end()) shadowed = saved->second;
    ctx[a->param] = a->param_type;
    Type body = infer(a->body, ctx);
    if (shadowed) {
      ctx[a->param] = *shadowed;
    } else {
      ctx.erase(a->param);
    }
    return Type::arrow(a->param_type, body);
  }
  const App& ap = *t.as<App>();
  Type fun = infer(ap.fun, ctx);
  Type arg = infer(ap.arg, ctx);
  if (!fun.is_arrow()) {
    throw TypeError("cannot apply " + print(ap.fun) + " of type W to " +
                    print(ap.arg));
  }
  if (!(fun.domain() == arg)) {
    throw TypeError("type mismatch in application of " + print(ap.fun) +
                    ": expected " + fun.domain().str() + ", got " + arg.str() +
                    " for argument " + print(ap.arg));
  }
  return fun.codomain();
}

}  // namespace

Type infer_type(const Term& t, const std::map<std::string, Type>& context) {
  std::map<std::string, Type> ctx = context;
  return infer(t, ctx);
}

}  // namespace iterwb
