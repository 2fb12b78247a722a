#include "iterwb/term.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>
#include <vector>

namespace iterwb {
namespace {

struct ConstInfo {
  ConstKind kind;
  const char* name;
};

constexpr ConstInfo kConstants[] = {
    {ConstKind::trunc, "trunc"},     {ConstKind::dropl, "dropl"},
    {ConstKind::lmin, "lmin"},       {ConstKind::cond, "cond"},
    {ConstKind::app0, "app0"},       {ConstKind::app1, "app1"},
    {ConstKind::tup2, "tup2"},       {ConstKind::tup3, "tup3"},
    {ConstKind::pi2_1, "pi2_1"},     {ConstKind::pi2_2, "pi2_2"},
    {ConstKind::pi3_1, "pi3_1"},     {ConstKind::pi3_2, "pi3_2"},
    {ConstKind::pi3_3, "pi3_3"},     {ConstKind::zeros, "zeros"},
    {ConstKind::monus, "monus"},     {ConstKind::shorter, "shorter"},
    {ConstKind::eqw, "eqw"},         {ConstKind::last1, "last1"},
    {ConstKind::cat, "cat"},         {ConstKind::rec, "rec"},
    {ConstKind::rec0, "rec0"},       {ConstKind::iter, "iter"},
    {ConstKind::jter, "jter"},       {ConstKind::iterk, "iterk"},
    {ConstKind::jterk, "jterk"},
};

Type w() { return Type::word(); }
Type fn(std::initializer_list<Type> params) { return Type::function(params); }

std::string fresh_name(const std::string& base,
                       const std::set<std::string>& avoid) {
  for (std::size_t i = 1;; ++i) {
    std::string candidate = base + "_" + std::to_string(i);
    if (!avoid.count(candidate) && !lookup_constant(candidate)) {
      return candidate;
    }
  }
}

void collect_free(const Term& t, std::set<std::string>& bound,
                  std::set<std::string>& out) {
  if (auto v = t.as<Var>()) {
    if (!bound.count(v->name)) out.insert(v->name);
  } else if (auto a = t.as<Abs>()) {
    bool inserted = bound.insert(a->param).second;
    collect_free(a->body, bound, out);
    if (inserted) bound.erase(a->param);
  } else if (auto ap = t.as<App>()) {
    collect_free(ap->fun, bound, out);
    collect_free(ap->arg, bound, out);
  }
}

void collect_names(const Term& t, std::set<std::string>& out) {
  if (auto v = t.as<Var>()) {
    out.insert(v->name);
  } else if (auto a = t.as<Abs>()) {
    out.insert(a->param);
    collect_names(a->body, out);
  } else if (auto ap = t.as<App>()) {
    collect_names(ap->fun, out);
    collect_names(ap->arg, out);
  }
}

enum class Slot { top, fun, arg };

void print_into(const Term& t, Slot slot, std::string& out) {
  if (auto v = t.as<Var>()) {
    out += v->name;
  } else if (auto c = t.as<Const>()) {
    out += c->constant.name();
  } else if (auto l = t.as<Lit>()) {
    out += to_literal(l->word);
  } else if (auto a = t.as<Abs>()) {
    bool parens = slot != Slot::top;
    if (parens) out += '(';
    out += '\\';
    out += a->param;
    out += ':';
    out += a->param_type.str();
    out += ". ";
    print_into(a->body, Slot::top, out);
    if (parens) out += ')';
  } else if (auto ap = t.as<App>()) {
    bool parens = slot == Slot::arg;
    if (parens) out += '(';
    print_into(ap->fun, Slot::fun, out);
    out += ' ';
    print_into(ap->arg, Slot::arg, out);
    if (parens) out += ')';
  }
}

}  // namespace

std::string Constant::name() const {
  for (const ConstInfo& info : kConstants) {
    if (info.kind == kind) {
      std::string out = info.name;
      if (kind == ConstKind::iterk || kind == ConstKind::jterk) {
        out += std::to_string(budget);
      }
      return out;
    }
  }
  throw std::logic_error("unnamed constant");
}

Type Constant::type() const {
  switch (kind) {
    case ConstKind::dropl:
    case ConstKind::app0:
    case ConstKind::app1:
    case ConstKind::pi2_1:
    case ConstKind::pi2_2:
    case ConstKind::pi3_1:
    case ConstKind::pi3_2:
    case ConstKind::pi3_3:
    case ConstKind::zeros:
    case ConstKind::last1:
      return fn({w()});
    case ConstKind::trunc:
    case ConstKind::lmin:
    case ConstKind::tup2:
    case ConstKind::monus:
    case ConstKind::shorter:
    case ConstKind::eqw:
    case ConstKind::cat:
      return fn({w(), w()});
    case ConstKind::cond:
    case ConstKind::tup3:
      return fn({w(), w(), w()});
    case ConstKind::rec:
      return fn({fn({w(), w()}), fn({w()}), w(), w()});
    case ConstKind::rec0:
      return fn({fn({w(), w()}), w(), w(), w()});
    case ConstKind::iter:
    case ConstKind::jter:
      return fn({fn({w()}), w(), w(), w()});
    case ConstKind::iterk:
    case ConstKind::jterk:
      return fn({fn({w()}), w(), w()});
  }
  throw std::logic_error("untyped constant");
}

bool Constant::is_primitive() const {
  switch (kind) {
    case ConstKind::rec:
    case ConstKind::rec0:
    case ConstKind::iter:
    case ConstKind::jter:
    case ConstKind::iterk:
    case ConstKind::jterk:
      return true;
    default:
      return false;
  }
}

std::optional<Constant> lookup_constant(std::string_view name) {
  for (std::string_view prefix : {"iterk", "jterk"}) {
    if (name.size() > prefix.size() && name.substr(0, prefix.size()) == prefix) {
      std::string_view digits = name.substr(prefix.size());
      std::size_t budget = 0;
      auto [end, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), budget);
      if (ec == std::errc() && end == digits.data() + digits.size()) {
        return Constant{prefix == "iterk" ? ConstKind::iterk : ConstKind::jterk,
                        budget};
      }
      return std::nullopt;
    }
  }
  for (const ConstInfo& info : kConstants) {
    if (info.kind == ConstKind::iterk || info.kind == ConstKind::jterk) {
      continue;
    }
    if (name == info.name) return Constant{info.kind, 0};
  }
  return std::nullopt;
}

const std::vector<Constant>& base_constants() {
  static const std::vector<Constant> all = [] {
    std::vector<Constant> out;
    for (const ConstInfo& info : kConstants) {
      Constant c{info.kind, 0};
      if (!c.is_primitive()) out.push_back(c);
    }
    return out;
  }();
  return all;
}

Term Term::var(std::string name, Type type) {
  return Term(std::make_shared<const Node>(Var{std::move(name), std::move(type)}));
}
Term Term::constant(Constant c) {
  return Term(std::make_shared<const Node>(Const{c}));
}
Term Term::constant(ConstKind kind, std::size_t budget) {
  return constant(Constant{kind, budget});
}
Term Term::lit(Word w) {
  return Term(std::make_shared<const Node>(Lit{std::move(w)}));
}
Term Term::abs(std::string param, Type param_type, Term body) {
  return Term(std::make_shared<const Node>(
      Abs{std::move(param), std::move(param_type), std::move(body)}));
}
Term Term::app(Term fun, Term arg) {
  return Term(std::make_shared<const Node>(App{std::move(fun), std::move(arg)}));
}

bool operator==(const Term& x, const Term& y) {
  if (x.node_ == y.node_) return true;
  if (x.node_->index() != y.node_->index()) return false;
  if (auto v = x.as<Var>()) {
    auto u = y.as<Var>();
    return v->name == u->name && v->type == u->type;
  }
  if (auto c = x.as<Const>()) return c->constant == y.as<Const>()->constant;
  if (auto l = x.as<Lit>()) return l->word == y.as<Lit>()->word;
  if (auto a = x.as<Abs>()) {
    auto b = y.as<Abs>();
    return a->param == b->param && a->param_type == b->param_type &&
           a->body == b->body;
  }
  auto p = x.as<App>();
  auto q = y.as<App>();
  return p->fun == q->fun && p->arg == q->arg;
}

Term apply(Term fun, std::initializer_list<Term> args) {
  for (const Term& arg : args) fun = Term::app(std::move(fun), arg);
  return fun;
}

std::set<std::string> free_vars(const Term& t) {
  std::set<std::string> bound, out;
  collect_free(t, bound, out);
  return out;
}

std::set<Constant> constants_in(const Term& t) {
  std::set<Constant> out;
  std::vector<const Term*> stack{&t};
  while (!stack.empty()) {
    const Term* cur = stack.back();
    stack.pop_back();
    if (auto c = cur->as<Const>()) {
      out.insert(c->constant);
    } else if (auto a = cur->as<Abs>()) {
      stack.push_back(&a->body);
    } else if (auto ap = cur->as<App>()) {
      stack.push_back(&ap->fun);
      stack.push_back(&ap->arg);
    }
  }
  return out;
}

std::size_t term_size(const Term& t) {
  if (auto a = t.as<Abs>()) return 1 + term_size(a->body);
  if (auto ap = t.as<App>()) return 1 + term_size(ap->fun) + term_size(ap->arg);
  return 1;
}

std::size_t term_depth(const Term& t) {
  if (auto a = t.as<Abs>()) return 1 + term_depth(a->body);
  if (auto ap = t.as<App>()) {
    return 1 + std::max(term_depth(ap->fun), term_depth(ap->arg));
  }
  return 1;
}

Term substitute(const Term& t, const std::string& name,
                const Term& replacement) {
  if (auto v = t.as<Var>()) return v->name == name ? replacement : t;
  if (auto ap = t.as<App>()) {
    return Term::app(substitute(ap->fun, name, replacement),
                     substitute(ap->arg, name, replacement));
  }
  if (auto a = t.as<Abs>()) {
    if (a->param == name) return t;
    std::set<std::string> fv = free_vars(replacement);
    if (!fv.count(a->param) || !free_vars(a->body).count(name)) {
      return Term::abs(a->param, a->param_type,
                       substitute(a->body, name, replacement));
    }
    std::set<std::string> avoid = fv;
    collect_names(a->body, avoid);
    avoid.insert(name);
    std::string renamed = fresh_name(a->param, avoid);
    Term body =
        substitute(a->body, a->param, Term::var(renamed, a->param_type));
    return Term::abs(renamed, a->param_type,
                     substitute(body, name, replacement));
  }
  return t;
}

std::string print(const Term& t) {
  std::string out;
  print_into(t, Slot::top, out);
  return out;
}

}  // namespace iterwb
