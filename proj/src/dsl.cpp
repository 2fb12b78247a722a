#include "iterwb/dsl.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <utility>
#include <vector>

#include "iterwb/resource.hpp"

namespace iterwb {
namespace {

struct OpName {
  DslOp op;
  const char* name;
  int words;  // word parameters
  int fns;    // function parameters
};

constexpr std::array<OpName, 11> kOps{{
    {DslOp::id, "id", 0, 0},
    {DslOp::constant, "const", 1, 0},
    {DslOp::app0, "app0", 0, 0},
    {DslOp::app1, "app1", 0, 0},
    {DslOp::dropl, "dropl", 0, 0},
    {DslOp::selfcat, "selfcat", 0, 0},
    {DslOp::trunc_to, "trunc_to", 1, 0},
    {DslOp::lmin_with, "lmin_with", 1, 0},
    {DslOp::compose, "compose", 0, 2},
    {DslOp::cond_empty, "cond_empty", 0, 2},
    {DslOp::ite_longer, "ite_longer", 1, 2},
}};

const OpName& info(DslOp op) {
  for (const auto& o : kOps) {
    if (o.op == op) return o;
  }
  throw DslError("unknown combinator");
}

constexpr std::array<std::pair<Combine, const char*>, 4> kCombines{{
    {Combine::t, "t"},
    {Combine::d, "d"},
    {Combine::cat, "cat"},
    {Combine::pair, "pair"},
}};

/// Tokens: "(", ")", identifiers, and quoted word literals (kept quoted).
class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  std::string next() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) {
      ++pos_;
    }
    if (pos_ >= text_.size()) return {};
    char ch = text_[pos_];
    if (ch == '(' || ch == ')') {
      ++pos_;
      return std::string(1, ch);
    }
    std::size_t start = pos_;
    if (ch == '\'') {
      auto end = text_.find('\'', pos_ + 1);
      if (end == std::string_view::npos) throw DslError("unterminated word literal");
      pos_ = end + 1;
      return std::string(text_.substr(start, pos_ - start));
    }
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    if (start == pos_) {
      throw DslError(std::string("unexpected character '") + ch + "'");
    }
    return std::string(text_.substr(start, pos_ - start));
  }

  std::string peek() {
    std::size_t saved = pos_;
    std::string tok = next();
    pos_ = saved;
    return tok;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

Word parse_word_token(const std::string& tok) {
  if (tok.size() < 2 || tok.front() != '\'') {
    throw DslError("expected a word literal, found '" + tok + "'");
  }
  try {
    return Word(std::string_view(tok).substr(1, tok.size() - 2));
  } catch (const std::invalid_argument&) {
    throw DslError("bad word literal " + tok);
  }
}

void expect(Lexer& lex, const char* tok) {
  std::string got = lex.next();
  if (got != tok) {
    throw DslError(std::string("expected '") + tok + "', found '" +
                   (got.empty() ? "end of input" : got) + "'");
  }
}

DslPtr parse_expr(Lexer& lex) {
  std::string tok = lex.next();
  if (tok.empty()) throw DslError("unexpected end of input");
  bool parenthesized = tok == "(";
  if (parenthesized) tok = lex.next();
  const OpName* found = nullptr;
  for (const auto& o : kOps) {
    if (tok == o.name) found = &o;
  }
  if (!found) throw DslError("unknown combinator '" + tok + "'");
  if (!parenthesized) {
    if (found->words + found->fns > 0) {
      throw DslError(std::string(found->name) + " needs arguments");
    }
    return Dsl::leaf(found->op);
  }
  Word w;
  if (found->words) w = parse_word_token(lex.next());
  DslPtr f, g;
  if (found->fns) {
    f = parse_expr(lex);
    g = parse_expr(lex);
  }
  expect(lex, ")");
  return Dsl::node(found->op, std::move(f), std::move(g), std::move(w));
}

}  // namespace

DslPtr Dsl::leaf(DslOp op, Word w) {
  return std::make_shared<const Dsl>(Dsl{op, std::move(w), nullptr, nullptr});
}

DslPtr Dsl::node(DslOp op, DslPtr f, DslPtr g, Word w) {
  return std::make_shared<const Dsl>(Dsl{op, std::move(w), std::move(f), std::move(g)});
}

Word denote(const Dsl& f, const Word& x) {
  switch (f.op) {
    case DslOp::id: return x;
    case DslOp::constant: return f.word;
    case DslOp::app0: return guard(append_sym(x, Sym::zero));
    case DslOp::app1: return guard(append_sym(x, Sym::one));
    case DslOp::dropl: return drop_last(x);
    case DslOp::selfcat: return guard(concat(x, x));
    case DslOp::trunc_to: return truncate(x, f.word);
    case DslOp::lmin_with: return lmin(x, f.word);
    case DslOp::compose: return denote(*f.f, denote(*f.g, x));
    case DslOp::cond_empty: return x.empty() ? denote(*f.f, x) : denote(*f.g, x);
    case DslOp::ite_longer:
      return x.size() > f.word.size() ? denote(*f.f, x) : denote(*f.g, x);
  }
  throw DslError("unknown combinator");
}

StepFn to_step(DslPtr f) {
  return [f = std::move(f)](const Word& x) { return denote(*f, x); };
}

std::string print_dsl(const Dsl& f) {
  const OpName& o = info(f.op);
  if (o.words + o.fns == 0) return o.name;
  std::string out = std::string("(") + o.name;
  if (o.words) out += " " + to_literal(f.word);
  if (o.fns) out += " " + print_dsl(*f.f) + " " + print_dsl(*f.g);
  return out + ")";
}

DslPtr parse_dsl(std::string_view text) {
  Lexer lex(text);
  DslPtr f = parse_expr(lex);
  if (std::string rest = lex.next(); !rest.empty()) {
    throw DslError("trailing input '" + rest + "'");
  }
  return f;
}

std::size_t dsl_depth(const Dsl& f) {
  if (!f.f) return 1;
  return 1 + std::max(dsl_depth(*f.f), dsl_depth(*f.g));
}

std::size_t dsl_size(const Dsl& f) {
  if (!f.f) return 1;
  return 1 + dsl_size(*f.f) + dsl_size(*f.g);
}

bool dsl_equal(const Dsl& x, const Dsl& y) {
  if (x.op != y.op || x.word != y.word) return false;
  if (!x.f) return !y.f;
  return y.f && dsl_equal(*x.f, *y.f) && dsl_equal(*x.g, *y.g);
}

Word denote2(const Step2& f, const Word& d, const Word& t) {
  switch (f.combine) {
    case Combine::t: return denote(*f.body, t);
    case Combine::d: return denote(*f.body, d);
    case Combine::cat: return denote(*f.body, guard(concat(d, t)));
    case Combine::pair: {
      std::array<Word, 2> parts{d, t};
      return denote(*f.body, guard(tuple(parts)));
    }
  }
  throw DslError("unknown combiner");
}

StepFn2 to_step2(Step2 f) {
  return [f = std::move(f)](const Word& d, const Word& t) {
    return denote2(f, d, t);
  };
}

std::string print_step2(const Step2& f) {
  for (const auto& [c, name] : kCombines) {
    if (c == f.combine) {
      return std::string("(on2 ") + name + " " + print_dsl(*f.body) + ")";
    }
  }
  throw DslError("unknown combiner");
}

Step2 parse_step2(std::string_view text) {
  Lexer lex(text);
  if (lex.peek() == "(") {
    Lexer probe = lex;
    probe.next();
    if (probe.next() == "on2") {
      lex = probe;
      std::string name = lex.next();
      Step2 out;
      bool known = false;
      for (const auto& [c, n] : kCombines) {
        if (name == n) {
          out.combine = c;
          known = true;
        }
      }
      if (!known) throw DslError("unknown combiner '" + name + "'");
      out.body = parse_expr(lex);
      expect(lex, ")");
      if (std::string rest = lex.next(); !rest.empty()) {
        throw DslError("trailing input '" + rest + "'");
      }
      return out;
    }
  }
  return Step2{Combine::t, parse_dsl(text)};
}

}  // namespace iterwb
