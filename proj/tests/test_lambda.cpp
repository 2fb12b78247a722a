#include <doctest.h>

#include <string>

#include "iterwb/eval.hpp"
#include "iterwb/gen.hpp"
#include "iterwb/parser.hpp"
#include "iterwb/resource.hpp"
#include "iterwb/term.hpp"
#include "iterwb/term_gen.hpp"
#include "iterwb/typecheck.hpp"

using namespace iterwb;

namespace {

const Type WT = Type::word();
Type arrow(Type a, Type b) { return Type::arrow(std::move(a), std::move(b)); }

std::string type_error_of(const std::string& text) {
  try {
    infer_type(parse(text));
  } catch (const TypeError& e) {
    return e.what();
  }
  return "";
}

std::string parse_error_of(const std::string& text) {
  try {
    parse(text);
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("parse examples") {
  Term t = parse("\\t:W. lmin t '01'");
  const Abs* abs = t.as<Abs>();
  REQUIRE(abs != nullptr);
  CHECK(abs->param == "t");
  CHECK(abs->param_type == WT);
  Term expected = Term::abs(
      "t", WT,
      apply(Term::constant(ConstKind::lmin),
            {Term::var("t", WT), Term::lit(Word("01"))}));
  CHECK(t == expected);

  Term e = parse("''");
  REQUIRE(e.as<Lit>() != nullptr);
  CHECK(e.as<Lit>()->word.empty());

  Term twice = parse("\\f:W->W. \\a:W. f (f a)");
  Type ff = arrow(WT, WT);
  CHECK(twice == Term::abs("f", ff,
                           Term::abs("a", WT,
                                     Term::app(Term::var("f", ff),
                                               Term::app(Term::var("f", ff),
                                                         Term::var("a", WT))))));
}

TEST_CASE("comments, budgets and type syntax") {
  Term t = parse("-- identity\n\\x:W. x -- trailing\n");
  CHECK(print(t) == "\\x:W. x");
  CHECK(parse("iterk2").as<Const>()->constant == Constant{ConstKind::iterk, 2});
  CHECK(parse("jterk0").as<Const>()->constant == Constant{ConstKind::jterk, 0});
  CHECK(parse_type("W -> W -> W") == arrow(WT, arrow(WT, WT)));
  CHECK(parse_type("(W -> W) -> W") == arrow(arrow(WT, WT), WT));
  CHECK(parse_type("(W->W)->W->W").str() == "(W->W)->W->W");
  CHECK(parse_type("W->W").params().size() == 1);
  CHECK(parse_type("(W->W)->W").level() == 2);
}

TEST_CASE("print round trips the parse examples") {
  for (const char* text : {"\\t:W. lmin t '01'", "''", "\\f:W->W. \\a:W. f (f a)"}) {
    Term t = parse(text);
    CHECK(parse(print(t)) == t);
  }
  CHECK(print(parse("\\t:W. lmin t '01'")) == "\\t:W. lmin t '01'");
}

TEST_CASE("syntax errors carry line and column") {
  try {
    parse("\\x:W.\n  x )");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 5);
  }
  CHECK(parse_error_of("'012'").find("invalid symbol") != std::string::npos);
  CHECK(parse_error_of("'01").find("unterminated") != std::string::npos);
  CHECK(parse_error_of("iterkx").find("unknown constant") != std::string::npos);
  CHECK(parse_error_of("lmin y '0'").find("unbound variable 'y'") !=
        std::string::npos);
  CHECK(parse_error_of("\\lmin:W. lmin").find("reserved") != std::string::npos);
  CHECK(parse_error_of("\\x:V. x").find("unknown type") != std::string::npos);
  CHECK(parse_error_of("").find("syntax error at 1:1") != std::string::npos);
}

TEST_CASE("type inference") {
  CHECK(infer_type(parse("\\t:W. lmin t '01'")) == arrow(WT, WT));
  CHECK(infer_type(parse("iter")).str() == "(W->W)->W->W->W->W");
  CHECK(infer_type(parse("rec")).str() ==
        "(W->W->W)->(W->W)->W->W->W");
  CHECK(infer_type(parse("rec0")).str() == "(W->W->W)->W->W->W->W");
  CHECK(infer_type(parse("jter")) == infer_type(parse("iter")));
  CHECK(infer_type(parse("iterk3")).str() == "(W->W)->W->W->W");
  CHECK(infer_type(parse("jterk1")).str() == "(W->W)->W->W->W");
  CHECK(infer_type(parse("cond")).str() == "W->W->W->W");
  CHECK(infer_type(parse("tup3")).str() == "W->W->W->W");
  for (const Constant& c : base_constants()) {
    CHECK(infer_type(Term::constant(c)) == c.type());
  }
  std::string err = type_error_of("lmin (\\t:W.t)");
  CHECK(err.find("expected W") != std::string::npos);
  CHECK(err.find("got W->W") != std::string::npos);
  CHECK(type_error_of("'01' '1'").find("cannot apply") != std::string::npos);
  CHECK_THROWS_AS(infer_type(Term::var("q", WT)), TypeError);
  CHECK(infer_type(Term::var("q", WT), {{"q", WT}}) == WT);
}

TEST_CASE("evaluation examples") {
  CHECK(evaluate(parse("(\\t:W. lmin t '01') '1'")).word() == Word("1"));
  Assignment env;
  env.bind("X", Value(Word("0")));
  CHECK(evaluate(parse("X", env.types()), env).word() == Word("0"));
  CHECK(evaluate(parse("iter app1 '1111' '' '000'")).word() == Word("111"));
  CHECK(evaluate(parse("jter app1 '11' '' '000'")).word() == Word("111"));
  CHECK(evaluate(parse("iterk1 app1 '0' '0000'")).word() == Word("01"));
  CHECK(evaluate(parse("jterk0 app1 '0' '000'")).word() == Word("01"));
  CHECK(evaluate(parse("rec0 (\\d:W. \\t:W. app1 t) '1111' '' '00'")).word() ==
        Word("11"));
  CHECK(evaluate(parse("rec (\\d:W. \\t:W. app1 t) (\\d:W. '1111') '' '00'"))
            .word() == Word("11"));
  CHECK(evaluate(parse("pi2_2 (tup2 '1' '0')")).word() == Word("0"));
  CHECK(evaluate(parse("cond '' '1' '00'")).word() == Word("00"));
  Value f = evaluate(parse("\\x:W. cat x x"));
  CHECK_FALSE(f.is_word());
  CHECK(f.type() == arrow(WT, WT));
  CHECK(f(Value(Word("10"))).word() == Word("1010"));
  CHECK_THROWS_AS(evaluate(parse("X", {{"X", WT}})), TypeError);
}

TEST_CASE("bindings are checked against declared types") {
  Assignment env;
  CHECK_THROWS_AS(env.bind("f", arrow(WT, WT), Value(Word("1"))), TypeError);
  env.bind("f", arrow(WT, WT), evaluate(parse("\\x:W. app0 x")));
  CHECK(evaluate(parse("f (f '1')", env.types()), env).word() == Word("100"));
}

TEST_CASE("resource guard aborts runaway growth") {
  Term doubling = parse("\\x:W. cat x x");
  Value d = evaluate(doubling);
  Value v = Word("0");
  for (int i = 0; i < 10; ++i) v = d(v);
  CHECK(v.word().size() == 1024);
  ScopedWordCap cap(1000);
  try {
    evaluate(parse(
        "(\\f:W->W. f (f (f (f (f (f (f (f (f (f '0')))))))))) (\\x:W. cat x x)"));
    FAIL("expected the guard to trip");
  } catch (const ResourceExceeded& e) {
    std::string msg = e.what();
    CHECK(msg.find("resource exceeded") != std::string::npos);
    CHECK(msg.find("1024") != std::string::npos);
  }
}

TEST_CASE("substitution avoids capture") {
  Term body = parse("\\y:W. cat x y", {{"x", WT}});
  Term r = substitute(body, "x", Term::var("y", WT));
  CHECK(free_vars(r) == std::set<std::string>{"y"});
  Assignment env;
  env.bind("y", Value(Word("1")));
  Value v = evaluate(r, env);
  CHECK(v(Value(Word("0"))).word() == Word("10"));
}

TEST_CASE("type soundness on generated closed terms") {
  std::size_t evaluated = 0, guarded = 0, kept = 0;
  for (std::uint64_t s = 0; kept < 1000; ++s) {
    Rng rng(mix_seed(11, s));
    TermGenOptions o;
    o.depth = 5;
    Term t = gen_term(rng, WT, o);
    if (term_depth(t) > 8) continue;
    ++kept;
    CHECK(infer_type(t) == WT);
    try {
      Value v = evaluate(t);
      CHECK(v.is_word());
      ++evaluated;
    } catch (const ResourceExceeded&) {
      ++guarded;
    }
  }
  CHECK(evaluated > 500);
  CHECK(guarded < evaluated / 10);
}

TEST_CASE("beta and eta preserve values") {
  std::size_t checked = 0;
  const std::vector<Type> param_types{WT, arrow(WT, WT), arrow(WT, arrow(WT, WT))};
  for (std::uint64_t s = 0; s < 1000; ++s) {
    Rng rng(mix_seed(12, s));
    Type pt = param_types[rng.below(param_types.size())];
    TermGenOptions o;
    o.depth = 4;
    o.scope = {{"x", pt}};
    Term body = gen_term(rng, WT, o);
    TermGenOptions ao;
    ao.depth = 3;
    Term arg = gen_term(rng, pt, ao);
    Term redex = Term::app(Term::abs("x", pt, body), arg);
    Term contractum = substitute(body, "x", arg);
    CHECK(infer_type(contractum) == WT);
    try {
      CHECK(evaluate(redex).word() == evaluate(contractum).word());
      ++checked;
    } catch (const ResourceExceeded&) {
    }

    // η: \y:W. f y behaves as f.
    TermGenOptions fo;
    fo.depth = 3;
    Term f = gen_term(rng, arrow(WT, WT), fo);
    Term eta = Term::abs("y", WT, Term::app(f, Term::var("y", WT)));
    if (free_vars(f).count("y")) continue;
    Word w = gen_word(rng, 6);
    try {
      CHECK(evaluate(Term::app(eta, Term::lit(w))).word() ==
            evaluate(Term::app(f, Term::lit(w))).word());
    } catch (const ResourceExceeded&) {
    }
  }
  CHECK(checked > 900);
}

TEST_CASE("parse and print round trip on generated terms") {
  const std::vector<Type> targets{WT, arrow(WT, WT), arrow(arrow(WT, WT), WT)};
  std::size_t n = 0;
  for (std::uint64_t s = 0; n < 1000; ++s) {
    Rng rng(mix_seed(13, s));
    TermGenOptions o;
    o.depth = 7;
    Term t = gen_term(rng, targets[s % targets.size()], o);
    if (term_depth(t) > 10) continue;
    ++n;
    Term back = parse(print(t));
    CHECK(back == t);
    CHECK(print(back) == print(t));
  }
}

TEST_CASE("evaluation is deterministic") {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Rng rng(mix_seed(14, s));
    Term t = gen_term(rng, WT, TermGenOptions{});
    try {
      CHECK(evaluate(t).word() == evaluate(t).word());
    } catch (const ResourceExceeded&) {
    }
  }
}
