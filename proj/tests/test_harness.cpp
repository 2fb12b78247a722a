#include <doctest.h>

#include <array>
#include <string>

#include "iterwb/check.hpp"
#include "iterwb/dsl.hpp"
#include "iterwb/gen.hpp"
#include "iterwb/iterators.hpp"
#include "iterwb/trace_json.hpp"

using namespace iterwb;

namespace {

Word W(const char* s) { return Word(s); }
Word app1(const Word& w) { return append_sym(w, Sym::one); }

std::size_t count_lines(const std::string& s) {
  std::size_t n = 0;
  for (char ch : s) n += ch == '\n';
  return n;
}

}  // namespace

TEST_CASE("DSL denotation") {
  CHECK(denote(*parse_dsl("(compose app1 dropl)"), W("100")) == W("101"));
  DslPtr ce = parse_dsl("(cond_empty (const '111') dropl)");
  CHECK(denote(*ce, Word()) == W("111"));
  CHECK(denote(*ce, W("01")) == W("0"));
  CHECK(denote(*parse_dsl("selfcat"), W("10")) == W("1010"));
  CHECK(denote(*parse_dsl("(trunc_to '00')"), W("1011")) == W("10"));
  CHECK(denote(*parse_dsl("(lmin_with '00')"), W("1")) == W("1"));
  CHECK(denote(*parse_dsl("(lmin_with '00')"), W("11")) == W("00"));
  CHECK(denote(*parse_dsl("(ite_longer '1' dropl app1)"), W("11")) == W("1"));
  CHECK(denote(*parse_dsl("(ite_longer '1' dropl app1)"), W("1")) == W("11"));
  CHECK(denote(*parse_dsl("app0"), Word()) == W("0"));
  CHECK(denote(*parse_dsl("id"), W("01")) == W("01"));
  CHECK(denote2(parse_step2("(on2 cat id)"), W("1"), W("0")) == W("10"));
  CHECK(denote2(parse_step2("(on2 d app1)"), W("1"), W("0")) == W("11"));
  CHECK(denote2(parse_step2("app1"), W("1"), W("0")) == W("01"));
  std::array<Word, 2> pair{W("1"), W("0")};
  CHECK(denote2(parse_step2("(on2 pair id)"), W("1"), W("0")) == tuple(pair));
  CHECK_THROWS_AS(parse_dsl("(compose app1)"), DslError);
  CHECK_THROWS_AS(parse_dsl("frobnicate"), DslError);
  CHECK_THROWS_AS(parse_dsl("(const '2')"), std::exception);
}

TEST_CASE("DSL print and parse round trip") {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    DslPtr f = gen_step_fn(s, 4);
    DslPtr back = parse_dsl(print_dsl(*f));
    CHECK(dsl_equal(*f, *back));
    CHECK(print_dsl(*back) == print_dsl(*f));
    Rng rng(s);
    Step2 g = gen_step2(rng, GenOptions{3, std::nullopt});
    CHECK(print_step2(parse_step2(print_step2(g))) == print_step2(g));
  }
}

TEST_CASE("step function generation") {
  for (std::uint64_t s = 0; s < 1000; ++s) {
    DslPtr f = gen_step_fn(s, 3);
    CHECK(dsl_equal(*f, *gen_step_fn(s, 3)));
    CHECK(dsl_depth(*f) <= 3);
    CHECK(dsl_size(*f) >= 1);
  }
  for (std::uint64_t s = 0; s < 200; ++s) {
    DslPtr f = gen_step_fn(s, 4);
    Rng rng(s + 1000);
    for (int i = 0; i < 100; ++i) {
      Word x = gen_word(rng, 16);
      CHECK_NOTHROW(denote(*f, x));
    }
  }
}

TEST_CASE("generated constants stay short") {
  std::function<void(const Dsl&)> walk = [&](const Dsl& d) {
    CHECK(d.word.size() <= 8);
    if (d.f) walk(*d.f);
    if (d.g) walk(*d.g);
  };
  for (std::uint64_t s = 0; s < 500; ++s) {
    Rng rng(s);
    GenOptions o;
    o.max_depth = 3;
    if (s % 2) o.pivot = s % 12;
    walk(*gen_step_fn(rng, o));
  }
}

TEST_CASE("word generation") {
  CHECK(gen_word(std::uint64_t{5}, 0) == Word());
  for (std::uint64_t s = 0; s < 100; ++s) {
    CHECK(gen_word(s, 20) == gen_word(s, 20));
    CHECK(gen_word(s, 20).size() <= 20);
  }
  // Length uniform on [0, 10]: chi-squared over 10000 seeds, 10 degrees of
  // freedom, threshold at the 0.999 quantile.
  constexpr std::size_t kMax = 10;
  std::array<std::size_t, kMax + 1> counts{};
  std::size_t ones = 0, symbols = 0;
  for (std::uint64_t s = 0; s < 10000; ++s) {
    Word w = gen_word(s, kMax);
    ++counts[w.size()];
    for (char ch : w.bits()) ones += ch == '1';
    symbols += w.size();
  }
  CHECK(counts[0] > 0);
  CHECK(counts[kMax] > 0);
  double expected = 10000.0 / (kMax + 1);
  double chi2 = 0;
  for (std::size_t c : counts) chi2 += (c - expected) * (c - expected) / expected;
  CHECK(chi2 < 29.59);
  double frac = static_cast<double>(ones) / static_cast<double>(symbols);
  CHECK(frac > 0.48);
  CHECK(frac < 0.52);
}

TEST_CASE("every lemma id resolves and unknown ids are rejected") {
  for (const char* id :
       {"lemma1-rec-rec0", "lemma2-iter-jter", "lemma4-rec-iter", "lemma5-unwind",
        "cor6-unwind", "lemma7-iter0", "lemma8-iterk", "sec4-jterk-iterk",
        "sec4-jter-jterk", "sec5-fast", "theorem-main", "lemma8-iterk:2"}) {
    CHECK(find_lemma(id).id.size() > 0);
  }
  CHECK(lemmas().size() == 11);
  CHECK_THROWS_AS(find_lemma("lemma3"), std::invalid_argument);
  CHECK_THROWS_AS(check_lemma("nope", 1, 1), std::invalid_argument);
}

TEST_CASE("small campaigns pass for every lemma") {
  for (const Lemma& l : lemmas()) {
    CheckReport r = check_lemma(l.id, 60, 3, 12);
    INFO(report_to_text(r));
    CHECK(r.passed());
    CHECK(r.failures.empty());
    CHECK(r.trials == 60);
    CHECK_FALSE(r.comparisons.empty());
  }
}

TEST_CASE("reports are reproducible byte for byte") {
  for (const char* id : {"lemma2-iter-jter", "sec5-fast", "mutant/iterk-no-step"}) {
    std::string x = report_to_json(check_lemma(id, 120, 9, 16)).dump(2);
    std::string y = report_to_json(check_lemma(id, 120, 9, 16)).dump(2);
    CHECK(x == y);
    std::string z = report_to_json(check_lemma(id, 120, 10, 16)).dump(2);
    CHECK(x != z);
  }
}

TEST_CASE("the literal fast-scheme probe is flagged, not failed") {
  CheckReport r = check_lemma("sec5-fast", 200, 42, 12);
  CHECK(r.passed());
  REQUIRE(r.flagged_counts.count("literal-divergence"));
  bool probe = false;
  for (const Finding& f : r.flagged) {
    probe = probe || (f.trial.rfind("fixed", 0) == 0 && f.inputs.a == W("11"));
  }
  CHECK(probe);
}

TEST_CASE("empty-word clauses are flagged") {
  CheckReport j = check_lemma("sec4-jterk-iterk", 200, 42, 12);
  CHECK(j.passed());
  CHECK(j.flagged_counts.count("bridge-at-empty"));
  CheckReport l2 = check_lemma("lemma2-iter-jter", 200, 42, 12);
  CHECK(l2.passed());
  CHECK(l2.flagged_counts.count("empty-clause-reads-b"));
}

TEST_CASE("every planted mutant is detected and its shrunk witness replays") {
  CHECK(mutants_table().size() == 11);
  for (const Mutant& m : mutants_table()) {
    INFO(m.name);
    CheckReport r = check_lemma("mutant/" + m.name, 300, 42, 12);
    CHECK_FALSE(r.passed());
    REQUIRE_FALSE(r.failures.empty());
    const Finding& f = r.failures.front();
    REQUIRE(f.minimized.has_value());
    Lemma lemma = find_lemma(m.lemma);
    CHECK(reproduces(lemma, m.builders, f.minimized->inputs, f.check, false));
    CHECK(f.minimized->inputs.a.size() <= f.inputs.a.size());
    CHECK(f.minimized->inputs.c.size() <= f.inputs.c.size());
    CHECK_FALSE(reproduces(lemma, Builders{}, f.minimized->inputs, f.check, false));
  }
}

TEST_CASE("falsify finds the dropped final step quickly") {
  CheckReport r = falsify_lemma("mutant/jterk-no-final-step", 5.0);
  CHECK_FALSE(r.passed());
  CHECK(r.mode == "falsify");
  CHECK(r.failure_count >= 1);
  REQUIRE(r.failures.front().minimized.has_value());
  CHECK(r.failures.front().minimized->inputs.c.size() <= 8);
}

TEST_CASE("falsify on a sound lemma spends its budget without failures") {
  CheckReport r = falsify_lemma("lemma5-unwind", 0.5);
  CHECK(r.passed());
  CHECK(r.trials > 0);
}

TEST_CASE("inputs survive a JSON round trip") {
  Inputs in;
  in.phi = parse_dsl("(compose app1 dropl)");
  in.phi2 = parse_step2("(on2 cat dropl)");
  in.psi = parse_dsl("(const '11')");
  in.a = W("01");
  in.b = W("1");
  in.c = W("000");
  std::vector<Field> all{Field::phi, Field::phi2, Field::psi, Field::a, Field::b,
                         Field::c};
  auto j = inputs_to_json(in, all);
  Inputs back = inputs_from_json(j);
  CHECK(inputs_to_json(back, all) == j);
  CHECK(back.c == W("000"));
}

TEST_CASE("trace reports") {
  Traced t = iter_k(1, app1, W("0"), W("0000"));
  std::string rep = trace_report(t.trace, W("0"));
  CHECK(rep.find("ell=1") != std::string::npos);
  CHECK(rep.find("revisions=1") != std::string::npos);
  // header line, column titles, one call row, JSON line
  CHECK(count_lines(rep) == 4);
  CHECK(rep.find("yes") != std::string::npos);
  CHECK(rep.find("\"ell\":1") != std::string::npos);

  Traced j = jter_k(0, app1, W("0"), W("000"));
  std::string jr = trace_report(j.trace, W("0"));
  CHECK(jr.find("kind=lookahead") != std::string::npos);
  CHECK(jr.find("ell=1") != std::string::npos);
  CHECK(count_lines(jr) == 4);
  CHECK(jr.find("yes") == std::string::npos);

  Traced e = iter_k(2, app1, W("0"), Word());
  std::string er = trace_report(e.trace, W("0"));
  CHECK(er.find("ell=0") != std::string::npos);
  CHECK(count_lines(er) == 3);
  CHECK(trace_from_json(trace_to_json(e.trace)) == e.trace);
}
