// Runs every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is nonzero when any criterion fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "iterwb/check.hpp"
#include "iterwb/eval.hpp"
#include "iterwb/gen.hpp"
#include "iterwb/iterators.hpp"
#include "iterwb/parser.hpp"
#include "iterwb/resource.hpp"
#include "iterwb/term.hpp"
#include "iterwb/term_gen.hpp"
#include "iterwb/typecheck.hpp"

using namespace iterwb;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

/// Campaign reports of criteria 3 to 7, for the trace-invariant tally.
std::vector<CheckReport> trace_bearing;

void summarize(Outcome& o, const CheckReport& r) {
  std::size_t flagged = 0;
  for (const auto& [kind, n] : r.flagged_counts) flagged += n;
  o.detail << " " << r.lemma << ": trials=" << r.trials << " failures=" << r.failure_count
           << " flagged=" << flagged << ";";
  o.require(r.passed(), r.lemma + " has failures");
}

CheckReport campaign(const std::string& id, std::size_t trials, std::uint64_t seed,
                     std::optional<std::size_t> max_len,
                     unsigned boundary_percent = 50) {
  CheckOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  opt.max_len = max_len;
  opt.boundary_percent = boundary_percent;
  return run_campaign(find_lemma(id), Builders{}, opt, "check");
}

void timed(Outcome& o, Clock::time_point start, double limit) {
  double s = seconds_since(start);
  o.detail << " time=" << s << "s (limit " << limit << "s)";
  o.require(s < limit, "time limit");
}

Outcome criterion1() {
  Outcome o;
  auto start = Clock::now();
  CheckReport r = campaign("lemma2-iter-jter", 1000, 42, 48);
  summarize(o, r);
  timed(o, start, 30);
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto start = Clock::now();
  summarize(o, campaign("lemma1-rec-rec0", 1000, 42, 48));
  summarize(o, campaign("lemma4-rec-iter", 1000, 42, 48));
  timed(o, start, 180);
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto start = Clock::now();
  // Each trial runs every budget, so 500 trials give 500 per k.
  for (const char* id : {"lemma7-iter0", "lemma8-iterk"}) {
    CheckReport r = campaign(id, 500, 42, std::nullopt);
    summarize(o, r);
    trace_bearing.push_back(r);
  }
  timed(o, start, 300);
  return o;
}

Outcome criterion4() {
  Outcome o;
  auto start = Clock::now();
  CheckReport bridge = campaign("sec4-jterk-iterk", 500, 42, std::nullopt);
  summarize(o, bridge);
  o.require(bridge.flagged_counts.count("bridge-at-empty") == 1,
            "empty length parameter reported as flagged");
  CheckReport jter = campaign("sec4-jter-jterk", 500, 42, std::nullopt);
  summarize(o, jter);
  trace_bearing.push_back(bridge);
  trace_bearing.push_back(jter);
  timed(o, start, 180);
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto start = Clock::now();
  CheckReport r = campaign("theorem-main", 200, 7, 32);
  summarize(o, r);
  trace_bearing.push_back(r);
  timed(o, start, 300);
  return o;
}

Outcome criterion6() {
  Outcome o;
  for (const char* id : {"lemma5-unwind", "cor6-unwind"}) {
    CheckReport r = campaign(id, 1000, 42, std::nullopt, 100);
    summarize(o, r);
    o.require(r.trials == 1000, "campaign ran to completion");
    Lemma lemma = find_lemma(id);
    for (const Finding& f : r.flagged) {
      if (!f.minimized) continue;
      o.require(f.minimized->inputs.a.size() <= 8 && f.minimized->inputs.c.size() <= 8,
                "counterexample shrunk to |a|,|c| <= 8");
      o.require(reproduces(lemma, Builders{}, f.minimized->inputs, f.check, true),
                "minimized counterexample reproduces");
    }
    std::size_t shrunk = 0;
    for (const Finding& f : r.flagged) shrunk += f.minimized.has_value();
    o.require(r.flagged_counts.empty() || shrunk > 0, "flagged counterexample minimized");
    trace_bearing.push_back(r);
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  CheckReport r = campaign("sec5-fast", 1000, 42, std::nullopt);
  summarize(o, r);
  auto it = r.flagged_counts.find("literal-divergence");
  o.require(it != r.flagged_counts.end(), "literal divergences flagged");
  bool probe = false;
  for (const Finding& f : r.flagged) {
    probe = probe || (f.trial.rfind("fixed", 0) == 0 && f.kind == "literal-divergence");
  }
  o.require(probe, "baseline probe among the flagged divergences");
  o.detail << " probe_flagged=" << (probe ? "yes" : "no");
  trace_bearing.push_back(r);
  return o;
}

Outcome criterion8() {
  Outcome o;
  std::size_t checks = 0, violations = 0;
  for (const CheckReport& r : trace_bearing) {
    checks += r.invariant_checks;
    violations += r.invariant_failures;
  }
  o.detail << " campaigns=" << trace_bearing.size() << " invariant_checks=" << checks
           << " violations=" << violations;
  o.require(trace_bearing.size() == 8, "all campaigns of criteria 3-7 ran");
  o.require(checks > 0, "trace invariants were asserted");
  o.require(violations == 0, "zero trace invariant violations");
  return o;
}

Outcome criterion9() {
  Outcome o;
  StepFn selfcat = [](const Word& w) { return concat(w, w); };
  Word big = iterate(selfcat, 10, Word("0"));
  o.require(big.size() == 1024 && big == repeat(Sym::zero, 1024), "selfcat^10 length 1024");
  std::string message;
  try {
    ScopedWordCap cap(std::size_t{1} << 20);
    iterate(selfcat, 25, Word("0"));
  } catch (const ResourceExceeded& e) {
    message = e.what();
  }
  o.require(message.find("resource exceeded") != std::string::npos,
            "selfcat^25 aborts with resource exceeded");
  std::size_t over = 0;
  for (std::uint64_t s = 0; s < 1000; ++s) {
    Rng rng(mix_seed(9, s));
    Word a = gen_word(rng, 48);
    StepFn phi = to_step(gen_step_fn(rng, GenOptions{4, std::nullopt}));
    Word b = gen_word(rng, 48);
    Word c = gen_word(rng, 48);
    if (iter(phi, b, a, c).size() > b.size()) ++over;
  }
  o.detail << " |selfcat^10|=" << big.size() << " guard='" << message
           << "' iter_over_bound=" << over << "/1000";
  o.require(over == 0, "iter never exceeds |b|");
  return o;
}

Outcome criterion10() {
  Outcome o;
  const Type w = Type::word();
  const std::vector<Type> targets{w, Type::arrow(w, w),
                                  Type::arrow(Type::arrow(w, w), w)};
  std::size_t round_trip_bad = 0, terms = 0;
  for (std::uint64_t s = 0; terms < 1000; ++s) {
    Rng rng(mix_seed(13, s));
    TermGenOptions opt;
    opt.depth = 7;
    Term t = gen_term(rng, targets[s % targets.size()], opt);
    if (term_depth(t) > 10) continue;
    ++terms;
    if (!(parse(print(t)) == t)) ++round_trip_bad;
  }

  std::size_t beta_bad = 0, beta_checked = 0, beta_guarded = 0;
  const std::vector<Type> params{w, Type::arrow(w, w)};
  for (std::uint64_t s = 0; s < 1000; ++s) {
    Rng rng(mix_seed(12, s));
    Type pt = params[rng.below(params.size())];
    TermGenOptions bo;
    bo.depth = 4;
    bo.scope = {{"x", pt}};
    Term body = gen_term(rng, w, bo);
    TermGenOptions ao;
    ao.depth = 3;
    Term arg = gen_term(rng, pt, ao);
    try {
      Word lhs = evaluate(Term::app(Term::abs("x", pt, body), arg)).word();
      Word rhs = evaluate(substitute(body, "x", arg)).word();
      ++beta_checked;
      if (lhs != rhs) ++beta_bad;
    } catch (const ResourceExceeded&) {
      ++beta_guarded;
    }
  }

  std::size_t detected = 0;
  std::string missed;
  for (const Mutant& m : mutants_table()) {
    if (!check_lemma("mutant/" + m.name, 500, 42).passed()) {
      ++detected;
    } else {
      missed += " " + m.name;
    }
  }

  bool same = true;
  for (const char* id : {"lemma2-iter-jter", "sec5-fast", "lemma8-iterk"}) {
    std::string x = report_to_json(check_lemma(id, 100, 5, 16)).dump();
    std::string y = report_to_json(check_lemma(id, 100, 5, 16)).dump();
    same = same && x == y;
  }

  o.detail << " round_trip=" << terms - round_trip_bad << "/" << terms
           << " beta=" << beta_checked - beta_bad << "/" << beta_checked
           << " (guarded " << beta_guarded << ") mutants_detected=" << detected << "/"
           << mutants_table().size() << " reproducible=" << (same ? "yes" : "no");
  o.require(round_trip_bad == 0, "round trip");
  o.require(beta_bad == 0 && beta_checked >= 950, "beta preservation");
  o.require(detected == mutants_table().size(), "mutants missed:" + missed);
  o.require(same, "identical seeds give identical bytes");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::function<Outcome()>> criteria{
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9, criterion10};
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail << " exception: " << e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << i + 1 << ": " << (o.pass ? "PASS" : "FAIL") << " -"
              << o.detail.str() << std::endl;
  }
  return all ? 0 : 1;
}
