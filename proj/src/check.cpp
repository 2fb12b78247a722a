#include "iterwb/check.hpp"

#include <algorithm>
#include <chrono>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "iterwb/resource.hpp"
#include "iterwb/trace_json.hpp"

namespace iterwb {
namespace {

constexpr std::size_t kKeptFailures = 10;
constexpr std::size_t kKeptFlagsPerKind = 5;
constexpr std::size_t kShrinkAttempts = 4000;

const Word kZero("0");
const char* const kInvariantHolds = "invariant holds";

std::string at_k(const std::string& name, std::size_t k) {
  return name + "/k=" + std::to_string(k);
}

std::string quoted(const Word& w) { return to_literal(w); }

const char* field_name(Field f) {
  switch (f) {
    case Field::phi: return "phi";
    case Field::phi2: return "phi2";
    case Field::psi: return "psi";
    case Field::a: return "a";
    case Field::b: return "b";
    case Field::c: return "c";
  }
  return "?";
}

// Shared generator. Boundary trials keep |a| <= 7 and pull every word
// parameter of the step functions (and often b) to within one of |a|.
Inputs gen_inputs(Rng& rng, bool boundary, std::size_t max_len) {
  Inputs in;
  in.a = boundary ? gen_word(rng, std::min<std::size_t>(7, max_len))
                  : gen_word(rng, max_len);
  GenOptions options;
  options.max_depth = 3;
  if (boundary) options.pivot = in.a.size();
  if (boundary && rng.coin()) {
    std::size_t len = in.a.size() + rng.between(0, 2);
    in.b = gen_word_of_length(rng, len == 0 ? 0 : len - 1);
  } else {
    in.b = gen_word(rng, max_len);
  }
  in.c = gen_word(rng, max_len);
  in.phi = gen_step_fn(rng, options);
  in.phi2 = gen_step2(rng, options);
  in.psi = gen_step_fn(rng, options);
  return in;
}

using Run = std::function<void(const Inputs&, const Builders&, Recorder&)>;

Lemma make(std::string id, std::string description, std::vector<Field> fields,
           Run run, std::size_t max_len = 48) {
  Lemma l;
  l.id = std::move(id);
  l.description = std::move(description);
  l.fields = std::move(fields);
  l.generate = gen_inputs;
  l.run = std::move(run);
  l.default_max_len = max_len;
  return l;
}

void trace_ok(Recorder& r, const std::string& check, const Traced& t,
              const StepFn& phi, const Word& a) {
  r.invariant(check, validate_trace(t.trace, phi, a));
}

std::vector<std::size_t> upto(std::size_t k) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i <= k; ++i) out.push_back(i);
  return out;
}

Lemma lemma1() {
  return make("lemma1-rec-rec0",
              "rec from rec0 with a padded max bound; max and argmax via rec0",
              {Field::phi2, Field::psi, Field::a, Field::c},
              [](const Inputs& in, const Builders& B, Recorder& r) {
                StepFn psi = to_step(in.psi);
                StepFn2 phi = to_step2(in.phi2);
                MaxArgmax m = B.max_argmax(reference_rec0());
                r.compare("argmax", scan_argmax(psi, in.c), m.argmax(psi, in.c));
                r.compare("max", scan_max(psi, in.c), m.max(psi, in.c));
                r.compare("rec", rec(phi, psi, in.a, in.c),
                          B.rec_from_rec0(reference_rec0())(phi, psi, in.a, in.c));
              });
}

Lemma lemma2() {
  return make(
      "lemma2-iter-jter",
      "iter = lmin(jter, b); jter(c'i) = phi(iter(c'))",
      {Field::phi, Field::a, Field::b, Field::c},
      [](const Inputs& in, const Builders& B, Recorder& r) {
        StepFn phi = to_step(in.phi);
        r.compare("(*)", iter(phi, in.b, in.a, in.c),
                  B.iter_from_jter(reference_jter())(phi, in.b, in.a, in.c));
        Word expected = jter(phi, in.b, in.a, in.c);
        r.compare("(**)", expected,
                  B.jter_from_iter(reference_iter())(phi, in.b, in.a, in.c));
        if (in.c.empty()) {
          // The identity's clause for the empty length parameter reads b.
          r.flag("empty-clause-reads-b", "(**)/c=ε", expected, in.b);
        }
      });
}

Lemma lemma4() {
  return make(
      "lemma4-rec-iter",
      "iter from rec; rec0_prime from iter over pairs; rec0 from rec0_prime",
      {Field::phi, Field::phi2, Field::a, Field::b, Field::c},
      [](const Inputs& in, const Builders& B, Recorder& r) {
        StepFn phi = to_step(in.phi);
        StepFn2 phi2 = to_step2(in.phi2);
        const Word &a = in.a, &b = in.b, &c = in.c;
        r.compare("iter_from_rec", iter(phi, b, a, c),
                  B.iter_from_rec(reference_rec())(phi, b, a, c));
        r.compare("rec0p_from_iter", rec0_prime(phi2, b, a, c),
                  B.rec0p_from_iter(reference_iter())(phi2, b, a, c));
        for (std::size_t j = 0; j <= c.size(); ++j) {
          Word steps = repeat(Sym::zero, j);
          std::array<Word, 2> expected{steps,
                                       rec0_prime(phi2, b, a, truncate(c, steps))};
          r.compare("pair-invariant", tuple(expected),
                    rec0p_pair_state(reference_iter(), phi2, b, a, c, steps));
        }
        r.compare("rec0_from_rec0p", rec0(phi2, b, a, c),
                  B.rec0_from_rec0p(reference_rec0_prime())(phi2, b, a, c));
        r.compare("rec0-via-iter", rec0(phi2, b, a, c),
                  B.rec0_from_rec0p(B.rec0p_from_iter(reference_iter()))(phi2, b,
                                                                         a, c));
      });
}

Lemma unwind(bool corollary, std::vector<std::size_t> ks) {
  std::string id = corollary ? "cor6-unwind" : "lemma5-unwind";
  std::string description =
      corollary ? "budget k+1 = budget-0 tail after one step from the "
                  "stabilization point"
                : "budget k+1 = budget-1 tail from the stabilization point";
  return make(
      id, description, {Field::phi, Field::a, Field::c},
      [corollary, ks](const Inputs& in, const Builders&, Recorder& r) {
        StepFn phi = to_step(in.phi);
        std::size_t n = in.c.size();
        for (std::size_t k : ks) {
          Traced upper = iter_k(k + 1, phi, in.a, in.c);
          trace_ok(r, at_k("trace", k + 1), upper, phi, in.a);
          std::size_t ell = unwind_ell(k, n, phi, in.a);
          Traced head = iterate_length_revisions(k, ell, phi, in.a);
          trace_ok(r, at_k("trace-head", k), head, phi, in.a);
          r.invariant(at_k("ell<=n", k),
                      ell <= n ? std::nullopt
                               : std::optional<std::string>("ell exceeds n"));
          if (!corollary) {
            Word tail = iterate_length_revisions(1, n - ell, phi, head.value).value;
            r.flag("unwind-counterexample", at_k("lemma5", k), upper.value, tail);
          } else if (ell < n) {
            Word tail =
                iterate_length_revisions(0, n - ell - 1, phi, phi(head.value)).value;
            r.flag("unwind-counterexample", at_k("cor6", k), upper.value, tail);
          }
        }
      });
}

Lemma lemma7() {
  return make("lemma7-iter0", "budget-0 revision iterator from iter",
              {Field::phi, Field::a, Field::c},
              [](const Inputs& in, const Builders& B, Recorder& r) {
                StepFn phi = to_step(in.phi);
                Traced ref = iter_k(0, phi, in.a, in.c);
                trace_ok(r, "trace", ref, phi, in.a);
                r.compare("iter0", ref.value,
                          B.iter0_from_iter(reference_iter())(phi, in.a, in.c));
              });
}

Lemma lemma8(std::vector<std::size_t> ks) {
  return make("lemma8-iterk", "budget-k revision iterator from iter",
              {Field::phi, Field::a, Field::c},
              [ks](const Inputs& in, const Builders& B, Recorder& r) {
                StepFn phi = to_step(in.phi);
                for (std::size_t k : ks) {
                  Traced ref = iter_k(k, phi, in.a, in.c);
                  trace_ok(r, at_k("trace", k), ref, phi, in.a);
                  r.compare(at_k("iterk", k), ref.value,
                            B.iterk_from_iter(reference_iter(), k)(phi, in.a, in.c));
                }
              });
}

Lemma sec4_jterk(std::vector<std::size_t> ks) {
  Lemma l = make(
      "sec4-jterk-iterk", "jter_k(c'i) = phi(iter_k(c'))",
      {Field::phi, Field::a, Field::c},
      [ks](const Inputs& in, const Builders& B, Recorder& r) {
        StepFn phi = to_step(in.phi);
        for (std::size_t k : ks) {
          Traced ref = jter_k(k, phi, in.a, in.c);
          trace_ok(r, at_k("trace", k), ref, phi, in.a);
          if (in.c.empty()) {
            // The identity without the ε dispatch gives phi(a) here.
            r.flag("bridge-at-empty", at_k("jterk/c=ε", k), ref.value,
                   phi(iter_k(k, phi, in.a, in.c).value));
            continue;
          }
          r.compare(at_k("jterk", k), ref.value,
                    B.jterk_from_iterk(reference_iter_k(k))(phi, in.a, in.c));
        }
      });
  // Boundary trials (all of falsify) never use the empty length parameter.
  l.generate = [](Rng& rng, bool boundary, std::size_t max_len) {
    Inputs in = gen_inputs(rng, boundary, max_len);
    if (boundary && in.c.empty()) in.c = kZero;
    return in;
  };
  return l;
}

Lemma sec4_jter(std::vector<std::size_t> ks) {
  return make(
      "sec4-jter-jterk", "jter from jter_k through the flag-bit step",
      {Field::phi, Field::a, Field::b, Field::c},
      [ks](const Inputs& in, const Builders& B, Recorder& r) {
        StepFn phi = to_step(in.phi);
        const Word &a = in.a, &b = in.b, &c = in.c;
        Word expected = jter(phi, b, a, c);
        StepFn psi = jterk_flag_step(phi, a, b);
        Word start = append_sym(b, Sym::zero);
        Word claim_expected = append_sym(lmin(expected, b), Sym::one);
        for (std::size_t k : ks) {
          r.compare(at_k("jter", k), expected,
                    B.jter_from_jterk(reference_jter_k(k))(phi, b, a, c));
          Traced claim = jter_k(k, psi, start, concat(kZero, c));
          r.compare(at_k("claim", k), claim_expected, claim.value);
          trace_ok(r, at_k("claim-trace", k), claim, psi, start);
          r.invariant(at_k("claim-no-revision", k),
                      claim.trace.revisions() == 0 && claim.trace.ell == c.size() + 1
                          ? std::nullopt
                          : std::optional<std::string>(
                                "lookahead revision in the flag-bit iteration"));
        }
      });
}

Lemma sec5(std::vector<std::size_t> ks) {
  Lemma l = make(
      "sec5-fast", "tail-recursive revision iterator, threaded and literal",
      {Field::phi, Field::a, Field::c},
      [ks](const Inputs& in, const Builders&, Recorder& r) {
        StepFn phi = to_step(in.phi);
        for (std::size_t k : ks) {
          Traced ref = iter_k(k, phi, in.a, in.c);
          trace_ok(r, at_k("trace", k), ref, phi, in.a);
          std::size_t n = in.c.size();
          r.compare(at_k("threaded", k), ref.value,
                    iter_k_fast(k, phi, in.a, n, FastMode::threaded));
          r.flag("literal-divergence", at_k("literal", k), ref.value,
                 iter_k_fast(k, phi, in.a, n, FastMode::literal));
        }
      });
  // phi("11") = "1", phi("1") = "11" from a = "11" over two steps.
  Inputs probe;
  probe.phi = parse_dsl("(ite_longer '1' dropl app1)");
  probe.a = Word("11");
  probe.c = Word("00");
  l.fixed.push_back(probe);
  return l;
}

Lemma theorem(std::vector<std::size_t> ks) {
  return make(
      "theorem-main",
      "Iter, Iter_k, Jter_k and Jter each simulated around the full cycle",
      {Field::phi, Field::a, Field::b, Field::c},
      [ks](const Inputs& in, const Builders& B, Recorder& r) {
        StepFn phi = to_step(in.phi);
        const Word &a = in.a, &b = in.b, &c = in.c;
        for (std::size_t k : ks) {
          auto cycle_iter = [&](IterFn it) {
            return B.iter_from_jter(
                B.jter_from_jterk(B.jterk_from_iterk(B.iterk_from_iter(it, k))));
          };
          auto cycle_iterk = [&](IterKFn ik) {
            return B.iterk_from_iter(
                B.iter_from_jter(B.jter_from_jterk(B.jterk_from_iterk(ik))), k);
          };
          auto cycle_jterk = [&](IterKFn jk) {
            return B.jterk_from_iterk(
                B.iterk_from_iter(B.iter_from_jter(B.jter_from_jterk(jk)), k));
          };
          auto cycle_jter = [&](IterFn jt) {
            return B.jter_from_jterk(
                B.jterk_from_iterk(B.iterk_from_iter(B.iter_from_jter(jt), k)));
          };
          Traced ik = iter_k(k, phi, a, c);
          Traced jk = jter_k(k, phi, a, c);
          trace_ok(r, at_k("trace-iterk", k), ik, phi, a);
          trace_ok(r, at_k("trace-jterk", k), jk, phi, a);
          r.compare(at_k("iter", k), iter(phi, b, a, c),
                    cycle_iter(reference_iter())(phi, b, a, c));
          r.compare(at_k("iterk", k), ik.value,
                    cycle_iterk(reference_iter_k(k))(phi, a, c));
          r.compare(at_k("jterk", k), jk.value,
                    cycle_jterk(reference_jter_k(k))(phi, a, c));
          r.compare(at_k("jter", k), jter(phi, b, a, c),
                    cycle_jter(reference_jter())(phi, b, a, c));
        }
      },
      32);
}

/// Splits "lemma8-iterk:2" into the id and the budget.
std::pair<std::string, std::optional<std::size_t>> split_budget(
    const std::string& id) {
  auto colon = id.find(':');
  if (colon == std::string::npos) return {id, std::nullopt};
  std::string digits = id.substr(colon + 1);
  if (digits.empty() || digits.size() > 2 ||
      !std::all_of(digits.begin(), digits.end(),
                   [](char ch) { return ch >= '0' && ch <= '9'; })) {
    throw std::invalid_argument("bad budget in lemma id '" + id + "'");
  }
  return {id.substr(0, colon), std::stoul(digits)};
}

std::optional<Lemma> build_lemma(const std::string& base,
                                 std::optional<std::size_t> k) {
  auto ks = [&](std::size_t max_k) {
    return k ? std::vector<std::size_t>{*k} : upto(max_k);
  };
  if (base == "lemma1-rec-rec0" && !k) return lemma1();
  if (base == "lemma2-iter-jter" && !k) return lemma2();
  if (base == "lemma4-rec-iter" && !k) return lemma4();
  if (base == "lemma5-unwind") return unwind(false, ks(2));
  if (base == "cor6-unwind") return unwind(true, ks(2));
  if (base == "lemma7-iter0" && !k) return lemma7();
  if (base == "lemma8-iterk") return lemma8(ks(3));
  if (base == "sec4-jterk-iterk") return sec4_jterk(ks(2));
  if (base == "sec4-jter-jterk") return sec4_jter(ks(2));
  if (base == "sec5-fast") return sec5(ks(3));
  if (base == "theorem-main") return theorem(ks(3));
  return std::nullopt;
}

// Shrinking.

std::vector<Word> word_shrinks(const Word& w) {
  std::vector<Word> out;
  if (w.empty()) return out;
  out.push_back(Word());
  std::size_t n = w.size();
  if (n > 2) {
    out.push_back(from_bits(w.bits().substr(0, n / 2)));
    out.push_back(from_bits(w.bits().substr(n / 2)));
  }
  out.push_back(drop_last(w));
  out.push_back(from_bits(w.bits().substr(1)));
  // Same length, simpler symbols.
  if (w != zeros(w)) out.push_back(zeros(w));
  return out;
}

std::vector<DslPtr> dsl_shrinks(const DslPtr& f) {
  std::vector<DslPtr> out;
  if (f->f) {
    out.push_back(f->f);
    out.push_back(f->g);
    for (const DslPtr& sf : dsl_shrinks(f->f)) {
      out.push_back(Dsl::node(f->op, sf, f->g, f->word));
    }
    for (const DslPtr& sg : dsl_shrinks(f->g)) {
      out.push_back(Dsl::node(f->op, f->f, sg, f->word));
    }
  } else if (f->op != DslOp::id) {
    out.push_back(Dsl::leaf(DslOp::id));
  }
  for (const Word& w : word_shrinks(f->word)) {
    out.push_back(Dsl::node(f->op, f->f, f->g, w));
  }
  return out;
}

std::size_t weight(const Dsl& f) {
  std::size_t w = 1 + f.word.size() + (f.op == DslOp::id ? 0 : 1);
  if (f.f) w += weight(*f.f) + weight(*f.g);
  return w;
}

std::size_t weight(const Inputs& in, const std::vector<Field>& fields) {
  std::size_t w = 0;
  for (Field f : fields) {
    switch (f) {
      case Field::phi: w += weight(*in.phi); break;
      case Field::phi2:
        w += weight(*in.phi2.body) + (in.phi2.combine == Combine::t ? 0 : 1);
        break;
      case Field::psi: w += weight(*in.psi); break;
      case Field::a: w += in.a.size(); break;
      case Field::b: w += in.b.size(); break;
      case Field::c: w += in.c.size(); break;
    }
  }
  return w;
}

std::vector<Inputs> candidates(const Inputs& in, const std::vector<Field>& fields) {
  std::vector<Inputs> out;
  for (Field f : fields) {
    switch (f) {
      case Field::phi:
        for (auto& s : dsl_shrinks(in.phi)) out.push_back(in), out.back().phi = s;
        break;
      case Field::psi:
        for (auto& s : dsl_shrinks(in.psi)) out.push_back(in), out.back().psi = s;
        break;
      case Field::phi2:
        if (in.phi2.combine != Combine::t) {
          out.push_back(in);
          out.back().phi2.combine = Combine::t;
        }
        for (auto& s : dsl_shrinks(in.phi2.body)) {
          out.push_back(in);
          out.back().phi2.body = s;
        }
        break;
      case Field::a:
        for (auto& w : word_shrinks(in.a)) out.push_back(in), out.back().a = w;
        break;
      case Field::b:
        for (auto& w : word_shrinks(in.b)) out.push_back(in), out.back().b = w;
        break;
      case Field::c:
        for (auto& w : word_shrinks(in.c)) out.push_back(in), out.back().c = w;
        break;
    }
  }
  return out;
}

/// Runs one trial, turning an escaped exception into a failure entry.
Recorder run_trial(const Lemma& lemma, const Builders& builders,
                   const Inputs& in) {
  Recorder r;
  try {
    lemma.run(in, builders, r);
  } catch (const std::exception& e) {
    r.invariant("exception", std::string(e.what()));
  }
  return r;
}

const Recorder::Entry* find_entry(const Recorder& r, const std::string& check,
                                  bool flagged) {
  for (const auto& e : r.entries()) {
    if (e.check == check && e.flagged == flagged) return &e;
  }
  return nullptr;
}

std::string json_word(const std::string& literal) {
  // Entries store words in '…' form; reports carry the bare symbols.
  if (literal.size() >= 2 && literal.front() == '\'' && literal.back() == '\'') {
    return literal.substr(1, literal.size() - 2);
  }
  return literal;
}

nlohmann::ordered_json finding_to_json(const Finding& f,
                                       const std::vector<Field>& fields) {
  nlohmann::ordered_json j;
  j["trial"] = f.trial;
  j["check"] = f.check;
  if (!f.kind.empty()) j["kind"] = f.kind;
  j["inputs"] = inputs_to_json(f.inputs, fields);
  j["expected"] = json_word(f.expected);
  j["actual"] = json_word(f.actual);
  if (f.minimized) {
    j["minimized"] = {{"inputs", inputs_to_json(f.minimized->inputs, fields)},
                      {"expected", json_word(f.minimized->expected)},
                      {"actual", json_word(f.minimized->actual)}};
  } else {
    j["minimized"] = nullptr;
  }
  return j;
}

std::string describe_inputs(const Inputs& in, const std::vector<Field>& fields) {
  std::string out;
  for (Field f : fields) {
    if (!out.empty()) out += " ";
    out += std::string(field_name(f)) + "=";
    switch (f) {
      case Field::phi: out += print_dsl(*in.phi); break;
      case Field::phi2: out += print_step2(in.phi2); break;
      case Field::psi: out += print_dsl(*in.psi); break;
      case Field::a: out += to_literal(in.a); break;
      case Field::b: out += to_literal(in.b); break;
      case Field::c: out += to_literal(in.c); break;
    }
  }
  return out;
}

}  // namespace

void Recorder::compare(const std::string& check, const Word& expected,
                       const Word& actual) {
  ++comparisons_;
  if (expected != actual) {
    entries_.push_back({check, quoted(expected), quoted(actual), false, ""});
  }
}

void Recorder::invariant(const std::string& check,
                         const std::optional<std::string>& violation) {
  ++comparisons_;
  ++invariants_;
  if (violation) entries_.push_back({check, kInvariantHolds, *violation, false, ""});
}

void Recorder::flag(const std::string& kind, const std::string& check,
                    const Word& expected, const Word& actual) {
  if (expected != actual) {
    entries_.push_back({check, quoted(expected), quoted(actual), true, kind});
  }
}

nlohmann::ordered_json inputs_to_json(const Inputs& in,
                                      const std::vector<Field>& fields) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (Field f : fields) {
    switch (f) {
      case Field::phi: j["phi"] = print_dsl(*in.phi); break;
      case Field::phi2: j["phi2"] = print_step2(in.phi2); break;
      case Field::psi: j["psi"] = print_dsl(*in.psi); break;
      case Field::a: j["a"] = in.a.bits(); break;
      case Field::b: j["b"] = in.b.bits(); break;
      case Field::c: j["c"] = in.c.bits(); break;
    }
  }
  return j;
}

Inputs inputs_from_json(const nlohmann::json& j) {
  Inputs in;
  in.phi = j.contains("phi") ? parse_dsl(j.at("phi").get<std::string>())
                             : Dsl::leaf(DslOp::id);
  in.phi2 = j.contains("phi2") ? parse_step2(j.at("phi2").get<std::string>())
                               : Step2{Combine::t, Dsl::leaf(DslOp::id)};
  in.psi = j.contains("psi") ? parse_dsl(j.at("psi").get<std::string>())
                             : Dsl::leaf(DslOp::id);
  if (j.contains("a")) in.a = Word(j.at("a").get<std::string>());
  if (j.contains("b")) in.b = Word(j.at("b").get<std::string>());
  if (j.contains("c")) in.c = Word(j.at("c").get<std::string>());
  return in;
}

const std::vector<Lemma>& lemmas() {
  static const std::vector<Lemma> all = [] {
    std::vector<Lemma> out;
    for (const char* id :
         {"lemma1-rec-rec0", "lemma2-iter-jter", "lemma4-rec-iter", "lemma5-unwind",
          "cor6-unwind", "lemma7-iter0", "lemma8-iterk", "sec4-jterk-iterk",
          "sec4-jter-jterk", "sec5-fast", "theorem-main"}) {
      out.push_back(*build_lemma(id, std::nullopt));
    }
    return out;
  }();
  return all;
}

Lemma find_lemma(const std::string& id) {
  auto [base, k] = split_budget(id);
  if (auto l = build_lemma(base, k)) {
    l->id = id;
    return *l;
  }
  throw std::invalid_argument("unknown lemma id '" + id + "'");
}

const std::vector<Mutant>& mutants_table() {
  static const std::vector<Mutant> table = [] {
    std::vector<Mutant> out;
    auto add = [&out](std::string name, std::string lemma, auto edit) {
      Builders b;
      edit(b);
      out.push_back({std::move(name), std::move(lemma), std::move(b)});
    };
    add("argmax-inverted-test", "lemma1-rec-rec0",
        [](Builders& b) { b.max_argmax = mutants::max_argmax_inverted_test; });
    add("rec-unpadded-bound", "lemma1-rec-rec0",
        [](Builders& b) { b.rec_from_rec0 = mutants::rec_from_rec0_unpadded; });
    add("iter-from-rec-unclamped-start", "lemma4-rec-iter", [](Builders& b) {
      b.iter_from_rec = mutants::iter_from_rec_unclamped_start;
    });
    add("rec0p-unclamped-start", "lemma4-rec-iter", [](Builders& b) {
      b.rec0p_from_iter = mutants::rec0p_from_iter_unclamped_start;
    });
    add("rec0-length-test", "lemma4-rec-iter", [](Builders& b) {
      b.rec0_from_rec0p = mutants::rec0_from_rec0p_length_test;
    });
    add("iter-from-jter-unclamped", "lemma2-iter-jter",
        [](Builders& b) { b.iter_from_jter = mutants::iter_from_jter_unclamped; });
    add("jter-from-iter-full-length", "lemma2-iter-jter", [](Builders& b) {
      b.jter_from_iter = mutants::jter_from_iter_full_length;
    });
    add("iter0-short-bound", "lemma7-iter0", [](Builders& b) {
      b.iter0_from_iter = mutants::iter0_from_iter_short_bound;
    });
    add("iterk-no-step", "lemma8-iterk",
        [](Builders& b) { b.iterk_from_iter = mutants::iterk_from_iter_no_step; });
    add("jterk-no-final-step", "sec4-jterk-iterk", [](Builders& b) {
      b.jterk_from_iterk = mutants::jterk_from_iterk_no_final_step;
    });
    add("jter-no-empty-case", "sec4-jter-jterk", [](Builders& b) {
      b.jter_from_jterk = mutants::jter_from_jterk_no_empty_case;
    });
    return out;
  }();
  return table;
}

std::optional<Mutant> find_mutant(const std::string& id) {
  const std::string prefix = "mutant/";
  if (id.rfind(prefix, 0) != 0) return std::nullopt;
  std::string name = id.substr(prefix.size());
  for (const Mutant& m : mutants_table()) {
    if (m.name == name) return m;
  }
  throw std::invalid_argument("unknown mutant '" + name + "'");
}

bool reproduces(const Lemma& lemma, const Builders& builders,
                const Inputs& inputs, const std::string& check, bool flagged) {
  return find_entry(run_trial(lemma, builders, inputs), check, flagged) != nullptr;
}

std::optional<Minimized> shrink(const Lemma& lemma, const Builders& builders,
                                const Inputs& inputs, const std::string& check,
                                bool flagged) {
  Recorder first = run_trial(lemma, builders, inputs);
  const Recorder::Entry* e = find_entry(first, check, flagged);
  if (!e) return std::nullopt;
  Minimized best{inputs, e->expected, e->actual};
  std::size_t best_weight = weight(inputs, lemma.fields);
  std::size_t attempts = 0;
  bool improved = true;
  while (improved && attempts < kShrinkAttempts) {
    improved = false;
    for (const Inputs& cand : candidates(best.inputs, lemma.fields)) {
      if (++attempts > kShrinkAttempts) break;
      std::size_t w = weight(cand, lemma.fields);
      if (w >= best_weight) continue;
      Recorder r = run_trial(lemma, builders, cand);
      if (const auto* hit = find_entry(r, check, flagged)) {
        best = {cand, hit->expected, hit->actual};
        best_weight = w;
        improved = true;
        break;
      }
    }
  }
  return best;
}

CheckReport run_campaign(const Lemma& lemma, const Builders& builders,
                         const CheckOptions& options, std::string mode) {
  auto start = std::chrono::steady_clock::now();
  auto elapsed = [&start] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
        .count();
  };
  CheckReport report;
  report.lemma = lemma.id;
  report.mode = std::move(mode);
  report.seed = options.seed;
  report.max_len = options.max_len.value_or(lemma.default_max_len);
  report.fields = lemma.fields;

  std::map<std::string, std::size_t> kept_per_kind;
  auto absorb = [&](const std::string& trial, const Inputs& in, const Recorder& r) {
    // One finding per check per trial.
    std::map<std::pair<std::string, bool>, bool> seen;
    for (const auto& e : r.entries()) {
      if (!seen.emplace(std::make_pair(e.check, e.flagged), true).second) continue;
      Finding f{trial, e.check, e.kind, in, e.expected, e.actual, std::nullopt};
      if (!e.flagged) {
        ++report.failure_count;
        if (e.expected == kInvariantHolds) ++report.invariant_failures;
        if (report.failures.size() < kKeptFailures) {
          f.minimized = shrink(lemma, builders, in, e.check, false);
          report.failures.push_back(std::move(f));
        }
      } else {
        ++report.flagged_counts[e.kind];
        std::size_t& kept = kept_per_kind[e.kind];
        if (kept < kKeptFlagsPerKind) {
          if (kept == 0) f.minimized = shrink(lemma, builders, in, e.check, true);
          ++kept;
          report.flagged.push_back(std::move(f));
        }
      }
    }
  };
  auto count = [&](const std::string& check_prefix, const Recorder& r) {
    report.comparisons[check_prefix] += r.comparisons();
    report.invariant_checks += r.invariants();
  };

  for (std::size_t i = 0; i < lemma.fixed.size(); ++i) {
    Recorder r = run_trial(lemma, builders, lemma.fixed[i]);
    count("fixed", r);
    absorb("fixed-" + std::to_string(i), lemma.fixed[i], r);
  }
  for (std::size_t i = 0; i < options.trials; ++i) {
    if (options.time_budget && elapsed() > *options.time_budget) break;
    Rng rng(mix_seed(options.seed, i));
    bool boundary = (i % 100) < options.boundary_percent;
    Inputs in = lemma.generate(rng, boundary, report.max_len);
    Recorder r = run_trial(lemma, builders, in);
    count("generated", r);
    ++report.trials;
    std::size_t before = report.failure_count;
    absorb(std::to_string(i), in, r);
    if (options.stop_at_first_failure && report.failure_count > before) break;
  }
  report.wall_seconds = elapsed();
  return report;
}

CheckReport check_lemma(const std::string& id, std::size_t trials,
                        std::uint64_t seed, std::optional<std::size_t> max_len) {
  CheckOptions options;
  options.trials = trials;
  options.seed = seed;
  options.max_len = max_len;
  if (auto m = find_mutant(id)) {
    Lemma l = find_lemma(m->lemma);
    l.id = id;
    return run_campaign(l, m->builders, options, "check");
  }
  return run_campaign(find_lemma(id), Builders{}, options, "check");
}

CheckReport falsify_lemma(const std::string& id, double budget_seconds,
                          std::uint64_t seed) {
  CheckOptions options;
  options.trials = static_cast<std::size_t>(-1);
  options.seed = seed;
  options.boundary_percent = 100;
  options.stop_at_first_failure = true;
  options.time_budget = budget_seconds;
  if (auto m = find_mutant(id)) {
    Lemma l = find_lemma(m->lemma);
    l.id = id;
    options.max_len = 12;
    return run_campaign(l, m->builders, options, "falsify");
  }
  Lemma l = find_lemma(id);
  options.max_len = 12;
  return run_campaign(l, Builders{}, options, "falsify");
}

nlohmann::ordered_json report_to_json(const CheckReport& r) {
  nlohmann::ordered_json j;
  j["lemma"] = r.lemma;
  j["mode"] = r.mode;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["max_len"] = r.max_len;
  j["passed"] = r.passed();
  j["comparisons"] = r.comparisons;
  j["failure_count"] = r.failure_count;
  j["invariant_checks"] = r.invariant_checks;
  j["invariant_failures"] = r.invariant_failures;
  auto failures = nlohmann::ordered_json::array();
  for (const Finding& f : r.failures) failures.push_back(finding_to_json(f, r.fields));
  j["failures"] = std::move(failures);
  j["flagged_counts"] = r.flagged_counts;
  auto flagged = nlohmann::ordered_json::array();
  for (const Finding& f : r.flagged) flagged.push_back(finding_to_json(f, r.fields));
  j["flagged"] = std::move(flagged);
  return j;
}

std::string report_to_text(const CheckReport& r) {
  std::ostringstream out;
  out << r.lemma << " [" << r.mode << "] seed=" << r.seed << " trials=" << r.trials
      << " max_len=" << r.max_len << ": " << (r.passed() ? "PASS" : "FAIL")
      << " (" << r.failure_count << " failures";
  std::size_t flagged = 0;
  for (const auto& [kind, n] : r.flagged_counts) flagged += n;
  out << ", " << flagged << " flagged) in " << std::fixed << std::setprecision(2)
      << r.wall_seconds << "s\n";
  auto show = [&](const char* label, const Finding& f) {
    out << "  " << label << " trial " << f.trial << " " << f.check;
    if (!f.kind.empty()) out << " [" << f.kind << "]";
    out << "\n    inputs:   " << describe_inputs(f.inputs, r.fields)
        << "\n    expected: " << f.expected << "\n    actual:   " << f.actual << "\n";
    if (f.minimized) {
      out << "    minimized: " << describe_inputs(f.minimized->inputs, r.fields)
          << "\n      expected " << f.minimized->expected << ", actual "
          << f.minimized->actual << "\n";
    }
  };
  for (const Finding& f : r.failures) show("failure", f);
  for (const auto& [kind, n] : r.flagged_counts) {
    out << "  flagged " << kind << ": " << n << "\n";
  }
  for (const Finding& f : r.flagged) show("flagged", f);
  return out.str();
}

std::string trace_report(const IterTrace& trace, const Word& a) {
  std::ostringstream out;
  out << "kind=" << to_string(trace.kind) << " budget="
      << (trace.budget ? std::to_string(*trace.budget) : std::string("none"))
      << " n=" << trace.n << " ell=" << trace.ell
      << " revisions=" << trace.revisions() << "\n";
  out << std::setw(6) << "call" << std::setw(9) << "|query|" << std::setw(10)
      << "|answer|" << std::setw(10) << "revision" << std::setw(10) << "baseline"
      << "\n";
  std::size_t baseline = a.size();
  std::optional<std::size_t> max_query;
  for (const TraceCall& call : trace.calls) {
    std::string base;
    if (trace.kind == RevisionKind::length) {
      base = std::to_string(baseline);
    } else {
      base = max_query ? std::to_string(*max_query) : std::string("-");
    }
    out << std::setw(6) << call.index << std::setw(9) << call.query.size()
        << std::setw(10) << call.answer.size() << std::setw(10)
        << (call.revision ? "yes" : "no") << std::setw(10) << base << "\n";
    baseline = std::max(baseline, call.answer.size());
    max_query = std::max(max_query.value_or(0), call.query.size());
  }
  out << trace_to_json(trace).dump() << "\n";
  return out.str();
}

}  // namespace iterwb
