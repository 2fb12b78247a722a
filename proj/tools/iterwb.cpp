// iterwb: evaluate terms, run primitives, emit reflected translations and run
// equivalence campaigns.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "iterwb/check.hpp"
#include "iterwb/dsl.hpp"
#include "iterwb/eval.hpp"
#include "iterwb/parser.hpp"
#include "iterwb/reflect.hpp"
#include "iterwb/resource.hpp"
#include "iterwb/trace_json.hpp"
#include "iterwb/typecheck.hpp"

using namespace iterwb;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

/// Accepts 0101, '0101' and '' (the empty word).
Word word_arg(const std::string& text) {
  std::string_view s = text;
  if (s.size() >= 2 && s.front() == '\'' && s.back() == '\'') {
    s = s.substr(1, s.size() - 2);
  }
  return Word(s);
}

std::string show(const Value& v) {
  if (v.is_word()) return to_literal(v.word());
  return "<function : " + v.type().str() + ">";
}

int cmd_eval(const std::string& file, const std::vector<std::string>& binds) {
  Assignment env;
  for (const std::string& b : binds) {
    auto eq = b.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw std::runtime_error("--bind expects NAME=TERMFILE, got '" + b + "'");
    }
    std::string name = b.substr(0, eq);
    Term bound = parse(read_file(b.substr(eq + 1)));
    env.bind(name, evaluate(bound));
  }
  Term t = parse(read_file(file), env.types());
  std::cout << show(evaluate(t, env)) << "\n";
  return 0;
}

int cmd_type(const std::string& file) {
  std::cout << infer_type(parse(read_file(file))).str() << "\n";
  return 0;
}

struct RunArgs {
  std::string primitive;
  std::size_t k = 0;
  std::string phi;
  std::string psi;
  std::string a;
  std::string b;
  std::string c;
  std::string trace_out;
};

int cmd_run(const RunArgs& args) {
  Word a = word_arg(args.a);
  Word b = word_arg(args.b);
  Word c = word_arg(args.c);
  std::optional<Traced> traced;
  Word result;
  const std::string& p = args.primitive;
  if (p == "rec" || p == "rec0") {
    StepFn2 phi = to_step2(parse_step2(args.phi));
    if (p == "rec") {
      if (args.psi.empty()) throw std::runtime_error("rec needs --psi");
      result = rec(phi, to_step(parse_dsl(args.psi)), a, c);
    } else {
      result = rec0(phi, b, a, c);
    }
  } else {
    StepFn phi = to_step(parse_dsl(args.phi));
    if (p == "iter") {
      traced = iter_traced(phi, b, a, c);
    } else if (p == "jter") {
      traced = jter_traced(phi, b, a, c);
    } else if (p == "iterk") {
      traced = iter_k(args.k, phi, a, c);
    } else {
      traced = jter_k(args.k, phi, a, c);
    }
    result = traced->value;
  }
  std::cout << to_literal(result) << "\n";
  if (traced) {
    std::cerr << trace_report(traced->trace, a);
    if (!args.trace_out.empty()) {
      write_file(args.trace_out, trace_to_json(traced->trace).dump(2) + "\n");
    }
  } else if (!args.trace_out.empty()) {
    throw std::runtime_error("--trace applies to iter, jter, iterk and jterk");
  }
  return 0;
}

/// Lemma ids name the builder their campaign exercises; builder names are
/// accepted as well.
std::string builder_for(const std::string& id) {
  static const std::map<std::string, std::string> by_lemma = {
      {"lemma1-rec-rec0", "rec_from_rec0"},
      {"lemma2-iter-jter", "iter_from_jter"},
      {"lemma4-rec-iter", "iter_from_rec"},
      {"lemma7-iter0", "iter0_from_iter"},
      {"lemma8-iterk", "iterk_from_iter"},
      {"sec4-jterk-iterk", "jterk_from_iterk"},
      {"sec4-jter-jterk", "jter_from_jterk"},
  };
  if (auto it = by_lemma.find(id); it != by_lemma.end()) return it->second;
  return id;
}

int cmd_translate(const std::string& id, std::size_t k, const std::string& out) {
  Reflection r = reflect(builder_for(id), k);
  if (auto bad = closure_violation(r)) {
    std::cerr << "reflected term for " << r.builder << " is not closed: " << *bad
              << "\n";
    return 1;
  }
  std::string text = "-- " + r.builder + " : " +
                     Type::arrow(r.primitive, r.target).str() + "\n" +
                     print(r.term) + "\n";
  if (out.empty() || out == "-") {
    std::cout << text;
  } else {
    write_file(out, text);
    std::cout << r.builder << " -> " << out << " (" << term_size(r.term)
              << " nodes)\n";
  }
  return 0;
}

int finish_reports(const std::vector<CheckReport>& reports,
                   const std::string& json_out) {
  bool ok = true;
  for (const CheckReport& r : reports) {
    std::cout << report_to_text(r);
    ok = ok && r.passed();
  }
  if (!json_out.empty()) {
    nlohmann::ordered_json j;
    if (reports.size() == 1) {
      j = report_to_json(reports.front());
    } else {
      j = nlohmann::ordered_json::array();
      for (const CheckReport& r : reports) j.push_back(report_to_json(r));
    }
    write_file(json_out, j.dump(2) + "\n");
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Workbench for bounded recursion and iteration functionals"};
  app.require_subcommand(1);
  std::optional<std::size_t> cap;
  app.add_option("--cap", cap, "Word length cap in symbols (default 2^20 or ITERWB_CAP)");

  std::string file;
  std::vector<std::string> binds;
  auto* eval_cmd = app.add_subcommand("eval", "Parse, type-check and evaluate a term");
  eval_cmd->add_option("FILE", file, "Term file")->required();
  eval_cmd->add_option("--bind", binds, "NAME=TERMFILE binding for a free variable");
  eval_cmd->add_option("--cap", cap, "Word length cap in symbols");

  auto* type_cmd = app.add_subcommand("type", "Print the inferred type of a term");
  type_cmd->add_option("FILE", file, "Term file")->required();

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "Run a primitive on DSL step functions");
  run_cmd->add_option("--primitive", run.primitive, "Primitive")
      ->required()
      ->check(CLI::IsMember({"iter", "jter", "rec", "rec0", "iterk", "jterk"}));
  run_cmd->add_option("--k", run.k, "Revision budget for iterk/jterk");
  run_cmd->add_option("--phi", run.phi, "Step function (two-argument (on2 ...) for rec/rec0)")
      ->required();
  run_cmd->add_option("--psi", run.psi, "Bounding function for rec");
  run_cmd->add_option("--a", run.a, "Start value")->required();
  run_cmd->add_option("--b", run.b, "Bound");
  run_cmd->add_option("--c", run.c, "Length parameter")->required();
  run_cmd->add_option("--trace", run.trace_out, "Write the call trace as JSON");

  std::string lemma;
  std::size_t k = 0;
  std::string out;
  auto* translate_cmd =
      app.add_subcommand("translate", "Emit the reflected λ-term of a translation");
  translate_cmd->add_option("--lemma", lemma, "Lemma id or builder name")->required();
  translate_cmd->add_option("--k", k, "Budget for iterk_from_iter");
  translate_cmd->add_option("-o,--output", out, "Output file (stdout by default)");

  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::optional<std::size_t> max_len;
  std::string json_out;
  auto* check_cmd = app.add_subcommand("check", "Run a seeded equivalence campaign");
  check_cmd->add_option("--lemma", lemma, "Lemma id, mutant/<name>, or all")->required();
  check_cmd->add_option("--trials", trials, "Number of generated trials");
  check_cmd->add_option("--seed", seed, "Campaign seed");
  check_cmd->add_option("--max-len", max_len, "Maximum generated word length");
  check_cmd->add_option("--json", json_out, "Write the report as JSON");

  double budget = 10;
  auto* falsify_cmd =
      app.add_subcommand("falsify", "Search boundary-biased inputs for a counterexample");
  falsify_cmd->add_option("--lemma", lemma, "Lemma id or mutant/<name>")->required();
  falsify_cmd->add_option("--budget", budget, "Time budget in seconds");
  falsify_cmd->add_option("--seed", seed, "Search seed");
  falsify_cmd->add_option("--json", json_out, "Write the report as JSON");

  CLI11_PARSE(app, argc, argv);
  if (cap) set_word_cap(*cap);

  try {
    if (*eval_cmd) return cmd_eval(file, binds);
    if (*type_cmd) return cmd_type(file);
    if (*run_cmd) return cmd_run(run);
    if (*translate_cmd) return cmd_translate(lemma, k, out);
    if (*check_cmd) {
      std::vector<CheckReport> reports;
      if (lemma == "all") {
        for (const Lemma& l : lemmas()) {
          reports.push_back(check_lemma(l.id, trials, seed, max_len));
        }
      } else {
        reports.push_back(check_lemma(lemma, trials, seed, max_len));
      }
      return finish_reports(reports, json_out);
    }
    if (*falsify_cmd) return finish_reports({falsify_lemma(lemma, budget, seed)}, json_out);
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const TypeError& e) {
    std::cerr << "type error: " << e.what() << "\n";
    return 2;
  } catch (const ResourceExceeded& e) {
    std::cerr << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
