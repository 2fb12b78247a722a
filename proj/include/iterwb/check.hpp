#pragma once

// Seeded equivalence campaigns: each lemma id names a set of comparisons
// between a translation and the reference semantics, run on generated inputs.
// Mismatches are shrunk before they are reported.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "iterwb/dsl.hpp"
#include "iterwb/gen.hpp"
#include "iterwb/translations.hpp"

namespace iterwb {

/// One trial's inputs. Each lemma reads only the fields it declares.
struct Inputs {
  DslPtr phi;
  Step2 phi2;
  DslPtr psi;
  Word a;
  Word b;
  Word c;
};

enum class Field { phi, phi2, psi, a, b, c };

nlohmann::ordered_json inputs_to_json(const Inputs& in,
                                      const std::vector<Field>& fields);
/// Fields absent from `j` keep their defaults (id, ε).
Inputs inputs_from_json(const nlohmann::json& j);

/// The builders a campaign exercises; mutants swap one of them out.
struct Builders {
  std::function<MaxArgmax(Rec0Fn)> max_argmax = max_argmax_via_rec0;
  std::function<RecFn(Rec0Fn)> rec_from_rec0 = iterwb::rec_from_rec0;
  std::function<IterFn(RecFn)> iter_from_rec = iterwb::iter_from_rec;
  std::function<Rec0Fn(IterFn)> rec0p_from_iter = iterwb::rec0p_from_iter;
  std::function<Rec0Fn(Rec0Fn)> rec0_from_rec0p = iterwb::rec0_from_rec0p;
  std::function<IterFn(IterFn)> iter_from_jter = iterwb::iter_from_jter;
  std::function<IterFn(IterFn)> jter_from_iter = iterwb::jter_from_iter;
  std::function<IterKFn(IterFn)> iter0_from_iter = iterwb::iter0_from_iter;
  std::function<IterKFn(IterFn, std::size_t)> iterk_from_iter =
      iterwb::iterk_from_iter;
  std::function<IterKFn(IterKFn)> jterk_from_iterk = iterwb::jterk_from_iterk;
  std::function<IterFn(IterKFn)> jter_from_jterk = iterwb::jter_from_jterk;
};

/// Collects the outcome of one trial.
class Recorder {
 public:
  struct Entry {
    std::string check;
    std::string expected;
    std::string actual;
    bool flagged = false;
    std::string kind;  // flagged entries only
  };

  /// A failure unless the two words agree.
  void compare(const std::string& check, const Word& expected,
               const Word& actual);
  /// A failure when `violation` is set.
  void invariant(const std::string& check,
                 const std::optional<std::string>& violation);
  /// A documented discrepancy that does not fail the campaign, recorded only
  /// when the two words differ.
  void flag(const std::string& kind, const std::string& check,
            const Word& expected, const Word& actual);

  const std::vector<Entry>& entries() const noexcept { return entries_; }
  std::size_t comparisons() const noexcept { return comparisons_; }
  std::size_t invariants() const noexcept { return invariants_; }

 private:
  std::vector<Entry> entries_;
  std::size_t comparisons_ = 0;
  std::size_t invariants_ = 0;
};

struct Lemma {
  std::string id;
  std::string description;
  std::vector<Field> fields;
  /// Boundary-biased trials when `boundary` is set.
  std::function<Inputs(Rng&, bool boundary, std::size_t max_len)> generate;
  std::function<void(const Inputs&, const Builders&, Recorder&)> run;
  /// Suggested max_len when the caller does not choose one.
  std::size_t default_max_len = 48;
  /// Hand-picked cases run once per campaign before the generated trials.
  std::vector<Inputs> fixed;
};

/// Lemma ids in campaign order. Ids with a budget suffix (lemma8-iterk:2)
/// restrict a multi-budget campaign to one k.
const std::vector<Lemma>& lemmas();
/// Throws std::invalid_argument for an unknown id.
Lemma find_lemma(const std::string& id);

/// A planted defect and the campaign expected to catch it.
struct Mutant {
  std::string name;
  std::string lemma;
  Builders builders;
};
const std::vector<Mutant>& mutants_table();
/// Accepts "mutant/<name>" ids; returns nullopt for other ids.
std::optional<Mutant> find_mutant(const std::string& id);

struct Minimized {
  Inputs inputs;
  std::string expected;
  std::string actual;
};

struct Finding {
  std::string trial;  // trial index, or "fixed-N" for a built-in case
  std::string check;
  std::string kind;  // empty for failures
  Inputs inputs;
  std::string expected;
  std::string actual;
  std::optional<Minimized> minimized;
};

struct CheckReport {
  std::string lemma;
  std::string mode;  // "check" or "falsify"
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t max_len = 0;
  std::vector<Field> fields;
  std::map<std::string, std::size_t> comparisons;
  std::size_t failure_count = 0;
  /// Invariant checks run (trace validations and the like) and how many of
  /// them failed; both are included in the totals above.
  std::size_t invariant_checks = 0;
  std::size_t invariant_failures = 0;
  std::vector<Finding> failures;  // first few, shrunk
  std::map<std::string, std::size_t> flagged_counts;
  std::vector<Finding> flagged;  // first few per kind; the first one shrunk
  double wall_seconds = 0;       // text rendering only

  bool passed() const noexcept { return failure_count == 0; }
};

struct CheckOptions {
  std::size_t trials = 1000;
  std::uint64_t seed = 42;
  std::optional<std::size_t> max_len;
  /// Stop after the first failing trial.
  bool stop_at_first_failure = false;
  /// Fraction of boundary-biased trials, in percent.
  unsigned boundary_percent = 50;
  /// Stop once this many seconds have elapsed (falsify).
  std::optional<double> time_budget;
};

CheckReport run_campaign(const Lemma& lemma, const Builders& builders,
                         const CheckOptions& options, std::string mode);

/// Seeded campaign with half boundary-biased trials. `id` may name a mutant.
CheckReport check_lemma(const std::string& id, std::size_t trials,
                        std::uint64_t seed, std::optional<std::size_t> max_len = {});

/// All-boundary search that stops at the first failure or when the budget is
/// spent.
CheckReport falsify_lemma(const std::string& id, double budget_seconds,
                          std::uint64_t seed = 1);

/// Greedy shrinking of the inputs of a failing (or flagged) trial while the
/// same check keeps failing. Returns nothing if the inputs do not reproduce.
std::optional<Minimized> shrink(const Lemma& lemma, const Builders& builders,
                                const Inputs& inputs, const std::string& check,
                                bool flagged);

/// Replays a trial and reports whether `check` still fails (or is flagged).
bool reproduces(const Lemma& lemma, const Builders& builders,
                const Inputs& inputs, const std::string& check, bool flagged);

/// Canonical JSON; excludes wall time so equal seeds give equal bytes.
nlohmann::ordered_json report_to_json(const CheckReport& r);
std::string report_to_text(const CheckReport& r);

/// Table of one trace (call index, |query|, |answer|, revision flag, baseline
/// before the call) followed by its JSON form. `a` is the start value.
std::string trace_report(const IterTrace& trace, const Word& a);

}  // namespace iterwb
