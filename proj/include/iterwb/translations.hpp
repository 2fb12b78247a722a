#pragma once

// Composite functionals that simulate one recursion/iteration primitive with
// another. Each builder takes the supplied primitive as an opaque function and
// wires it together with base word functions only; the result has the
// signature of the target primitive and must agree with its reference
// semantics everywhere.

#include <cstddef>
#include <functional>

#include "iterwb/iterators.hpp"
#include "iterwb/word.hpp"

namespace iterwb {

/// rec(phi, psi, a, c)
using RecFn = std::function<Word(const StepFn2& phi, const StepFn& psi,
                                 const Word& a, const Word& c)>;
/// rec0(phi, b, a, c) and rec0_prime(phi, b, a, c)
using Rec0Fn = std::function<Word(const StepFn2& phi, const Word& b,
                                  const Word& a, const Word& c)>;
/// iter(phi, b, a, c) and jter(phi, b, a, c)
using IterFn = std::function<Word(const StepFn& phi, const Word& b,
                                  const Word& a, const Word& c)>;
/// iter_k(phi, a, c) and jter_k(phi, a, c) at a fixed budget
using IterKFn =
    std::function<Word(const StepFn& phi, const Word& a, const Word& c)>;
/// max(psi, c) and argmax(psi, c)
using ScanFn = std::function<Word(const StepFn& psi, const Word& c)>;

// Reference primitives in builder-compatible form.
RecFn reference_rec();
Rec0Fn reference_rec0();
Rec0Fn reference_rec0_prime();
IterFn reference_iter();
IterFn reference_jter();
IterKFn reference_iter_k(std::size_t k);
IterKFn reference_jter_k(std::size_t k);

/// Length maximum of psi over the initial segments of c, and the shortest
/// segment attaining it, computed by scanning every segment.
Word scan_max(const StepFn& psi, const Word& c);
Word scan_argmax(const StepFn& psi, const Word& c);

struct MaxArgmax {
  ScanFn max;
  ScanFn argmax;
};

/// argmax(psi, c) = rec0(A, c, ε, c) where A(d, t) keeps t unless psi(d) is
/// strictly longer than psi(t); max(psi, c) = psi(argmax(psi, c)).
MaxArgmax max_argmax_via_rec0(Rec0Fn rec0);

/// rec(phi, psi, a, c) = rec0((d, t) |-> lmin(phi(d, t), psi(d)),
///                           0 max(psi, c), a, c)
RecFn rec_from_rec0(Rec0Fn rec0);

/// iter(phi, b, a, c) = rec((d, t) |-> phi(t), d |-> b, lmin(a, b), c)
IterFn iter_from_rec(RecFn rec);

/// Runs iter over pairs <step counter 0^i, value> with bound <0^|c|, b> and
/// start <ε, lmin(a, b)>; the second component is rec0_prime.
Rec0Fn rec0p_from_iter(IterFn iter);

/// One round of the pair iteration above, for inspecting the invariant that
/// after |c'| steps the state is <0^|c'|, rec0_prime(phi, b, a, c')>.
Word rec0p_pair_state(const IterFn& iter, const StepFn2& phi, const Word& b,
                      const Word& a, const Word& c, const Word& steps);

/// rec0 from rec0_prime by tagging: running values carry a trailing 1 and the
/// empty word marks the untouched start value, which the step replaces by a.
Rec0Fn rec0_from_rec0p(Rec0Fn rec0p);

/// iter = lmin(jter(...), b)
IterFn iter_from_jter(IterFn jter);
/// jter(phi, b, a, c'i) = phi(iter(phi, b, a, c')), jter(..., ε) = a
IterFn jter_from_iter(IterFn iter);

/// Budget-0 revision iterator from iter: the running value carries a stop
/// bit (trailing 1 = halted) and the bound a00 never clamps.
IterKFn iter0_from_iter(IterFn iter);

/// ε if probe(0^i) is empty for every i <= |c|, otherwise "0". Built on rec.
Word all_empty_via_rec(const RecFn& rec, const StepFn& probe, const Word& c);

/// 0^j for the least j <= |c| with probe(0^j) nonempty, or the sentinel
/// 0^(|c|+1) 1 when there is none. Built on iter.
Word search_via_iter(const IterFn& iter, const StepFn& probe, const Word& c);

/// Budget-k revision iterator from iter, by induction on k. The k+1 stage
/// locates the stabilization point of the budget-k composite with
/// search_via_iter and finishes with the budget-0 composite after one step.
IterKFn iterk_from_iter(IterFn iter, std::size_t k);

/// jter_k(phi, a, c'i) = phi(iter_k(phi, a, c')), jter_k(..., ε) = a
IterKFn jterk_from_iterk(IterKFn iter_k);

/// jter from jter_k through the flag-bit step psi, which never triggers a
/// lookahead revision, so any budget works.
IterFn jter_from_jterk(IterKFn jter_k);

/// The step psi(t, a, b) of jter_from_jterk, exposed for the intermediate
/// equality jter_k(psi, b0, 0c) = lmin(jter(phi, b, a, c), b) 1.
StepFn jterk_flag_step(const StepFn& phi, const Word& a, const Word& b);

/// Planted defects, one per builder, used to show the campaigns are not
/// vacuous. Several reproduce a construction exactly as first written down
/// before its boundary cases were repaired.
namespace mutants {

/// argmax gadget that keeps d whenever psi(d) is no longer than psi(t).
MaxArgmax max_argmax_inverted_test(Rec0Fn rec0);
/// Bounds rec0 by max(psi, c) without the extra leading symbol.
RecFn rec_from_rec0_unpadded(Rec0Fn rec0);
/// Starts the recursion at a instead of lmin(a, b).
IterFn iter_from_rec_unclamped_start(RecFn rec);
/// Starts the pair iteration at <ε, a>.
Rec0Fn rec0p_from_iter_unclamped_start(IterFn iter);
/// Detects the start value by |t| > 1 on untagged values.
Rec0Fn rec0_from_rec0p_length_test(Rec0Fn rec0p);
/// Omits the final clamp.
IterFn iter_from_jter_unclamped(IterFn jter);
/// Runs iter over all of c instead of c with its last symbol dropped.
IterFn jter_from_iter_full_length(IterFn iter);
/// Uses a as the bound, which clamps away the stop bit.
IterKFn iter0_from_iter_short_bound(IterFn iter);
/// Skips the extra step after the stabilization point.
IterKFn iterk_from_iter_no_step(IterFn iter, std::size_t k);
/// Drops the final application of phi.
IterKFn jterk_from_iterk_no_final_step(IterKFn iter_k);
/// Drops the dispatch on c = ε.
IterFn jter_from_jterk_no_empty_case(IterKFn jter_k);

}  // namespace mutants

}  // namespace iterwb
