#pragma once

// Reference semantics for the bounded recursion and iteration schemes.
//
// Every primitive takes its arguments in the order (step, bound, start,
// length): `b` bounds the values, `a` is the start value and only |c| matters
// for the number of steps (plus its prefixes, for the recursors).

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "iterwb/word.hpp"

namespace iterwb {

using StepFn = std::function<Word(const Word&)>;
/// Two-argument step of the recursors: (current prefix d, previous value t).
using StepFn2 = std::function<Word(const Word& d, const Word& t)>;

enum class RevisionKind { length, lookahead };

struct TraceCall {
  std::size_t index = 0;  // 1-based
  Word query;
  Word answer;
  bool revision = false;

  friend bool operator==(const TraceCall&, const TraceCall&) = default;
};

/// One run of an iteration scheme. `budget` is empty for the budget-free
/// schemes, whose traces always have ell == n.
struct IterTrace {
  RevisionKind kind = RevisionKind::length;
  std::optional<std::size_t> budget;
  std::size_t n = 0;
  std::size_t ell = 0;
  std::vector<TraceCall> calls;

  std::size_t revisions() const;
  friend bool operator==(const IterTrace&, const IterTrace&) = default;
};

struct Traced {
  Word value;
  IterTrace trace;
};

/// phi^n(a), unbounded. Exponential growth is caught by the word cap.
Word iterate(const StepFn& phi, std::size_t n, Word a);

/// Recursion on notation: value at ε is a, value at ci is
/// lmin(phi(ci, t), psi(ci)) where t is the value at c.
Word rec(const StepFn2& phi, const StepFn& psi, const Word& a, const Word& c);

/// rec with the constant bounding function d |-> b.
Word rec0(const StepFn2& phi, const Word& b, const Word& a, const Word& c);

/// rec0 with the start value clamped as well: lmin(a, b) at ε.
Word rec0_prime(const StepFn2& phi, const Word& b, const Word& a,
                const Word& c);

/// (t |-> lmin(phi(t), b))^|c| (lmin(a, b)).
Word iter(const StepFn& phi, const Word& b, const Word& a, const Word& c);

/// (t |-> phi(lmin(t, b)))^|c| (a).
Word jter(const StepFn& phi, const Word& b, const Word& a, const Word& c);

/// iter and jter with a trace of the step calls. Revision flags follow the
/// length (iter) or lookahead (jter) definition; no budget applies.
Traced iter_traced(const StepFn& phi, const Word& b, const Word& a,
                   const Word& c);
Traced jter_traced(const StepFn& phi, const Word& b, const Word& a,
                   const Word& c);

/// Up to n applications of phi starting at a, stopping before the answer
/// that would be length revision number k + 1. A length revision is an answer
/// longer than |a| and every earlier answer.
Traced iterate_length_revisions(std::size_t k, std::size_t n,
                                const StepFn& phi, const Word& a);

/// Up to n applications of phi starting at a, stopping before issuing the
/// query that would be lookahead revision number k + 1. A lookahead revision
/// is a query longer than every earlier query; the first call never counts.
Traced iterate_lookahead_revisions(std::size_t k, std::size_t n,
                                   const StepFn& phi, const Word& a);

/// The k-revision iterator over |c| steps.
inline Traced iter_k(std::size_t k, const StepFn& phi, const Word& a,
                     const Word& c) {
  return iterate_length_revisions(k, c.size(), phi, a);
}

/// The k-lookahead-revision iterator over |c| steps.
inline Traced jter_k(std::size_t k, const StepFn& phi, const Word& a,
                     const Word& c) {
  return iterate_lookahead_revisions(k, c.size(), phi, a);
}

/// Least i <= n such that the budget-k values for i..n all coincide.
/// Computed by brute force over every prefix length.
std::size_t unwind_ell(std::size_t k, std::size_t n, const StepFn& phi,
                       const Word& a);

enum class FastMode {
  /// Restart the tail with start value phi(a); the revision baseline resets.
  literal,
  /// Carry max(|a|, answers so far) through the tail as an accumulator.
  threaded,
};

/// Tail-recursive evaluation of the k-revision iterator over n steps.
Word iter_k_fast(std::size_t k, const StepFn& phi, const Word& a,
                 std::size_t n, FastMode mode);

/// Checks every trace invariant against the step function that produced it.
/// Returns a description of the first violation, if any.
std::optional<std::string> validate_trace(const IterTrace& trace,
                                          const StepFn& phi, const Word& a);

const char* to_string(RevisionKind kind);

}  // namespace iterwb
