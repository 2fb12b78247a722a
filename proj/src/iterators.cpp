#include "iterwb/iterators.hpp"

#include <algorithm>

#include "iterwb/resource.hpp"

namespace iterwb {

std::size_t IterTrace::revisions() const {
  return static_cast<std::size_t>(
      std::count_if(calls.begin(), calls.end(),
                    [](const TraceCall& call) { return call.revision; }));
}

const char* to_string(RevisionKind kind) {
  return kind == RevisionKind::length ? "length" : "lookahead";
}

Word iterate(const StepFn& phi, std::size_t n, Word a) {
  guard(a);
  for (std::size_t i = 0; i < n; ++i) a = guard(phi(a));
  return a;
}

Word rec(const StepFn2& phi, const StepFn& psi, const Word& a,
         const Word& c) {
  Word t = a;
  for (std::size_t i = 1; i <= c.size(); ++i) {
    Word prefix = truncate(c, repeat(Sym::zero, i));
    t = lmin(guard(phi(prefix, t)), guard(psi(prefix)));
  }
  return t;
}

Word rec0(const StepFn2& phi, const Word& b, const Word& a, const Word& c) {
  return rec(phi, [&b](const Word&) { return b; }, a, c);
}

Word rec0_prime(const StepFn2& phi, const Word& b, const Word& a,
                const Word& c) {
  Word t = lmin(a, b);
  for (std::size_t i = 1; i <= c.size(); ++i) {
    t = lmin(guard(phi(truncate(c, repeat(Sym::zero, i)), t)), b);
  }
  return t;
}

Word iter(const StepFn& phi, const Word& b, const Word& a, const Word& c) {
  return iter_traced(phi, b, a, c).value;
}

Word jter(const StepFn& phi, const Word& b, const Word& a, const Word& c) {
  return jter_traced(phi, b, a, c).value;
}

Traced iter_traced(const StepFn& phi, const Word& b, const Word& a,
                   const Word& c) {
  IterTrace trace{RevisionKind::length, std::nullopt, c.size(), c.size(), {}};
  Word t = lmin(a, b);
  std::size_t baseline = a.size();
  for (std::size_t i = 1; i <= c.size(); ++i) {
    Word answer = guard(phi(t));
    bool revision = answer.size() > baseline;
    baseline = std::max(baseline, answer.size());
    Word next = lmin(answer, b);
    trace.calls.push_back({i, std::move(t), std::move(answer), revision});
    t = std::move(next);
  }
  return {std::move(t), std::move(trace)};
}

Traced jter_traced(const StepFn& phi, const Word& b, const Word& a,
                   const Word& c) {
  IterTrace trace{RevisionKind::lookahead, std::nullopt, c.size(), c.size(),
                  {}};
  Word t = a;
  std::size_t longest_query = 0;
  for (std::size_t i = 1; i <= c.size(); ++i) {
    Word query = lmin(t, b);
    bool revision = i >= 2 && query.size() > longest_query;
    longest_query = std::max(longest_query, query.size());
    Word answer = guard(phi(query));
    t = answer;
    trace.calls.push_back({i, std::move(query), std::move(answer), revision});
  }
  return {std::move(t), std::move(trace)};
}

Traced iterate_length_revisions(std::size_t k, std::size_t n,
                                const StepFn& phi, const Word& a) {
  IterTrace trace{RevisionKind::length, k, n, 0, {}};
  Word t = guard(a);
  std::size_t baseline = a.size();
  std::size_t spent = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    Word answer = guard(phi(t));
    bool revision = answer.size() > baseline;
    if (revision) {
      // The overdrawing call is undone: its answer is discarded.
      if (spent == k) break;
      ++spent;
      baseline = answer.size();
    }
    trace.calls.push_back({i, t, answer, revision});
    t = std::move(answer);
  }
  trace.ell = trace.calls.size();
  return {std::move(t), std::move(trace)};
}

Traced iterate_lookahead_revisions(std::size_t k, std::size_t n,
                                   const StepFn& phi, const Word& a) {
  IterTrace trace{RevisionKind::lookahead, k, n, 0, {}};
  Word t = guard(a);
  std::size_t longest_query = a.size();
  std::size_t spent = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    bool revision = i >= 2 && t.size() > longest_query;
    if (revision) {
      // The offending query is never issued.
      if (spent == k) break;
      ++spent;
      longest_query = t.size();
    }
    Word answer = guard(phi(t));
    trace.calls.push_back({i, t, answer, revision});
    t = std::move(answer);
  }
  trace.ell = trace.calls.size();
  return {std::move(t), std::move(trace)};
}

std::size_t unwind_ell(std::size_t k, std::size_t n, const StepFn& phi,
                       const Word& a) {
  std::vector<Word> values;
  values.reserve(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    values.push_back(iterate_length_revisions(k, i, phi, a).value);
  }
  std::size_t ell = n;
  while (ell > 0 && values[ell - 1] == values[n]) {
    // values[ell..n] all equal values[n]; extend the run leftwards.
    --ell;
  }
  return ell;
}

Word iter_k_fast(std::size_t k, const StepFn& phi, const Word& a,
                 std::size_t n, FastMode mode) {
  Word t = guard(a);
  std::size_t budget = k;
  std::size_t baseline = a.size();
  for (; n > 0; --n) {
    Word answer = guard(phi(t));
    if (mode == FastMode::literal) baseline = t.size();
    if (answer.size() > baseline) {
      if (budget == 0) return t;
      --budget;
    }
    baseline = std::max(baseline, answer.size());
    t = std::move(answer);
  }
  return t;
}

std::optional<std::string> validate_trace(const IterTrace& trace,
                                          const StepFn& phi, const Word& a) {
  auto fail = [](std::string msg) { return std::optional<std::string>(msg); };
  if (trace.ell != trace.calls.size()) return fail("ell differs from |calls|");
  if (trace.ell > trace.n) return fail("ell exceeds n");
  if (!trace.budget && trace.ell != trace.n) {
    return fail("budget-free trace with ell != n");
  }
  if (trace.budget && trace.revisions() > *trace.budget) {
    return fail("revision count exceeds budget");
  }

  std::size_t baseline = a.size();
  std::size_t longest_query = 0;
  Word expected_query = a;
  for (std::size_t i = 0; i < trace.calls.size(); ++i) {
    const TraceCall& call = trace.calls[i];
    if (call.index != i + 1) return fail("call indices are not 1..ell");
    // Budget-free jter clamps its queries, so chaining is only checked for
    // the unclamped schemes.
    if (trace.budget && call.query != expected_query) {
      return fail("call " + std::to_string(call.index) +
                  " query is not the previous answer");
    }
    if (phi(call.query) != call.answer) {
      return fail("call " + std::to_string(call.index) +
                  " answer differs from phi(query)");
    }
    bool expect;
    if (trace.kind == RevisionKind::length) {
      expect = call.answer.size() > baseline;
      baseline = std::max(baseline, call.answer.size());
    } else {
      expect = i >= 1 && call.query.size() > longest_query;
      longest_query = std::max(longest_query, call.query.size());
    }
    if (expect != call.revision) {
      return fail("call " + std::to_string(call.index) +
                  " has a wrong revision flag");
    }
    expected_query = call.answer;
  }

  if (trace.budget && trace.ell < trace.n) {
    // Maximality: the next call would have been revision number k + 1.
    if (trace.revisions() != *trace.budget) {
      return fail("stopped early with unspent budget");
    }
    bool next_is_revision;
    if (trace.kind == RevisionKind::length) {
      next_is_revision = phi(expected_query).size() > baseline;
    } else {
      next_is_revision =
          trace.ell >= 1 && expected_query.size() > longest_query;
    }
    if (!next_is_revision) return fail("stopped although the next call fits");
  }
  return std::nullopt;
}

}  // namespace iterwb
