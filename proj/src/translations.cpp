#include "iterwb/translations.hpp"

#include <array>
#include <utility>

namespace iterwb {
namespace {

Word app0(const Word& w) { return append_sym(w, Sym::zero); }
Word app1(const Word& w) { return append_sym(w, Sym::one); }
bool last_is_one(const Word& w) { return !w.empty() && w.back() == Sym::one; }

Word pair(const Word& x, const Word& y) {
  std::array<Word, 2> parts{x, y};
  return tuple(parts);
}

const Word kZero("0");
const Word kOne("1");

/// Shortest-segment argmax through rec0, with a pluggable replacement test.
template <typename Keep>
ScanFn argmax_with(Rec0Fn rec0, Keep keep_d) {
  return [rec0 = std::move(rec0), keep_d](const StepFn& psi, const Word& c) {
    StepFn2 a_gadget = [&psi, keep_d](const Word& d, const Word& t) {
      return keep_d(psi(d), psi(t)) ? d : t;
    };
    return rec0(a_gadget, c, Word(), c);
  };
}

MaxArgmax from_argmax(ScanFn argmax) {
  ScanFn max = [argmax](const StepFn& psi, const Word& c) {
    return psi(argmax(psi, c));
  };
  return {std::move(max), std::move(argmax)};
}

StepFn pair_step(const StepFn2& phi, const Word& b, const Word& c) {
  return [&phi, b, c](const Word& p) {
    Word u = project(p, 2, 1);
    Word v = project(p, 2, 2);
    Word next = app0(u);
    return pair(next, lmin(phi(truncate(c, next), v), b));
  };
}

Word pair_iteration(const IterFn& iter, const StepFn2& phi, const Word& b,
                    const Word& start, const Word& c, const Word& steps) {
  return iter(pair_step(phi, b, c), pair(zeros(c), b), pair(Word(), start),
              steps);
}

/// Stop-bit step: halted states (trailing 1) are fixed points; a running
/// state t0 advances to phi(t)0 unless the answer would be a revision, in
/// which case it halts as t1.
StepFn stop_bit_step(const StepFn& phi, const Word& a) {
  return [&phi, a](const Word& s) {
    if (last_is_one(s)) return s;
    Word t = drop_last(s);
    Word y = phi(t);
    if (y.size() <= a.size()) return app0(y);
    return app1(t);
  };
}

IterKFn iter0_with_bound(IterFn iter, bool short_bound) {
  return [iter = std::move(iter), short_bound](const StepFn& phi, const Word& a,
                                               const Word& c) {
    Word start = app0(a);
    Word bound = short_bound ? a : app0(start);
    return drop_last(iter(stop_bit_step(phi, a), bound, start, c));
  };
}

IterKFn iterk_stage(IterFn iter, std::size_t k, bool take_step) {
  IterKFn base = iter0_from_iter(iter);
  if (k == 0) return base;
  IterKFn prev = iterk_from_iter(iter, k - 1);
  return [iter = std::move(iter), base = std::move(base), prev = std::move(prev),
          take_step](const StepFn& phi, const Word& a, const Word& c) {
    // Stable at i: i = |c|, or the budget-k values at i and i+1 agree.
    StepFn probe = [&](const Word& q) {
      if (q.size() >= c.size()) return kOne;
      return same_word(prev(phi, a, q), prev(phi, a, app0(q)));
    };
    Word m = search_via_iter(iter, probe, c);
    if (last_is_one(m) || m.size() >= c.size()) return prev(phi, a, c);
    Word y = prev(phi, a, m);
    if (take_step) y = phi(y);
    return base(phi, y, monus(c, app0(m)));
  };
}

}  // namespace

RecFn reference_rec() {
  return [](const StepFn2& phi, const StepFn& psi, const Word& a,
            const Word& c) { return rec(phi, psi, a, c); };
}
Rec0Fn reference_rec0() {
  return [](const StepFn2& phi, const Word& b, const Word& a, const Word& c) {
    return rec0(phi, b, a, c);
  };
}
Rec0Fn reference_rec0_prime() {
  return [](const StepFn2& phi, const Word& b, const Word& a, const Word& c) {
    return rec0_prime(phi, b, a, c);
  };
}
IterFn reference_iter() {
  return [](const StepFn& phi, const Word& b, const Word& a, const Word& c) {
    return iter(phi, b, a, c);
  };
}
IterFn reference_jter() {
  return [](const StepFn& phi, const Word& b, const Word& a, const Word& c) {
    return jter(phi, b, a, c);
  };
}
IterKFn reference_iter_k(std::size_t k) {
  return [k](const StepFn& phi, const Word& a, const Word& c) {
    return iter_k(k, phi, a, c).value;
  };
}
IterKFn reference_jter_k(std::size_t k) {
  return [k](const StepFn& phi, const Word& a, const Word& c) {
    return jter_k(k, phi, a, c).value;
  };
}

Word scan_argmax(const StepFn& psi, const Word& c) {
  Word best;
  std::size_t best_len = psi(best).size();
  for (std::size_t i = 1; i <= c.size(); ++i) {
    Word d = truncate(c, repeat(Sym::zero, i));
    std::size_t len = psi(d).size();
    if (len > best_len) {
      best = d;
      best_len = len;
    }
  }
  return best;
}

Word scan_max(const StepFn& psi, const Word& c) {
  return psi(scan_argmax(psi, c));
}

MaxArgmax max_argmax_via_rec0(Rec0Fn rec0) {
  return from_argmax(argmax_with(
      std::move(rec0),
      [](const Word& at_d, const Word& at_t) { return at_t.size() < at_d.size(); }));
}

RecFn rec_from_rec0(Rec0Fn rec0) {
  ScanFn max = max_argmax_via_rec0(rec0).max;
  return [rec0 = std::move(rec0), max = std::move(max)](
             const StepFn2& phi, const StepFn& psi, const Word& a,
             const Word& c) {
    StepFn2 step = [&](const Word& d, const Word& t) {
      return lmin(phi(d, t), psi(d));
    };
    return rec0(step, concat(kZero, max(psi, c)), a, c);
  };
}

IterFn iter_from_rec(RecFn rec) {
  return [rec = std::move(rec)](const StepFn& phi, const Word& b, const Word& a,
                                const Word& c) {
    StepFn2 step = [&phi](const Word&, const Word& t) { return phi(t); };
    StepFn bound = [&b](const Word&) { return b; };
    return rec(step, bound, lmin(a, b), c);
  };
}

Word rec0p_pair_state(const IterFn& iter, const StepFn2& phi, const Word& b,
                      const Word& a, const Word& c, const Word& steps) {
  return pair_iteration(iter, phi, b, lmin(a, b), c, steps);
}

Rec0Fn rec0p_from_iter(IterFn iter) {
  return [iter = std::move(iter)](const StepFn2& phi, const Word& b,
                                  const Word& a, const Word& c) {
    return project(pair_iteration(iter, phi, b, lmin(a, b), c, c), 2, 2);
  };
}

Rec0Fn rec0_from_rec0p(Rec0Fn rec0p) {
  return [rec0p = std::move(rec0p)](const StepFn2& phi, const Word& b,
                                    const Word& a, const Word& c) {
    if (c.empty()) return a;
    StepFn2 tagged = [&](const Word& d, const Word& t) {
      return app1(phi(d, t.empty() ? a : drop_last(t)));
    };
    return drop_last(rec0p(tagged, app1(b), Word(), c));
  };
}

IterFn iter_from_jter(IterFn jter) {
  return [jter = std::move(jter)](const StepFn& phi, const Word& b,
                                  const Word& a, const Word& c) {
    return lmin(jter(phi, b, a, c), b);
  };
}

IterFn jter_from_iter(IterFn iter) {
  return [iter = std::move(iter)](const StepFn& phi, const Word& b,
                                  const Word& a, const Word& c) {
    if (c.empty()) return a;
    return phi(iter(phi, b, a, drop_last(c)));
  };
}

IterKFn iter0_from_iter(IterFn iter) {
  return iter0_with_bound(std::move(iter), false);
}

Word all_empty_via_rec(const RecFn& rec, const StepFn& probe, const Word& c) {
  StepFn2 step = [&probe](const Word& d, const Word& t) {
    if (!t.empty() || !probe(zeros(d)).empty()) return kZero;
    return Word();
  };
  StepFn bound = [](const Word&) { return kZero; };
  Word start = probe(Word()).empty() ? Word() : kZero;
  return rec(step, bound, start, c);
}

Word search_via_iter(const IterFn& iter, const StepFn& probe, const Word& c) {
  // Searching state 0^m 1 (next query 0^m); found state 0^(j+1).
  StepFn next = [&probe](const Word& s) {
    if (!last_is_one(s)) return s;
    Word q = drop_last(s);
    return probe(q).empty() ? app1(app0(q)) : app0(q);
  };
  Word start = probe(Word()).empty() ? Word("01") : kZero;
  Word bound = app1(app1(app1(c)));
  Word r = iter(next, bound, start, c);
  return last_is_one(r) ? r : drop_last(r);
}

IterKFn iterk_from_iter(IterFn iter, std::size_t k) {
  return iterk_stage(std::move(iter), k, true);
}

IterKFn jterk_from_iterk(IterKFn iter_k) {
  return [iter_k = std::move(iter_k)](const StepFn& phi, const Word& a,
                                      const Word& c) {
    if (c.empty()) return a;
    return phi(iter_k(phi, a, drop_last(c)));
  };
}

StepFn jterk_flag_step(const StepFn& phi, const Word& a, const Word& b) {
  return [&phi, a, b](const Word& t) {
    if (last_is_one(t)) return app1(lmin(phi(drop_last(t)), b));
    return app1(lmin(a, b));
  };
}

IterFn jter_from_jterk(IterKFn jter_k) {
  return [jter_k = std::move(jter_k)](const StepFn& phi, const Word& b,
                                      const Word& a, const Word& c) {
    if (c.empty()) return a;
    Word r = jter_k(jterk_flag_step(phi, a, b), app0(b),
                    concat(kZero, drop_last(c)));
    return phi(drop_last(r));
  };
}

namespace mutants {

MaxArgmax max_argmax_inverted_test(Rec0Fn rec0) {
  return from_argmax(argmax_with(
      std::move(rec0),
      [](const Word& at_d, const Word& at_t) { return at_d.size() <= at_t.size(); }));
}

RecFn rec_from_rec0_unpadded(Rec0Fn rec0) {
  ScanFn max = max_argmax_via_rec0(rec0).max;
  return [rec0 = std::move(rec0), max = std::move(max)](
             const StepFn2& phi, const StepFn& psi, const Word& a,
             const Word& c) {
    StepFn2 step = [&](const Word& d, const Word& t) {
      return lmin(phi(d, t), psi(d));
    };
    return rec0(step, max(psi, c), a, c);
  };
}

IterFn iter_from_rec_unclamped_start(RecFn rec) {
  return [rec = std::move(rec)](const StepFn& phi, const Word& b, const Word& a,
                                const Word& c) {
    StepFn2 step = [&phi](const Word&, const Word& t) { return phi(t); };
    StepFn bound = [&b](const Word&) { return b; };
    return rec(step, bound, a, c);
  };
}

Rec0Fn rec0p_from_iter_unclamped_start(IterFn iter) {
  return [iter = std::move(iter)](const StepFn2& phi, const Word& b,
                                  const Word& a, const Word& c) {
    return project(pair_iteration(iter, phi, b, a, c, c), 2, 2);
  };
}

Rec0Fn rec0_from_rec0p_length_test(Rec0Fn rec0p) {
  return [rec0p = std::move(rec0p)](const StepFn2& phi, const Word& b,
                                    const Word& a, const Word& c) {
    if (c.empty()) return a;
    StepFn2 step = [&](const Word& d, const Word& t) {
      return t.size() > 1 ? phi(d, t) : phi(d, a);
    };
    return rec0p(step, b, a, c);
  };
}

IterFn iter_from_jter_unclamped(IterFn jter) { return jter; }

IterFn jter_from_iter_full_length(IterFn iter) {
  return [iter = std::move(iter)](const StepFn& phi, const Word& b,
                                  const Word& a, const Word& c) {
    if (c.empty()) return a;
    return phi(iter(phi, b, a, c));
  };
}

IterKFn iter0_from_iter_short_bound(IterFn iter) {
  return iter0_with_bound(std::move(iter), true);
}

IterKFn iterk_from_iter_no_step(IterFn iter, std::size_t k) {
  return iterk_stage(std::move(iter), k, false);
}

IterKFn jterk_from_iterk_no_final_step(IterKFn iter_k) {
  return [iter_k = std::move(iter_k)](const StepFn& phi, const Word& a,
                                      const Word& c) {
    if (c.empty()) return a;
    return iter_k(phi, a, drop_last(c));
  };
}

IterFn jter_from_jterk_no_empty_case(IterKFn jter_k) {
  return [jter_k = std::move(jter_k)](const StepFn& phi, const Word& b,
                                      const Word& a, const Word& c) {
    Word r = jter_k(jterk_flag_step(phi, a, b), app0(b),
                    concat(kZero, drop_last(c)));
    return phi(drop_last(r));
  };
}

}  // namespace mutants

}  // namespace iterwb
