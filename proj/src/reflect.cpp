#include "iterwb/reflect.hpp"

#include <stdexcept>

#include "iterwb/parser.hpp"
#include "iterwb/typecheck.hpp"

namespace iterwb {
namespace {

constexpr const char* kF1 = "(W->W)";
constexpr const char* kF2 = "(W->W->W)";
constexpr const char* kRec = "((W->W->W)->(W->W)->W->W->W)";
constexpr const char* kRec0 = "((W->W->W)->W->W->W->W)";
constexpr const char* kIter = "((W->W)->W->W->W->W)";
constexpr const char* kIterK = "((W->W)->W->W->W)";
constexpr const char* kScan = "((W->W)->W->W)";

std::string subst(std::string text) {
  auto replace = [&text](std::string_view key, std::string_view value) {
    for (auto pos = text.find(key); pos != std::string::npos;
         pos = text.find(key, pos + value.size())) {
      text.replace(pos, key.size(), value);
    }
  };
  replace("$REC0", kRec0);
  replace("$RECT", kRec);
  replace("$ITERK", kIterK);
  replace("$ITER", kIter);
  replace("$F1", kF1);
  replace("$F2", kF2);
  return text;
}

// argmax(psi, c) = rec0 A c '' c, A d t = d if |psi t| < |psi d| else t.
const char* kArgmaxBody =
    "r0 (\\d:W. \\t:W. cond (shorter (psi t) (psi d)) d t) c '' c";

std::string argmax_text() {
  return std::string("\\r0:$REC0. \\psi:$F1. \\c:W. ") + kArgmaxBody;
}
std::string max_text() {
  return std::string("\\r0:$REC0. \\psi:$F1. \\c:W. psi (") + kArgmaxBody +
         ")";
}
std::string rec_from_rec0_text() {
  return std::string(
             "\\r0:$REC0. \\phi:$F2. \\psi:$F1. \\a:W. \\c:W. "
             "r0 (\\d:W. \\t:W. lmin (phi d t) (psi d)) (cat '0' (psi (") +
         kArgmaxBody + "))) a c";
}

const char* kIterFromRec =
    "\\r:$RECT. \\phi:$F1. \\b:W. \\a:W. \\c:W. "
    "r (\\d:W. \\t:W. phi t) (\\d:W. b) (lmin a b) c";

const char* kRec0pFromIter =
    "\\it:$ITER. \\phi:$F2. \\b:W. \\a:W. \\c:W. "
    "pi2_2 (it (\\p:W. tup2 (app0 (pi2_1 p)) "
    "(lmin (phi (trunc c (app0 (pi2_1 p))) (pi2_2 p)) b)) "
    "(tup2 (zeros c) b) (tup2 '' (lmin a b)) c)";

const char* kRec0FromRec0p =
    "\\rp:$REC0. \\phi:$F2. \\b:W. \\a:W. \\c:W. "
    "cond c (dropl (rp (\\d:W. \\t:W. app1 (phi d (cond t (dropl t) a))) "
    "(app1 b) '' c)) a";

const char* kIterFromJter =
    "\\j:$ITER. \\phi:$F1. \\b:W. \\a:W. \\c:W. lmin (j phi b a c) b";

const char* kJterFromIter =
    "\\it:$ITER. \\phi:$F1. \\b:W. \\a:W. \\c:W. "
    "cond c (phi (it phi b a (dropl c))) a";

const char* kIter0FromIter =
    "\\it:$ITER. \\phi:$F1. \\a:W. \\c:W. "
    "dropl (it (\\s:W. cond (last1 s) s "
    "(cond (shorter a (phi (dropl s))) (app1 (dropl s)) "
    "(app0 (phi (dropl s))))) (app0 (app0 a)) (app0 a) c)";

// Search state 0^m 1 while probing 0^m, 0^(j+1) once probe(0^j) holds.
const char* kSearchCore =
    "(\\r:W. cond (last1 r) r (dropl r)) "
    "(it (\\s:W. cond (last1 s) (cond (probe (dropl s)) (app0 (dropl s)) "
    "(app1 (app0 (dropl s)))) s) (app1 (app1 (app1 c))) "
    "(cond (probe '') '0' '01') c)";

std::string search_text() {
  return std::string("\\it:$ITER. \\probe:$F1. \\c:W. ") + kSearchCore;
}

const char* kAllEmptyViaRec =
    "\\r:$RECT. \\probe:$F1. \\c:W. "
    "r (\\d:W. \\t:W. cond t '0' (cond (probe (zeros d)) '0' '')) "
    "(\\d:W. '0') (cond (probe '') '0' '') c";

std::string iterk_text(std::size_t k) {
  if (k == 0) return kIter0FromIter;
  std::string body =
      std::string("(\\probe:$F1. (\\m:W. cond (shorter m c) "
                  "(base phi (phi (prev phi a m)) (monus c (app0 m))) "
                  "(prev phi a c)) (") +
      kSearchCore +
      ")) (\\q:W. cond (shorter q c) "
      "(eqw (prev phi a q) (prev phi a (app0 q))) '1')";
  return "\\it:$ITER. (\\prev:$ITERK. \\base:$ITERK. \\phi:$F1. \\a:W. "
         "\\c:W. " +
         body + ") ((" + iterk_text(k - 1) + ") it) ((" + kIter0FromIter +
         ") it)";
}

const char* kJterkFromIterk =
    "\\ik:$ITERK. \\phi:$F1. \\a:W. \\c:W. "
    "cond c (phi (ik phi a (dropl c))) a";

const char* kJterFromJterk =
    "\\jk:$ITERK. \\phi:$F1. \\b:W. \\a:W. \\c:W. "
    "cond c (phi (dropl (jk (\\t:W. app1 (lmin (cond (last1 t) "
    "(phi (dropl t)) a) b)) (app0 b) (cat '0' (dropl c))))) a";

Reflection make(std::string_view builder, const char* prim, const char* target,
                const std::string& text) {
  return {std::string(builder), parse_type(subst(prim)),
          parse_type(subst(target)), parse(subst(text))};
}

}  // namespace

const std::vector<std::string>& reflected_builders() {
  static const std::vector<std::string> names = {
      "argmax",          "max",              "rec_from_rec0",
      "iter_from_rec",   "rec0p_from_iter",  "rec0_from_rec0p",
      "iter_from_jter",  "jter_from_iter",   "iter0_from_iter",
      "iterk_from_iter", "jterk_from_iterk", "jter_from_jterk",
      "all_empty_via_rec", "search_via_iter"};
  return names;
}

Reflection reflect(std::string_view builder, std::size_t k) {
  if (builder == "argmax") return make(builder, kRec0, kScan, argmax_text());
  if (builder == "max") return make(builder, kRec0, kScan, max_text());
  if (builder == "rec_from_rec0")
    return make(builder, kRec0, kRec, rec_from_rec0_text());
  if (builder == "iter_from_rec")
    return make(builder, kRec, kIter, kIterFromRec);
  if (builder == "rec0p_from_iter")
    return make(builder, kIter, kRec0, kRec0pFromIter);
  if (builder == "rec0_from_rec0p")
    return make(builder, kRec0, kRec0, kRec0FromRec0p);
  if (builder == "iter_from_jter")
    return make(builder, kIter, kIter, kIterFromJter);
  if (builder == "jter_from_iter")
    return make(builder, kIter, kIter, kJterFromIter);
  if (builder == "iter0_from_iter")
    return make(builder, kIter, kIterK, kIter0FromIter);
  if (builder == "iterk_from_iter")
    return make(builder, kIter, kIterK, iterk_text(k));
  if (builder == "jterk_from_iterk")
    return make(builder, kIterK, kIterK, kJterkFromIterk);
  if (builder == "jter_from_jterk")
    return make(builder, kIterK, kIter, kJterFromJterk);
  if (builder == "all_empty_via_rec")
    return make(builder, kRec, kScan, kAllEmptyViaRec);
  if (builder == "search_via_iter")
    return make(builder, kIter, kScan, search_text());
  throw std::invalid_argument("unknown builder '" + std::string(builder) + "'");
}

std::optional<std::string> closure_violation(const Reflection& r) {
  if (auto fv = free_vars(r.term); !fv.empty()) {
    return "free variable '" + *fv.begin() + "'";
  }
  Type expected = Type::arrow(r.primitive, r.target);
  Type actual = infer_type(r.term);
  if (!(actual == expected)) {
    return "type " + actual.str() + ", expected " + expected.str();
  }
  for (const Constant& c : constants_in(r.term)) {
    if (c.is_primitive()) return "mentions primitive constant " + c.name();
  }
  return std::nullopt;
}

}  // namespace iterwb
