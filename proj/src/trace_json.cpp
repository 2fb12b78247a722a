#include "iterwb/trace_json.hpp"

#include <stdexcept>

namespace iterwb {

nlohmann::ordered_json trace_to_json(const IterTrace& trace) {
  nlohmann::ordered_json j;
  j["kind"] = to_string(trace.kind);
  if (trace.budget) {
    j["budget"] = *trace.budget;
  } else {
    j["budget"] = nullptr;
  }
  j["n"] = trace.n;
  j["ell"] = trace.ell;
  auto calls = nlohmann::ordered_json::array();
  for (const TraceCall& call : trace.calls) {
    nlohmann::ordered_json c;
    c["i"] = call.index;
    c["query"] = call.query.bits();
    c["answer"] = call.answer.bits();
    c["revision"] = call.revision;
    calls.push_back(std::move(c));
  }
  j["calls"] = std::move(calls);
  return j;
}

IterTrace trace_from_json(const nlohmann::ordered_json& j) {
  IterTrace trace;
  const std::string kind = j.at("kind").get<std::string>();
  if (kind == "length") {
    trace.kind = RevisionKind::length;
  } else if (kind == "lookahead") {
    trace.kind = RevisionKind::lookahead;
  } else {
    throw std::invalid_argument("unknown trace kind '" + kind + "'");
  }
  if (!j.at("budget").is_null()) trace.budget = j.at("budget").get<std::size_t>();
  trace.n = j.at("n").get<std::size_t>();
  trace.ell = j.at("ell").get<std::size_t>();
  for (const auto& c : j.at("calls")) {
    trace.calls.push_back({c.at("i").get<std::size_t>(),
                           Word(c.at("query").get<std::string>()),
                           Word(c.at("answer").get<std::string>()),
                           c.at("revision").get<bool>()});
  }
  return trace;
}

}  // namespace iterwb
