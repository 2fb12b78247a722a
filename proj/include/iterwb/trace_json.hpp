#pragma once

#include <json.hpp>

#include "iterwb/iterators.hpp"

namespace iterwb {

/// {"kind", "budget", "n", "ell", "calls": [{"i", "query", "answer",
/// "revision"}]}. Words are bare symbol runs; budget is null when absent.
nlohmann::ordered_json trace_to_json(const IterTrace& trace);

/// Inverse of trace_to_json. Throws nlohmann::json::exception or
/// std::invalid_argument on malformed input.
IterTrace trace_from_json(const nlohmann::ordered_json& j);

}  // namespace iterwb
