#pragma once

#include <json.hpp>

#include "markovcast/error.hpp"
#include "markovcast/eval.hpp"
#include "markovcast/markov.hpp"
#include "markovcast/multiscale.hpp"
#include "markovcast/quantizer.hpp"

namespace markovcast {

nlohmann::json to_json(const Quantizer& q);
/// Throws parse_error on a malformed document, contract_error on an invalid one.
Quantizer quantizer_from_json(const nlohmann::json& doc);

/// History tuple -> next-state counts, for every history length.
nlohmann::json to_json(const TransitionTable& table);

/// Per-level states, seeds, quantizers, bifurcations and the effective horizon.
nlohmann::json diagnostics_json(const ForecastResult& result);

nlohmann::json to_json(const QuantizationReport& report);

/// {code, message, context}
nlohmann::json error_json(const Error& error);

} // namespace markovcast
