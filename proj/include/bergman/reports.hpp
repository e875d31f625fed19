#pragma once

#include "bergman/operators.hpp"
#include "bergman/thresholds.hpp"

#include <json.hpp>

namespace bergman {

// JSON report schemas. Field names are part of the external interface;
// numbers serialize with shortest-round-trip formatting (locale-free).

nlohmann::json to_json(const SpectrumReport& rep);
nlohmann::json to_json(const ProbeReport& rep);
nlohmann::json to_json(const ThresholdReport& rep);
nlohmann::json to_json(const LaurentSeries& s);

} // namespace bergman
