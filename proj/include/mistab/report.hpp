#pragma once

#include <json.hpp>

#include "mistab/resolution.hpp"
#include "mistab/stability.hpp"

namespace mistab {

/// JSON document for a stability report. Serialization is stable: object
/// keys sort, generator and prime lists are canonical, and stable_output
/// zeroes the per-power timings so documents can be diffed.
nlohmann::json report_to_json(const StabilityReport& report, bool stable_output = false);

/// Inverse of report_to_json up to timing fields.
StabilityReport report_from_json(const nlohmann::json& doc);

nlohmann::json ideal_to_json(const MonomialIdeal& ideal);
nlohmann::json supports_to_json(const std::vector<PrimeSupport>& supports, const Ring& ring);
nlohmann::json betti_to_json(const BettiTable& table, const Ring& ring);

std::string cert_level_name(CertLevel level);
CertLevel cert_level_from_name(const std::string& name);

} // namespace mistab
