#pragma once

#include <string>

#include "json.hpp"

#include "avoid/search.hpp"
#include "avoid/verify.hpp"

namespace avoid {

nlohmann::json to_json(const AvoidanceTable& t);
nlohmann::json to_json(const GrowthVerdict& v);
nlohmann::json to_json(const CertificateSection& s);
nlohmann::json to_json(const EssentialReport& r);

// length,count rows followed by summary lines.
std::string table_csv(const AvoidanceTable& t);

nlohmann::json report_envelope(const std::string& command, nlohmann::json result,
                               double wall_ms);

}  // namespace avoid
