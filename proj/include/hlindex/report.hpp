#pragma once

#include <string>

#include "json.hpp"

#include "hlindex/analysis.hpp"
#include "hlindex/partition.hpp"
#include "hlindex/spectral.hpp"

namespace hlindex {

// Stable report schema. Field names are part of the CLI's --json contract.
nlohmann::json to_json(const Spectrum& s);
nlohmann::json to_json(const HLResult& r);
nlohmann::json to_json(const InterlacingReport& r);
nlohmann::json to_json(const Inequality& q);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const WindowReport& r);
nlohmann::json to_json(const BallPackingReport& r);
nlohmann::json to_json(const ConversePackingReport& r);
nlohmann::json to_json(const ExtremalReport& r);
nlohmann::json to_json(const ConjectureScanReport& r);
nlohmann::json to_json(const CertificateCheck& c);
nlohmann::json to_json(const Certificate& c);

/// Serializes with every floating-point number at 17 significant digits.
/// Object keys keep insertion order from the to_json overloads (sorted).
std::string dump_json(const nlohmann::json& j, int indent = 2);

}  // namespace hlindex
