#pragma once

#include <cstdint>
#include <string>

#include <json.hpp>

namespace rlab {

constexpr const char* kReportSchema = "rigiditylab-report";
constexpr int kReportVersion = 1;
constexpr const char* kArtifactVersion = "0.1.0";

// Canonical dump: object keys sorted, floats printed with 17 significant
// digits, non-finite values stored as the strings "inf"/"-inf"/"nan".
std::string canonical_dump(const nlohmann::json& j);

// Wrap a double so it survives JSON (infinities become strings).
nlohmann::json json_number(double v);
double number_from_json(const nlohmann::json& j);

// Stamp schema fields onto a report object.
void stamp_report(nlohmann::json& j, const std::string& experiment_id, uint64_t master_seed);

// Parse + schema validation; unknown versions are rejected.
nlohmann::json load_report(const std::string& text);

// FNV-1a over the canonical dump with the wall clock zeroed; stable across
// runs and platforms for a fixed seed.
std::string content_hash(const nlohmann::json& report);

} // namespace rlab
