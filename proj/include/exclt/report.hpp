#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "json.hpp"

#include "exclt/criteria.hpp"
#include "exclt/empirics.hpp"

namespace exclt {

inline constexpr const char* kReportSchemaVersion = "1.0.0";

nlohmann::json verdict_json(const CriterionVerdict& v);

/// Everything except wall-clock data. Identical config and seed give a
/// byte-identical dump regardless of thread count.
nlohmann::json report_payload(const ScenarioReport& rep);

/// Payload plus a "runtime" object (threads, timings).
nlohmann::json report_json(const ScenarioReport& rep);

/// One RFC 4180 field (quoted when needed).
std::string csv_field(const std::string& s);
/// Shortest round-trip decimal form.
std::string csv_number(double v);

std::string cf_csv(const ScenarioReport& rep);
std::string joint_cf_csv(const ScenarioReport& rep);
std::string quantities_csv(const ScenarioReport& rep);

/// Writes <scenario>.report.json, <scenario>.cf.csv, <scenario>.quantities.csv
/// and, when present, <scenario>.joint_cf.csv into `dir`. Returns the paths.
std::vector<std::filesystem::path> write_report(const ScenarioReport& rep,
                                                const std::filesystem::path& dir);

/// Writes text to a file, throwing std::runtime_error on failure.
void write_text(const std::filesystem::path& path, const std::string& text);

}  // namespace exclt
