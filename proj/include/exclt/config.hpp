#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "exclt/empirics.hpp"

namespace exclt {

/// Invalid configuration. `field` is a JSON-pointer-like path such as
/// /directing/scale_prior/rate; `line` is set for syntax errors.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& message, int line = 0);
  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  std::string field_;
  int line_;
};

/// Reads a JSON file; syntax errors carry the line number.
nlohmann::json load_config_file(const std::string& path);

/// Expands {"scenario": builtin, ...overrides} and parses the result.
ScenarioConfig parse_scenario(const nlohmann::json& doc);

std::vector<std::string> builtin_scenario_names();
/// Throws ConfigError for an unknown name.
nlohmann::json builtin_scenario(const std::string& name);
std::string builtin_description(const std::string& name);

}  // namespace exclt
