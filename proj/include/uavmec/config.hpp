#pragma once

#include <optional>
#include <string>
#include <vector>

#include "uavmec/types.hpp"

namespace uavmec {

// Flat key-value scenario text, schema "v1". Keys carry units in their names
// and match the ScenarioConfig field names; UAVs are uav.<k>.<field> blocks.
struct ScenarioParseResult {
  std::optional<ScenarioConfig> config;  // set only when errors is empty
  std::vector<std::string> errors;
};

ScenarioParseResult parse_scenario(const std::string& text);
ScenarioParseResult load_scenario(const std::string& path);

// Canonical text form; parse(serialize(cfg)) is value-identical.
std::string serialize_scenario(const ScenarioConfig& cfg);

// Empty iff every type invariant holds. Each violation names the field and
// the rule it breaks; violations are data, not exceptions.
std::vector<std::string> validate_config(const ScenarioConfig& cfg);

}  // namespace uavmec
