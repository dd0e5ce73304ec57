#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <string>

#include "support/scenarios.hpp"
#include "uavmec/config.hpp"

using namespace uavmec;

namespace {

bool mentions(const std::vector<std::string>& violations, const std::string& needle) {
  return std::any_of(violations.begin(), violations.end(), [&](const std::string& v) {
    return v.find(needle) != std::string::npos;
  });
}

}  // namespace

TEST_CASE("a well-formed scenario validates cleanly") {
  CHECK(validate_config(testing::make_default_config()).empty());
  CHECK(validate_config(testing::make_hotspot_config()).empty());
  CHECK(validate_config(testing::make_single_service_config()).empty());
}

TEST_CASE("violations name the field and rule") {
  ScenarioConfig cfg = testing::make_default_config();
  cfg.rate_efficiency = 1.2;
  CHECK(mentions(validate_config(cfg), "rate_efficiency not in (0,1)"));

  cfg = testing::make_default_config();
  cfg.uav_configs[1].coverage.x_max = 1200.0;  // past the region edge
  CHECK(mentions(validate_config(cfg), "coverage not contained"));

  cfg = testing::make_default_config();
  cfg.task_gen_prob = -0.5;
  CHECK(mentions(validate_config(cfg), "task_gen_prob"));

  cfg = testing::make_default_config();
  cfg.input_bits_range = {5.0, 1.0};
  CHECK(mentions(validate_config(cfg), "input_bits_range"));

  cfg = testing::make_default_config();
  cfg.uav_configs[0].channels = 0;
  CHECK(mentions(validate_config(cfg), "channels"));

  cfg = testing::make_default_config();
  cfg.uav_configs[0].start = Position{2000.0, 2000.0};
  CHECK(mentions(validate_config(cfg), "start not inside coverage"));
}

TEST_CASE("serialize/parse round trip is value-identical") {
  for (const ScenarioConfig& cfg :
       {testing::make_default_config(), testing::make_hotspot_config(),
        testing::make_single_service_config()}) {
    const std::string text = serialize_scenario(cfg);
    const ScenarioParseResult parsed = parse_scenario(text);
    REQUIRE_MESSAGE(parsed.config.has_value(),
                    (parsed.errors.empty() ? "?" : parsed.errors.front()));
    CHECK(serialize_scenario(*parsed.config) == text);
  }
}

TEST_CASE("optional fields survive the round trip") {
  ScenarioConfig cfg = testing::make_default_config();
  cfg.uav_configs[0].battery_target_j = 42.5;
  cfg.uav_configs[1].start = Position{500.0, 500.0};
  const ScenarioParseResult parsed = parse_scenario(serialize_scenario(cfg));
  REQUIRE(parsed.config.has_value());
  CHECK(parsed.config->uav_configs[0].battery_target_j == 42.5);
  CHECK_FALSE(parsed.config->uav_configs[1].battery_target_j.has_value());
  CHECK(parsed.config->uav_configs[1].start->x == 500.0);
}

TEST_CASE("parse reports missing, unknown, duplicate and malformed keys") {
  const ScenarioParseResult missing = parse_scenario("schema_version = v1\n");
  CHECK_FALSE(missing.config.has_value());
  CHECK(mentions(missing.errors, "slot_length_s: missing required key"));

  std::string text = serialize_scenario(testing::make_default_config());
  const ScenarioParseResult unknown = parse_scenario(text + "mystery_knob = 3\n");
  CHECK_FALSE(unknown.config.has_value());
  CHECK(mentions(unknown.errors, "mystery_knob: unknown key"));

  const ScenarioParseResult dup = parse_scenario(text + "slot_length_s = 5\n");
  CHECK(mentions(dup.errors, "duplicate key"));

  const ScenarioParseResult bad = parse_scenario("schema_version = v1\nslot_length_s = five\n");
  CHECK(mentions(bad.errors, "not a number"));

  const ScenarioParseResult version = parse_scenario("schema_version = v2\n");
  CHECK(mentions(version.errors, "unsupported version"));
}

TEST_CASE("shipped scenario files match the in-code builders") {
  const std::string dir = UAVMEC_SCENARIO_DIR;
  const ScenarioParseResult two_uav = load_scenario(dir + "/two_uav.cfg");
  REQUIRE_MESSAGE(two_uav.config.has_value(),
                  (two_uav.errors.empty() ? "?" : two_uav.errors.front()));
  CHECK(serialize_scenario(*two_uav.config) ==
        serialize_scenario(testing::make_default_config()));

  const ScenarioParseResult hotspot = load_scenario(dir + "/hotspot_drift.cfg");
  REQUIRE(hotspot.config.has_value());
  CHECK(serialize_scenario(*hotspot.config) ==
        serialize_scenario(testing::make_hotspot_config()));

  const ScenarioParseResult compare = load_scenario(dir + "/allocation_compare.cfg");
  REQUIRE(compare.config.has_value());
  CHECK(serialize_scenario(*compare.config) ==
        serialize_scenario(testing::make_compare_config()));

  const ScenarioParseResult sweep = load_scenario(dir + "/sweep_v.cfg");
  REQUIRE(sweep.config.has_value());
  CHECK(serialize_scenario(*sweep.config) ==
        serialize_scenario(testing::make_sweep_config()));
}
