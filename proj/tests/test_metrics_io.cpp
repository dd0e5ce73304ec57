#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "support/scenarios.hpp"
#include "uavmec/metrics_io.hpp"

using namespace uavmec;

namespace {

int line_count(const std::string& text) {
  int n = 0;
  for (char c : text)
    if (c == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("zero-slot export is header-only") {
  ScenarioConfig cfg = testing::make_default_config();
  cfg.num_slots = 0;
  const std::string text = render_metrics(run(cfg, Algorithm::Joaodr));
  CHECK(line_count(text) == 1);
  CHECK(text.back() == '\n');
}

TEST_CASE("header names the per-uav columns in order") {
  ScenarioConfig cfg = testing::make_default_config();
  cfg.num_slots = 0;
  const std::string text = render_metrics(run(cfg, Algorithm::Joaodr));
  CHECK(text ==
        "run_id,algorithm,seed,slot,remuneration_cum,utility_cum,"
        "battery_0,battery_1,free_channels_0,free_channels_1,tasks_served_cum\n");
}

TEST_CASE("ten slots export eleven lines with monotone cumulatives") {
  ScenarioConfig cfg = testing::make_default_config();
  cfg.num_slots = 10;
  const RunSummary s = run(cfg, Algorithm::Joaodr);
  const std::string text = render_metrics(s);
  CHECK(line_count(text) == 11);
  for (std::size_t t = 1; t < s.remuneration_cum.size(); ++t) {
    CHECK(s.remuneration_cum[t] >= s.remuneration_cum[t - 1]);
    CHECK(s.utility_cum[t] >= s.utility_cum[t - 1]);
  }
}

TEST_CASE("re-export produces identical bytes") {
  ScenarioConfig cfg = testing::make_default_config();
  cfg.num_slots = 25;
  const RunSummary s = run(cfg, Algorithm::Greedy);
  CHECK(render_metrics(s) == render_metrics(s));

  const std::string path_a = "metrics_io_test_a.csv";
  const std::string path_b = "metrics_io_test_b.csv";
  export_metrics(s, path_a);
  export_metrics(s, path_b);
  const auto slurp = [](const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
  };
  CHECK(slurp(path_a) == slurp(path_b));
  CHECK(slurp(path_a) == render_metrics(s));
  std::remove(path_a.c_str());
  std::remove(path_b.c_str());
}
