#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "uavmec/config.hpp"
#include "uavmec/deployment.hpp"
#include "uavmec/metrics_io.hpp"
#include "uavmec/sim.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfigError = 1;
constexpr int kExitRuntimeError = 2;

struct CommonOptions {
  std::string config_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int slots = -1;
  std::string out_dir = ".";
  bool serial = false;
};

uavmec::ExecPolicy policy_of(const CommonOptions& opt) {
  return opt.serial ? uavmec::ExecPolicy::Serial : uavmec::ExecPolicy::Parallel;
}

// Loads, applies overrides, validates; prints each violation on failure.
std::optional<uavmec::ScenarioConfig> load_config(const CommonOptions& opt) {
  uavmec::ScenarioParseResult parsed = uavmec::load_scenario(opt.config_path);
  if (!parsed.config) {
    for (const std::string& e : parsed.errors) std::fprintf(stderr, "config error: %s\n", e.c_str());
    return std::nullopt;
  }
  uavmec::ScenarioConfig cfg = *parsed.config;
  if (opt.seed_set) cfg.rng_seed = opt.seed;
  if (opt.slots >= 0) cfg.num_slots = opt.slots;
  const std::vector<std::string> violations = uavmec::validate_config(cfg);
  if (!violations.empty()) {
    for (const std::string& v : violations) std::fprintf(stderr, "config error: %s\n", v.c_str());
    return std::nullopt;
  }
  return cfg;
}

std::string metrics_path(const CommonOptions& opt, const std::string& algo, std::uint64_t seed) {
  return (std::filesystem::path(opt.out_dir) /
          ("metrics_" + algo + "_s" + std::to_string(seed) + ".csv"))
      .string();
}

int run_one(const uavmec::ScenarioConfig& cfg, uavmec::Algorithm algo, const CommonOptions& opt) {
  const uavmec::RunSummary summary = uavmec::run(cfg, algo, policy_of(opt));
  std::filesystem::create_directories(opt.out_dir);
  const std::string path = metrics_path(opt, summary.algorithm, summary.seed);
  uavmec::export_metrics(summary, path);
  std::printf("%s seed=%llu slots=%d remuneration=%.6g time_avg_utility=%.6g served=%ld -> %s\n",
              summary.algorithm.c_str(), static_cast<unsigned long long>(summary.seed),
              cfg.num_slots, summary.total_remuneration, summary.time_avg_utility,
              [&] {
                long n = 0;
                for (const auto& s : summary.slots) n += s.tasks_served;
                return n;
              }(),
              path.c_str());
  if (summary.invariants.total() != 0) {
    std::fprintf(stderr, "invariant violations detected in %s\n", summary.run_id.c_str());
    return kExitRuntimeError;
  }
  return kExitOk;
}

std::vector<std::string> split_csv(const std::string& text) {
  std::vector<std::string> parts;
  std::size_t begin = 0;
  while (begin <= text.size()) {
    const std::size_t comma = text.find(',', begin);
    if (comma == std::string::npos) {
      parts.push_back(text.substr(begin));
      break;
    }
    parts.push_back(text.substr(begin, comma - begin));
    begin = comma + 1;
  }
  return parts;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"UAV-assisted edge computing simulator and deployment optimizer"};
  app.require_subcommand(1);

  CommonOptions opt;
  std::string algo_name = "joaodr";
  std::string values_csv = "0.5,1,2,4,8";
  std::string algos_csv = "joaodr,greedy";
  int num_seeds = 1;
  std::string plan_out = "plan.csv";

  const auto add_common = [&](CLI::App* cmd, bool with_algo) {
    cmd->add_option("--config", opt.config_path, "scenario file")->required();
    cmd->add_option("--seed", opt.seed, "rng seed override")
        ->each([&](const std::string&) { opt.seed_set = true; });
    cmd->add_option("--slots", opt.slots, "horizon override");
    cmd->add_option("--out", opt.out_dir, "output directory");
    cmd->add_flag("--serial", opt.serial, "use the serial reference kernels");
    if (with_algo)
      cmd->add_option("--algo", algo_name, "joaodr | greedy | fixed-deploy");
  };

  CLI::App* cmd_run = app.add_subcommand("run", "simulate one algorithm and export metrics");
  add_common(cmd_run, true);

  CLI::App* cmd_sweep = app.add_subcommand("sweep-v", "time-average utility across control V");
  add_common(cmd_sweep, false);
  cmd_sweep->add_option("--values", values_csv, "comma-separated V values");
  cmd_sweep->add_option("--seeds", num_seeds, "seeds per value (seed, seed+1, ...)");

  CLI::App* cmd_compare = app.add_subcommand("compare", "run several algorithms on shared seeds");
  add_common(cmd_compare, false);
  cmd_compare->add_option("--algos", algos_csv, "comma-separated algorithm list");
  cmd_compare->add_option("--seeds", num_seeds, "seeds per algorithm (seed, seed+1, ...)");

  CLI::App* cmd_plan = app.add_subcommand("plan", "emit the planned deployment trajectory");
  add_common(cmd_plan, false);
  cmd_plan->add_option("--plan-out", plan_out, "trajectory file (slot, uav_id, x, y)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? kExitOk : kExitConfigError;
  }

  try {
    const auto cfg = load_config(opt);
    if (!cfg) return kExitConfigError;

    if (cmd_run->parsed()) {
      const auto algo = uavmec::parse_algorithm(algo_name);
      if (!algo) {
        std::fprintf(stderr, "config error: unknown algorithm '%s'\n", algo_name.c_str());
        return kExitConfigError;
      }
      return run_one(*cfg, *algo, opt);
    }

    if (cmd_sweep->parsed()) {
      std::filesystem::create_directories(opt.out_dir);
      const std::string path =
          (std::filesystem::path(opt.out_dir) / "sweep_v.csv").string();
      std::string body = "v,seeds,time_avg_utility,final_remuneration\n";
      for (const std::string& token : split_csv(values_csv)) {
        const double v = std::stod(token);
        double utility = 0.0, remuneration = 0.0;
        for (int k = 0; k < num_seeds; ++k) {
          uavmec::ScenarioConfig c = *cfg;
          c.control_v = v;
          c.rng_seed = cfg->rng_seed + static_cast<std::uint64_t>(k);
          const uavmec::RunSummary s = uavmec::run(c, uavmec::Algorithm::Joaodr, policy_of(opt));
          utility += s.time_avg_utility;
          remuneration += s.total_remuneration;
        }
        char line[160];
        std::snprintf(line, sizeof(line), "%.9g,%d,%.9g,%.9g\n", v, num_seeds,
                      utility / num_seeds, remuneration / num_seeds);
        body += line;
        std::printf("V=%g mean time_avg_utility=%.6g\n", v, utility / num_seeds);
      }
      std::FILE* f = std::fopen(path.c_str(), "wb");
      if (!f) throw std::runtime_error("cannot open " + path);
      std::fwrite(body.data(), 1, body.size(), f);
      std::fclose(f);
      std::printf("wrote %s\n", path.c_str());
      return kExitOk;
    }

    if (cmd_compare->parsed()) {
      std::filesystem::create_directories(opt.out_dir);
      const std::string path =
          (std::filesystem::path(opt.out_dir) / "compare_summary.csv").string();
      std::string body = "algorithm,seed,final_remuneration,time_avg_utility\n";
      int rc = kExitOk;
      for (const std::string& name : split_csv(algos_csv)) {
        const auto algo = uavmec::parse_algorithm(name);
        if (!algo) {
          std::fprintf(stderr, "config error: unknown algorithm '%s'\n", name.c_str());
          return kExitConfigError;
        }
        for (int k = 0; k < num_seeds; ++k) {
          uavmec::ScenarioConfig c = *cfg;
          c.rng_seed = cfg->rng_seed + static_cast<std::uint64_t>(k);
          const uavmec::RunSummary s = uavmec::run(c, *algo, policy_of(opt));
          uavmec::export_metrics(s, metrics_path(opt, s.algorithm, s.seed));
          if (s.invariants.total() != 0) {
            std::fprintf(stderr, "invariant violations detected in %s\n", s.run_id.c_str());
            rc = kExitRuntimeError;
          }
          char line[160];
          std::snprintf(line, sizeof(line), "%s,%llu,%.9g,%.9g\n", s.algorithm.c_str(),
                        static_cast<unsigned long long>(s.seed), s.total_remuneration,
                        s.time_avg_utility);
          body += line;
        }
      }
      std::FILE* f = std::fopen(path.c_str(), "wb");
      if (!f) throw std::runtime_error("cannot open " + path);
      std::fwrite(body.data(), 1, body.size(), f);
      std::fclose(f);
      std::printf("wrote %s\n", path.c_str());
      return rc;
    }

    if (cmd_plan->parsed()) {
      const auto traj = uavmec::deployment_for(*cfg, uavmec::Algorithm::Joaodr, policy_of(opt));
      std::filesystem::create_directories(opt.out_dir);
      const std::string path = (std::filesystem::path(opt.out_dir) / plan_out).string();
      uavmec::write_plan_csv(traj, cfg->uav_configs, path);
      std::printf("wrote %s\n", path.c_str());
      return kExitOk;
    }
  } catch (const std::invalid_argument& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return kExitConfigError;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "runtime error: %s\n", e.what());
    return kExitRuntimeError;
  }
  return kExitOk;
}
