#include "uavmec/sim.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "uavmec/assignment.hpp"
#include "uavmec/config.hpp"
#include "uavmec/lyapunov.hpp"
#include "uavmec/pair_planner.hpp"

namespace uavmec {

const char* algorithm_name(Algorithm algo) {
  switch (algo) {
    case Algorithm::Joaodr: return "joaodr";
    case Algorithm::Greedy: return "greedy";
    case Algorithm::FixedDeploy: return "fixed-deploy";
  }
  return "unknown";
}

std::optional<Algorithm> parse_algorithm(const std::string& name) {
  if (name == "joaodr") return Algorithm::Joaodr;
  if (name == "greedy") return Algorithm::Greedy;
  if (name == "fixed-deploy") return Algorithm::FixedDeploy;
  return std::nullopt;
}

VehicleProcess::VehicleProcess(const ScenarioConfig& cfg)
    : cfg_(cfg), rng_(cfg.rng_seed, kMobilityStream) {
  vehicles_.resize(static_cast<std::size_t>(cfg.vehicle_count));
  for (int v = 0; v < cfg.vehicle_count; ++v) {
    vehicles_[v].id = v;
    vehicles_[v].position = spawn_position(0);
    vehicles_[v].velocity = spawn_velocity();
  }
}

Position VehicleProcess::spawn_position(int slot) {
  const RectRegion& r = cfg_.region;
  if (cfg_.density.mode == DensitySpec::Mode::Hotspot &&
      rng_.bernoulli(cfg_.density.hotspot_weight)) {
    const Position c = density_hotspot_center(cfg_, slot);
    const double sigma = cfg_.density.hotspot_sigma_m;
    for (int tries = 0; tries < 64; ++tries) {
      const Position p{rng_.normal(c.x, sigma), rng_.normal(c.y, sigma)};
      if (r.contains(p)) return p;
    }
  }
  return {rng_.uniform(r.x_min, r.x_max), rng_.uniform(r.y_min, r.y_max)};
}

Velocity VehicleProcess::spawn_velocity() {
  const double speed =
      rng_.uniform(cfg_.vehicle_speed_range_mps.min, cfg_.vehicle_speed_range_mps.max);
  const double angle = rng_.uniform(0.0, 6.283185307179586476925286766559);
  return {speed * std::cos(angle), speed * std::sin(angle)};
}

void VehicleProcess::advance(int slot) {
  for (VehicleState& v : vehicles_) {
    v.position.x += v.velocity.vx * cfg_.slot_length_s;
    v.position.y += v.velocity.vy * cfg_.slot_length_s;
    if (!cfg_.region.contains(v.position)) {
      v.position = spawn_position(slot);
      v.velocity = spawn_velocity();
    }
  }
}

std::vector<TaskRequest> sample_tasks(const std::vector<VehicleState>& vehicles,
                                      const ScenarioConfig& cfg, int slot, RngStream& rng) {
  std::vector<TaskRequest> tasks;
  for (const VehicleState& v : vehicles) {
    if (!rng.bernoulli(cfg.task_gen_prob)) continue;
    TaskRequest task;
    task.task_id = static_cast<int>(tasks.size());
    task.slot = slot;
    task.input_bits = rng.uniform(cfg.input_bits_range.min, cfg.input_bits_range.max);
    task.output_bits = rng.uniform(cfg.output_bits_range.min, cfg.output_bits_range.max);
    task.qos_bps = rng.uniform(cfg.qos_range_bps.min, cfg.qos_range_bps.max);
    task.payment = rng.uniform(cfg.payment_range.min, cfg.payment_range.max);
    task.cycles_gc = cfg.cycles_per_bit * task.input_bits;
    task.position = v.position;
    task.velocity = v.velocity;
    tasks.push_back(task);
  }
  return tasks;
}

namespace {

std::vector<std::vector<Position>> plan_trajectory_empirical(const ScenarioConfig& cfg,
                                                             ExecPolicy policy) {
  // Mobility-only prepass standing in for historical traces: the replayed
  // process is distribution-identical to the run, so per-slot histograms are
  // exactly the "previous day's" observations.
  VehicleProcess prepass(cfg);
  DensityGrid scratch;
  int built_for = -1;
  const auto grid_for = [&](int t) -> const DensityGrid& {
    while (built_for < t) {
      ++built_for;
      if (built_for > 0) prepass.advance(built_for);
      std::vector<Position> positions;
      positions.reserve(prepass.vehicles().size());
      for (const VehicleState& v : prepass.vehicles()) positions.push_back(v.position);
      scratch = histogram_grid(positions, cfg.region, cfg.planner.grid_nx, cfg.planner.grid_ny);
    }
    return scratch;
  };
  return plan_trajectory(grid_for, cfg.num_slots, cfg.uav_configs, cfg.slot_length_s, policy);
}

struct GreedyPick {
  int uav_index;
  int task_index;
};

// Highest payments first, each to the first UAV (by index) that is coverage-
// and deadline-feasible, has a free channel and enough battery left in this
// slot for the predicted service energy.
std::vector<GreedyPick> greedy_select(const std::vector<TaskRequest>& tasks,
                                      const std::vector<ServicePlan>& plans,
                                      std::vector<int> free, std::vector<double> budget) {
  std::vector<int> order(tasks.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return tasks[a].payment > tasks[b].payment;
  });
  std::vector<GreedyPick> picks;
  const std::size_t num_tasks = tasks.size();
  for (int t : order) {
    for (std::size_t u = 0; u < free.size(); ++u) {
      if (free[u] <= 0) continue;
      const ServicePlan& plan = plans[u * num_tasks + t];
      if (!plan.feasible || plan.energy_j > budget[u]) continue;
      picks.push_back({static_cast<int>(u), t});
      --free[u];
      budget[u] -= plan.energy_j;
      break;
    }
  }
  return picks;
}

}  // namespace

std::vector<std::vector<Position>> deployment_for(const ScenarioConfig& cfg, Algorithm algo,
                                                  ExecPolicy policy) {
  if (algo == Algorithm::FixedDeploy) {
    std::vector<std::vector<Position>> traj(cfg.uav_configs.size());
    for (std::size_t i = 0; i < cfg.uav_configs.size(); ++i) {
      traj[i].assign(static_cast<std::size_t>(cfg.num_slots),
                     cfg.uav_configs[i].coverage.center());
    }
    return traj;
  }
  if (cfg.planner.density_source == PlannerSpec::Source::Empirical) {
    return plan_trajectory_empirical(cfg, policy);
  }
  return plan_trajectory_oracle(cfg, policy);
}

RunSummary run(const ScenarioConfig& cfg, Algorithm algo, ExecPolicy policy) {
  const std::vector<std::string> violations = validate_config(cfg);
  if (!violations.empty()) {
    std::string msg = "invalid scenario:";
    for (const std::string& v : violations) msg += "\n  " + v;
    throw std::invalid_argument(msg);
  }

  RunSummary summary;
  summary.algorithm = algorithm_name(algo);
  summary.seed = cfg.rng_seed;
  summary.run_id = summary.algorithm + "-s" + std::to_string(cfg.rng_seed);
  summary.config = cfg;

  const std::size_t num_uavs = cfg.uav_configs.size();
  const double tau = cfg.slot_length_s;
  const RadioEnv radio = radio_env(cfg);

  const std::vector<std::vector<Position>> trajectories = deployment_for(cfg, algo, policy);

  std::vector<UavState> uavs(num_uavs);
  std::vector<double> theta(num_uavs);
  for (std::size_t i = 0; i < num_uavs; ++i) {
    uavs[i].config = cfg.uav_configs[i];
    theta[i] = battery_target(cfg, cfg.uav_configs[i]);
    uavs[i].battery_j = theta[i];  // full at t = 0
    uavs[i].position = trajectories[i].empty() ? cfg.uav_configs[i].coverage.center()
                                               : trajectories[i][0];
  }

  VehicleProcess vehicles(cfg);
  RngStream task_rng(cfg.rng_seed, kTaskStream);
  RngStream harvest_rng(cfg.rng_seed, kHarvestStream);
  ChannelLedger ledger(num_uavs);

  summary.slots.reserve(static_cast<std::size_t>(cfg.num_slots));
  double remuneration_cum = 0.0;
  double utility_cum = 0.0;

  for (int t = 0; t < cfg.num_slots; ++t) {
    // (1) planned deployment, with the per-slot displacement limit swept
    for (std::size_t i = 0; i < num_uavs; ++i) {
      const Position next = trajectories[i][t];
      if (t > 0) {
        const double step = distance(trajectories[i][t - 1], next);
        if (step > cfg.uav_configs[i].max_speed_mps * tau + 1e-9)
          ++summary.invariants.displacement_violations;
      }
      uavs[i].position = next;
    }

    // (2) vehicle kinematics
    if (t > 0) vehicles.advance(t);

    // (3) stochastic workload
    const std::vector<TaskRequest> tasks = sample_tasks(vehicles.vehicles(), cfg, t, task_rng);

    // (4) per-pair optimization (data-parallel kernel)
    SlotPlanningInput input;
    input.slot = t;
    input.slot_length_s = tau;
    input.vehicle_tx_power_w = cfg.vehicle_tx_power_w;
    input.radio = radio;
    input.tasks = tasks;
    input.uavs = uavs;
    input.trajectories = trajectories;
    const std::vector<ServicePlan> plans = plan_service_matrix(input, policy);

    std::vector<int> free(num_uavs);
    std::vector<double> queues(num_uavs);
    for (std::size_t i = 0; i < num_uavs; ++i) {
      const int occupied = ledger.occupied(static_cast<int>(i), t);
      if (occupied > cfg.uav_configs[i].channels) ++summary.invariants.capacity_violations;
      free[i] = cfg.uav_configs[i].channels - occupied;
      queues[i] = theta[i] - uavs[i].battery_j;
      if (queues[i] < -1e-9) ++summary.invariants.queue_negative;
    }

    // (5) matching
    std::vector<Match> matches;
    if (algo == Algorithm::Greedy) {
      std::vector<double> budget(num_uavs);
      for (std::size_t i = 0; i < num_uavs; ++i) budget[i] = uavs[i].battery_j;
      for (const GreedyPick& pick : greedy_select(tasks, plans, free, budget))
        matches.push_back({pick.uav_index, pick.task_index});
    } else {
      const WeightMatrix matrix =
          build_weight_matrix(tasks, plans, free, cfg.control_v, queues);
      matches = solve_assignment(matrix, free).matches;
    }

    // (6) debit predicted service energy, hold channels through delivery
    SlotMetrics metrics;
    metrics.slot = t;
    metrics.tasks_generated = static_cast<int>(tasks.size());
    metrics.tasks_served = static_cast<int>(matches.size());
    std::vector<double> consumed(num_uavs, 0.0);
    for (const Match& m : matches) {
      const ServicePlan& plan = plans[static_cast<std::size_t>(m.uav_index) * tasks.size() +
                                      m.task_index];
      const TaskRequest& task = tasks[m.task_index];
      if (!coverage_feasible(task, cfg.uav_configs[m.uav_index], plan.upload_delay_slots, tau))
        ++summary.invariants.coverage_violations;
      const double elapsed =
          task.cycles_gc / plan.cpu_speed_gcps + task.output_bits / plan.downlink_rate_bps;
      if (plan.downlink_rate_bps < task.qos_bps * (1.0 - 1e-9) ||
          elapsed > tau * (1.0 + 1e-9) ||
          plan.cpu_speed_gcps > cfg.uav_configs[m.uav_index].cpu_max_gcps * (1.0 + 1e-9))
        ++summary.invariants.service_violations;
      consumed[m.uav_index] += plan.energy_j;
      ledger.occupy(m.uav_index, t + plan.upload_delay_slots);
      metrics.remuneration += task.payment;
      metrics.utility += weight(cfg.control_v, task.payment, queues[m.uav_index], plan.energy_j);
    }
    for (int task_index = 0; task_index < metrics.tasks_generated; ++task_index) {
      bool any = false;
      for (std::size_t i = 0; i < num_uavs && !any; ++i)
        any = plans[i * tasks.size() + task_index].feasible;
      if (!any) ++metrics.tasks_infeasible;
    }

    // (7) harvest and the battery recursion
    metrics.harvested_j.resize(num_uavs);
    metrics.consumed_j = consumed;
    metrics.battery_j.resize(num_uavs);
    metrics.free_channels.resize(num_uavs);
    for (std::size_t i = 0; i < num_uavs; ++i) {
      const UavConfig& uc = cfg.uav_configs[i];
      double draw = harvest_rng.uniform(0.0, 2.0 * uc.harvest_mean_w * tau);
      draw = std::min(draw, uc.harvest_max_w * tau);
      if (consumed[i] > uavs[i].battery_j) ++summary.invariants.eq20_violations;
      const BatteryQueue next =
          battery_step({theta[i], uavs[i].battery_j}, draw, consumed[i]);
      metrics.harvested_j[i] = harvest_clip(theta[i], uavs[i].battery_j, draw);
      uavs[i].battery_j = next.energy_j;
      metrics.battery_j[i] = next.energy_j;
      metrics.free_channels[i] =
          free_channels(ledger, static_cast<int>(i), t + 1, uc.channels);
    }
    ledger.compact(t + 1);

    // (8) record
    remuneration_cum += metrics.remuneration;
    utility_cum += metrics.utility;
    summary.remuneration_cum.push_back(remuneration_cum);
    summary.utility_cum.push_back(utility_cum);
    summary.slots.push_back(std::move(metrics));
  }

  summary.total_remuneration = remuneration_cum;
  summary.time_avg_utility = cfg.num_slots > 0 ? utility_cum / cfg.num_slots : 0.0;
  return summary;
}

}  // namespace uavmec
