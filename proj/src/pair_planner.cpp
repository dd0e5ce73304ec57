#include "uavmec/pair_planner.hpp"

#include "uavmec/energy_opt.hpp"
#include "uavmec/mobility.hpp"
#include "uavmec/radio.hpp"

namespace uavmec {

namespace {

Position planned_position(const std::vector<Position>& trajectory, int slot) {
  if (trajectory.empty()) return {};
  const int last = static_cast<int>(trajectory.size()) - 1;
  return trajectory[slot > last ? last : slot];
}

}  // namespace

ServicePlan plan_pair(const SlotPlanningInput& input, int uav_index, int task_index) {
  const TaskRequest& task = input.tasks[task_index];
  const UavState& uav = input.uavs[uav_index];
  const UavConfig& cfg = uav.config;

  ServicePlan infeasible;
  infeasible.uav_id = cfg.id;
  infeasible.task_id = task.task_id;
  infeasible.feasible = false;

  if (!cfg.coverage.contains(task.position)) return infeasible;

  const LinkGeometry up = link_geometry(uav.position, task.position, cfg.altitude_m);
  const double gain = path_gain(input.radio.channel_gain_ref, up.slant_m());
  const double rate = uplink_rate(input.vehicle_tx_power_w, gain, input.radio.noise_power_w,
                                  input.radio.bandwidth_hz, input.radio.rate_efficiency);
  const auto delay = upload_delay_slots(task.input_bits, rate, input.slot_length_s);
  if (!delay) return infeasible;

  if (!coverage_feasible(task, cfg, *delay, input.slot_length_s)) {
    infeasible.upload_delay_slots = *delay;
    return infeasible;
  }

  const Position vehicle_later =
      predict_position(task.position, task.velocity, input.slot_length_s, *delay);
  const Position uav_later =
      planned_position(input.trajectories[uav_index], input.slot + *delay);
  const double delivery_d = link_geometry(uav_later, vehicle_later, cfg.altitude_m).slant_m();

  return solve_p3(task, cfg, delivery_d, *delay, input.slot_length_s, input.radio);
}

std::vector<ServicePlan> plan_service_matrix_serial(const SlotPlanningInput& input) {
  const int num_uavs = static_cast<int>(input.uavs.size());
  const int num_tasks = static_cast<int>(input.tasks.size());
  std::vector<ServicePlan> plans(static_cast<std::size_t>(num_uavs) * num_tasks);
  for (int u = 0; u < num_uavs; ++u)
    for (int t = 0; t < num_tasks; ++t)
      plans[static_cast<std::size_t>(u) * num_tasks + t] = plan_pair(input, u, t);
  return plans;
}

std::vector<ServicePlan> plan_service_matrix(const SlotPlanningInput& input, ExecPolicy policy) {
  if (policy == ExecPolicy::Serial) return plan_service_matrix_serial(input);
  const int num_uavs = static_cast<int>(input.uavs.size());
  const int num_tasks = static_cast<int>(input.tasks.size());
  std::vector<ServicePlan> plans(static_cast<std::size_t>(num_uavs) * num_tasks);
  const int total = num_uavs * num_tasks;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 4)
#endif
  for (int k = 0; k < total; ++k) {
    plans[k] = plan_pair(input, k / num_tasks, k % num_tasks);
  }
  return plans;
}

}  // namespace uavmec
