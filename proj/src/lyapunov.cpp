#include "uavmec/lyapunov.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "uavmec/energy_opt.hpp"

namespace uavmec {

double size_theta(double control_v, double p_max, double e_min_j, double e_max_j, int channels) {
  if (!(e_min_j > 0.0)) throw std::domain_error("e_min_j must be > 0");
  if (e_max_j < e_min_j) throw std::domain_error("e_max_j must be >= e_min_j");
  if (channels < 1) throw std::domain_error("channels must be >= 1");
  if (control_v < 0.0) throw std::domain_error("control_v must be >= 0");
  return control_v * p_max / e_min_j + static_cast<double>(channels) * e_max_j;
}

double weight(double control_v, double payment, double queue_j, double energy_j_for_task) {
  return control_v * payment - queue_j * energy_j_for_task;
}

double plan_weight(double control_v, double payment, double queue_j, const ServicePlan& plan) {
  if (!plan.feasible) return kInfeasibleWeight;
  return weight(control_v, payment, queue_j, plan.energy_j);
}

double harvest_clip(double theta_j, double energy_j, double harvested_j) {
  return std::min(theta_j - energy_j, harvested_j);
}

BatteryQueue battery_step(const BatteryQueue& queue, double harvested_j, double consumed_j) {
  if (consumed_j > queue.energy_j) {
    throw std::runtime_error("battery invariant violated: consumption " +
                             std::to_string(consumed_j) + " J exceeds stored " +
                             std::to_string(queue.energy_j) + " J");
  }
  BatteryQueue next = queue;
  next.energy_j = queue.energy_j + harvest_clip(queue.theta_j, queue.energy_j, harvested_j) -
                  consumed_j;
  return next;
}

namespace {

// Corner instance of the task distribution: a synthetic request with the
// given range endpoints, solved at the given slant distance.
ServicePlan corner_plan(const ScenarioConfig& cfg, const UavConfig& uav, double input_bits,
                        double output_bits, double qos_bps, double slant_m) {
  TaskRequest task;
  task.input_bits = input_bits;
  task.output_bits = output_bits;
  task.cycles_gc = cfg.cycles_per_bit * input_bits;
  task.qos_bps = qos_bps;
  task.payment = cfg.payment_range.max;
  return solve_p3(task, uav, slant_m, 1, cfg.slot_length_s, radio_env(cfg));
}

}  // namespace

EnergyBounds service_energy_bounds(const ScenarioConfig& cfg, const UavConfig& uav) {
  // Cheapest service: smallest task, vehicle directly beneath the UAV.
  const ServicePlan cheapest =
      corner_plan(cfg, uav, cfg.input_bits_range.min, cfg.output_bits_range.min,
                  cfg.qos_range_bps.min, uav.altitude_m);
  // Costliest service: largest task at the far coverage corner. Service
  // energy is monotone in (I, O, lambda, d), so this corner dominates every
  // request the UAV can actually serve.
  const double d_max = std::hypot(uav.coverage.diagonal(), uav.altitude_m);
  const ServicePlan costliest =
      corner_plan(cfg, uav, cfg.input_bits_range.max, cfg.output_bits_range.max,
                  cfg.qos_range_bps.max, d_max);
  if (!cheapest.feasible || !costliest.feasible) {
    throw std::domain_error(
        "uav " + std::to_string(uav.id) +
        ": task range corner is infeasible, battery target cannot be auto-sized "
        "(set battery_target_j explicitly or relax the task ranges)");
  }
  return {cheapest.energy_j, costliest.energy_j};
}

double battery_target(const ScenarioConfig& cfg, const UavConfig& uav) {
  if (uav.battery_target_j) return *uav.battery_target_j;
  const EnergyBounds bounds = service_energy_bounds(cfg, uav);
  return size_theta(cfg.control_v, cfg.payment_range.max, bounds.e_min_j, bounds.e_max_j,
                    uav.channels);
}

}  // namespace uavmec
