#pragma once

#include "uavmec/types.hpp"

namespace uavmec {

// Finite stand-in for the -inf mask on infeasible pairs; keeps the weight
// matrix total-order safe for the assignment solver.
inline constexpr double kInfeasibleWeight = -1e30;

// Battery deficit queue Q_i(t) = theta_i - E_i(t).
struct BatteryQueue {
  double theta_j = 0.0;
  double energy_j = 0.0;
  double queue_j() const { return theta_j - energy_j; }
};

// Battery target sizing theta = V p_max / E_min + c E_max; with it the
// per-slot energy constraint can never bind.
double size_theta(double control_v, double p_max, double e_min_j, double e_max_j, int channels);

// Drift-minus-reward weight v = V p - Q E.
double weight(double control_v, double payment, double queue_j, double energy_j_for_task);

// Weight of a plan, masking infeasible ones.
double plan_weight(double control_v, double payment, double queue_j, const ServicePlan& plan);

// Per-slot charge e = min(theta - E, harvested), both sides evaluated on the
// pre-consumption battery level.
double harvest_clip(double theta_j, double energy_j, double harvested_j);

// Battery recursion E(t+1) = E(t) + e(t) - consumed. Throws on consumed >
// energy: unreachable under the sized battery target, a run reaching it is broken.
BatteryQueue battery_step(const BatteryQueue& queue, double harvested_j, double consumed_j);

// Analytic E_min / E_max bounds a single service can cost this UAV under the
// configured task ranges: cheapest task directly beneath the UAV, costliest
// task at the farthest coverage corner. Throws std::domain_error when the
// costliest corner instance is infeasible (auto-sizing would be unsound).
struct EnergyBounds {
  double e_min_j = 0.0;
  double e_max_j = 0.0;
};
EnergyBounds service_energy_bounds(const ScenarioConfig& cfg, const UavConfig& uav);

// theta_i for a UAV: the explicit battery_target_j when configured, else the
// sized value from service_energy_bounds.
double battery_target(const ScenarioConfig& cfg, const UavConfig& uav);

}  // namespace uavmec
