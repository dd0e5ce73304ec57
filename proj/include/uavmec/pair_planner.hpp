#pragma once

#include <span>
#include <vector>

#include "uavmec/types.hpp"

namespace uavmec {

// Everything one slot's per-pair optimization needs. Trajectories give the
// planned UAV position at upload completion (held at the final slot past the
// horizon).
struct SlotPlanningInput {
  int slot = 0;
  double slot_length_s = 0.0;
  double vehicle_tx_power_w = 0.0;
  RadioEnv radio;
  std::span<const TaskRequest> tasks;
  std::span<const UavState> uavs;
  std::span<const std::vector<Position>> trajectories;  // one per UAV, length >= 1
};

// Fills the UAV-major plan matrix (uavs x tasks): coverage check at t and at
// t + t^d, uplink delay, then the P3 solve. Each pair is independent, so the
// OpenMP path produces bitwise the same plans as the serial reference.
std::vector<ServicePlan> plan_service_matrix(const SlotPlanningInput& input,
                                             ExecPolicy policy = ExecPolicy::Parallel);

// Serial reference kept for testing and benchmarking.
std::vector<ServicePlan> plan_service_matrix_serial(const SlotPlanningInput& input);

// One (uav, task) pair; exposed for tests.
ServicePlan plan_pair(const SlotPlanningInput& input, int uav_index, int task_index);

}  // namespace uavmec
