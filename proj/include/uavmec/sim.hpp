#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "uavmec/deployment.hpp"
#include "uavmec/mobility.hpp"
#include "uavmec/rng.hpp"
#include "uavmec/types.hpp"

namespace uavmec {

enum class Algorithm { Joaodr, Greedy, FixedDeploy };

const char* algorithm_name(Algorithm algo);
std::optional<Algorithm> parse_algorithm(const std::string& name);

struct SlotMetrics {
  int slot = 0;
  double remuneration = 0.0;  // R(t)
  double utility = 0.0;       // per-slot P2 objective of the chosen matching
  std::vector<double> battery_j;    // per UAV at the slot boundary (post step)
  std::vector<int> free_channels;   // per UAV at the start of the next slot
  std::vector<double> harvested_j;  // credited charge
  std::vector<double> consumed_j;   // debited service energy
  int tasks_generated = 0;
  int tasks_served = 0;
  int tasks_infeasible = 0;  // no feasible (coverage + P3) pair on any UAV
};

// Violation counters swept across the whole run; every field must stay zero.
struct InvariantCounters {
  long displacement_violations = 0;  // per-slot move beyond V_max tau
  long capacity_violations = 0;      // occupied channels beyond c_i
  long coverage_violations = 0;      // served task failing either membership check
  long service_violations = 0;       // served plan breaking QoS, deadline or s_max
  long eq20_violations = 0;          // slot energy constraint breaches
  long queue_negative = 0;           // battery above theta

  long total() const {
    return displacement_violations + capacity_violations + coverage_violations +
           service_violations + eq20_violations + queue_negative;
  }
};

struct RunSummary {
  std::string run_id;
  std::string algorithm;
  std::uint64_t seed = 0;
  std::vector<SlotMetrics> slots;
  std::vector<double> remuneration_cum;  // length num_slots
  std::vector<double> utility_cum;       // length num_slots
  double time_avg_utility = 0.0;         // long-term P2 objective estimate
  double total_remuneration = 0.0;
  InvariantCounters invariants;
  ScenarioConfig config;  // echo
};

// Vehicle population shared by the simulation and the empirical planner
// prepass; both replay the same mobility substream.
class VehicleProcess {
 public:
  explicit VehicleProcess(const ScenarioConfig& cfg);

  // Move everyone one slot forward; vehicles leaving the BS region respawn
  // from the slot's configured spawn density with a fresh velocity.
  void advance(int slot);

  const std::vector<VehicleState>& vehicles() const { return vehicles_; }

 private:
  Position spawn_position(int slot);
  Velocity spawn_velocity();

  const ScenarioConfig& cfg_;
  RngStream rng_;
  std::vector<VehicleState> vehicles_;
};

// Per-slot stochastic workload: each vehicle generates a task with
// probability task_gen_prob, parameters uniform over the configured ranges,
// phi = cycles_per_bit * I.
std::vector<TaskRequest> sample_tasks(const std::vector<VehicleState>& vehicles,
                                      const ScenarioConfig& cfg, int slot, RngStream& rng);

// Planned deployment for an algorithm: density-centroid chasing for joaodr
// and greedy, static geometric centers for fixed-deploy.
std::vector<std::vector<Position>> deployment_for(const ScenarioConfig& cfg, Algorithm algo,
                                                  ExecPolicy policy);

// The per-slot control loop. Throws std::invalid_argument when the config is
// invalid and std::runtime_error on a mid-run invariant breach.
RunSummary run(const ScenarioConfig& cfg, Algorithm algo,
               ExecPolicy policy = ExecPolicy::Parallel);

}  // namespace uavmec
