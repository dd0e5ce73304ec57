#pragma once

#include <string>
#include <vector>

#include "uavmec/assignment.hpp"
#include "uavmec/types.hpp"

// Brute-force oracles the acceptance suite measures the implementation
// against. Their correctness rests on exhaustiveness: no closed forms, no
// clever search, just dense scans and enumeration.
namespace uavmec::oracles {

struct OracleReport {
  std::string instance;
  double oracle_value = 0.0;
  double implementation_value = 0.0;
  double relative_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

OracleReport make_report(std::string instance, double oracle_value, double implementation_value,
                         double tolerance);

// One P3 instance, mirroring the solve inputs.
struct P3Instance {
  double phi_gc = 0.0;
  double input_bits = 0.0;
  double output_bits = 0.0;
  double qos_bps = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double s_max = 0.0;
  double recv_j_per_bit = 0.0;
  double mu = 0.0;        // N0 d^2 / g0 at delivery
  double gamma_bw = 0.0;  // gamma * W
  double tau = 0.0;
};

struct P3OracleResult {
  bool feasible = false;
  double energy_j = 0.0;
  double cpu_speed = 0.0;
  double rate_bps = 0.0;
};

// Dense feasible-(s, P) scan with window zooming: grid_n speed points per
// round, the rate axis gridded from the QoS floor to the deadline-binding
// rate (both endpoints exactly on the grid). Four rounds shrink the speed
// resolution far below the 1e-6 comparison tolerance.
P3OracleResult p3_grid_oracle(const P3Instance& inst, int grid_n);

// Exact optimum over all capacity-respecting partial matchings that select
// only positive weights. Refuses instances above 8 tasks x 3 UAVs.
double assignment_brute_force(const WeightMatrix& matrix, const std::vector<int>& capacities);

// Channel-occupancy history entry: a service assigned at `slot` holds one
// channel of `uav` for `delay` upload slots plus the delivery slot.
struct HistoryEntry {
  int slot = 0;
  int uav = 0;
  int delay = 0;
};

// Occupancy count evaluated straight from the F-sum over the history.
int occupancy_from_history(const std::vector<HistoryEntry>& history, int uav, int slot);

}  // namespace uavmec::oracles
