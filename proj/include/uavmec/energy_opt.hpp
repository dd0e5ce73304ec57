#pragma once

#include "uavmec/types.hpp"

namespace uavmec {

struct EnergyBreakdown {
  double recv_j = 0.0;   // C^r * I_m
  double cpu_j = 0.0;    // (alpha s^3 + beta) * phi / s
  double send_j = 0.0;   // P * O / r
  double total_j = 0.0;
};

// CPU power alpha * s^3 + beta in watts, s in Gcycles/s.
double cpu_power(double alpha, double beta, double s_gcps);

// Minimizer of E^cpu(s) = (alpha s^3 + beta) * phi / s over (0, s_max]:
// min(cbrt(beta / 2 alpha), s_max), independent of phi. For beta == 0 the
// unconstrained optimum degenerates to s -> 0+ and 0 is returned; the
// deadline-binding branch of solve_p3 owns that case.
double optimal_cpu_speed(double alpha, double beta, double s_max);

// Minimum-energy (s_im, P_im) for one (UAV, task) pair: closed form when the
// one-slot deadline is slack, otherwise a scan-plus-golden-section search
// along the deadline boundary phi/s + O/r = tau. Infeasible pairs come back
// with feasible == false, never an exception. Coverage is the caller's
// responsibility; upload delay and delivery distance are precomputed inputs.
ServicePlan solve_p3(const TaskRequest& task, const UavConfig& uav, double delivery_distance_m,
                     int upload_delay_slots, double slot_length_s, const RadioEnv& radio);

// Energy split of a feasible plan; throws std::logic_error on infeasible input.
EnergyBreakdown service_energy(const TaskRequest& task, const ServicePlan& plan,
                               const UavConfig& uav, const RadioEnv& radio);

}  // namespace uavmec
