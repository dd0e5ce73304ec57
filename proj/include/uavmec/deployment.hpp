#pragma once

#include <functional>
#include <string>
#include <vector>

#include "uavmec/types.hpp"

namespace uavmec {

// Discretized vehicle distribution f_{x,y} for one planning slot. Weights are
// per-cell masses normalized to sum to 1.
struct DensityGrid {
  RectRegion region;
  int nx = 0;
  int ny = 0;
  std::vector<double> weights;  // ny rows of nx, row-major

  double cell_width() const { return region.width() / nx; }
  double cell_height() const { return region.height() / ny; }
  Position cell_center(int ix, int iy) const {
    return {region.x_min + (ix + 0.5) * cell_width(), region.y_min + (iy + 0.5) * cell_height()};
  }
  double& at(int ix, int iy) { return weights[static_cast<std::size_t>(iy) * nx + ix]; }
  double at(int ix, int iy) const { return weights[static_cast<std::size_t>(iy) * nx + ix]; }

  void normalize();
};

// Analytic spawn density evaluated on the planner grid ("oracle" source).
DensityGrid oracle_grid(const ScenarioConfig& cfg, int slot);

// Laplace-smoothed histogram of observed positions ("empirical" source).
DensityGrid histogram_grid(const std::vector<Position>& positions, const RectRegion& region,
                           int nx, int ny);

// Hotspot center at a slot (region center for uniform mode).
Position density_hotspot_center(const ScenarioConfig& cfg, int slot);

// Evaluate the configured mixture density at a point (unnormalized).
double density_value(const ScenarioConfig& cfg, int slot, const Position& p);

// Mass-weighted centroid of the density restricted to coverage; geometric
// center of the coverage when no mass falls inside it.
Position centroid_target(const DensityGrid& grid, const RectRegion& coverage,
                         ExecPolicy policy = ExecPolicy::Parallel);

// Z_i = integral over C_i of c_i * P_i(x, y) * f dx dy by midpoint quadrature,
// P_i the QoS guarantee power at lambda_max. Cells partially inside C_i count
// by area overlap fraction.
double guarantee_power_quadrature(const DensityGrid& grid, const RectRegion& coverage,
                                  const Position& uav_pos, double altitude_m, int channels,
                                  double lambda_max_bps, const RadioEnv& radio,
                                  ExecPolicy policy = ExecPolicy::Parallel);

// Network-wide average guarantee transmit power: sum_i Z_i / sum_i c_i.
double avg_transmit_power(const DensityGrid& grid, const std::vector<Position>& uav_positions,
                          const std::vector<UavConfig>& uav_configs, double lambda_max_bps,
                          const RadioEnv& radio, ExecPolicy policy = ExecPolicy::Parallel);

// Per-slot planned positions for every UAV: chase the per-slot density
// centroid of the own coverage under the speed clamp. grid_for(t) supplies
// the planning density of slot t; start positions default to the coverage
// centers.
std::vector<std::vector<Position>> plan_trajectory(
    const std::function<const DensityGrid&(int)>& grid_for, int num_slots,
    const std::vector<UavConfig>& uavs, double slot_length_s,
    ExecPolicy policy = ExecPolicy::Parallel);

// Convenience: oracle-density trajectory for a whole scenario.
std::vector<std::vector<Position>> plan_trajectory_oracle(const ScenarioConfig& cfg,
                                                          ExecPolicy policy = ExecPolicy::Parallel);

// Columnar export (slot, uav_id, x, y) consumed by plots and the
// fixed-deployment comparison.
void write_plan_csv(const std::vector<std::vector<Position>>& trajectories,
                    const std::vector<UavConfig>& uavs, const std::string& path);

}  // namespace uavmec
