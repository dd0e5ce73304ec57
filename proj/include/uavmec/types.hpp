#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <vector>

namespace uavmec {

// Serial keeps the reference implementations of the data-parallel kernels;
// Parallel runs them under OpenMP. Results are bitwise identical.
enum class ExecPolicy { Serial, Parallel };

struct Position {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

struct Velocity {
  double vx = 0.0;  // m/s
  double vy = 0.0;  // m/s
};

inline double distance(const Position& a, const Position& b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Axis-aligned rectangle; membership is boundary-inclusive.
struct RectRegion {
  double x_min = 0.0, x_max = 0.0;
  double y_min = 0.0, y_max = 0.0;

  bool valid() const { return x_min < x_max && y_min < y_max; }
  double width() const { return x_max - x_min; }
  double height() const { return y_max - y_min; }
  double area() const { return width() * height(); }
  double diagonal() const { return std::hypot(width(), height()); }
  Position center() const { return {0.5 * (x_min + x_max), 0.5 * (y_min + y_max)}; }

  bool contains(const Position& p) const {
    return p.x >= x_min && p.x <= x_max && p.y >= y_min && p.y <= y_max;
  }
  bool contains(const RectRegion& r) const {
    return r.x_min >= x_min && r.x_max <= x_max && r.y_min >= y_min && r.y_max <= y_max;
  }
};

struct Interval {
  double min = 0.0;
  double max = 0.0;
  bool valid() const { return min <= max; }
};

// Vehicle spawn distribution. "uniform" is flat over the region; "hotspot"
// mixes a uniform floor with an isotropic Gaussian whose center drifts on a
// circle around the region center, one revolution per period_slots.
struct DensitySpec {
  enum class Mode { Uniform, Hotspot };
  Mode mode = Mode::Uniform;
  double hotspot_sigma_m = 100.0;
  double hotspot_weight = 0.8;       // mass fraction in the Gaussian component
  double hotspot_radius_frac = 0.5;  // orbit radius as a fraction of the half-extent
  double hotspot_period_slots = 200.0;
};

struct PlannerSpec {
  enum class Source { Oracle, Empirical };
  int grid_nx = 50;
  int grid_ny = 50;
  Source density_source = Source::Oracle;
};

struct UavConfig {
  int id = 0;
  RectRegion coverage;                       // service range C_i, fixed
  double altitude_m = 0.0;                   // h
  double max_speed_mps = 0.0;                // V_max
  int channels = 0;                          // c_i
  double cpu_max_gcps = 0.0;                 // s_{i,max}, Gcycles/s
  double alpha = 0.0;                        // W per (Gcycles/s)^3
  double beta = 0.0;                         // W
  double recv_energy_j_per_bit = 0.0;        // C_i^r
  std::optional<double> battery_target_j;    // theta_i; auto-sized when absent
  double harvest_max_w = 0.0;                // eta_max as power
  double harvest_mean_w = 0.0;
  std::optional<Position> start;             // defaults to coverage center
};

struct ScenarioConfig {
  double slot_length_s = 0.0;  // tau
  int num_slots = 0;           // T
  RectRegion region;           // BS coverage
  std::vector<UavConfig> uav_configs;
  int vehicle_count = 0;
  Interval vehicle_speed_range_mps;
  double task_gen_prob = 0.0;    // per vehicle per slot
  Interval input_bits_range;     // I_m
  Interval output_bits_range;    // O_m
  Interval qos_range_bps;        // lambda_m
  Interval payment_range;        // p_m
  double cycles_per_bit = 0.0;   // Gcycles per bit
  double vehicle_tx_power_w = 0.0;  // P_m
  double bandwidth_hz = 0.0;        // W
  double channel_gain_ref = 0.0;    // g_0 at d = 1 m, linear
  double noise_power_w = 0.0;       // N_0
  double rate_efficiency = 0.0;     // gamma in (0,1)
  double control_v = 0.0;           // V
  std::uint64_t rng_seed = 0;
  DensitySpec density;
  PlannerSpec planner;
};

// Task tuple A_m(t) as announced to the BS.
struct TaskRequest {
  int task_id = 0;
  int slot = 0;
  double input_bits = 0.0;
  double output_bits = 0.0;
  double cycles_gc = 0.0;  // phi_m, Gcycles
  double payment = 0.0;    // p_m
  double qos_bps = 0.0;    // lambda_m
  Position position;
  Velocity velocity;
};

struct UavState {
  UavConfig config;
  Position position;
  double battery_j = 0.0;                 // E_i(t)
  std::vector<int> channel_release_slots; // busy-until slots, realizes y_i(t)
};

// Optimized per-(UAV, task) service decision from P3.
struct ServicePlan {
  int uav_id = -1;
  int task_id = -1;
  bool feasible = false;
  double cpu_speed_gcps = 0.0;     // s_im
  double downlink_power_w = 0.0;   // P_im
  double downlink_rate_bps = 0.0;  // r_im at delivery
  int upload_delay_slots = 0;      // t^d_im
  double delivery_distance_m = 0.0;
  double energy_j = 0.0;           // E_im = E^rec + E^cpu + E^snd
  double weight = 0.0;             // v_im = V p_m - Q_i E_im
};

// Shared link-budget constants, pulled out of ScenarioConfig for the pure
// radio functions.
struct RadioEnv {
  double channel_gain_ref = 0.0;
  double noise_power_w = 0.0;
  double bandwidth_hz = 0.0;
  double rate_efficiency = 0.0;
};

inline RadioEnv radio_env(const ScenarioConfig& cfg) {
  return {cfg.channel_gain_ref, cfg.noise_power_w, cfg.bandwidth_hz, cfg.rate_efficiency};
}

}  // namespace uavmec
