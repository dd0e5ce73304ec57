#include "uavmec/energy_opt.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "uavmec/radio.hpp"

namespace uavmec {

namespace {

constexpr double kRelTol = 1e-9;
constexpr int kScanPoints = 64;

// Transmit power needed for downlink rate r at distance factor mu = N0 d^2 / g0.
// Guarded exp2: absurd rates map to +inf and lose the minimization.
double power_for_rate(double r_bps, double mu, double gamma_bw) {
  const double e = r_bps / gamma_bw;
  if (e > 1020.0) return std::numeric_limits<double>::infinity();
  return (std::exp2(e) - 1.0) * mu;
}

struct BoundaryObjective {
  double phi, output_bits, mu, gamma_bw, tau, alpha, beta;

  // cpu + send energy with the deadline exactly binding at speed s.
  double operator()(double s) const {
    const double cpu_time = phi / s;
    const double send_time = tau - cpu_time;
    if (send_time <= 0.0) return std::numeric_limits<double>::infinity();
    const double r = output_bits / send_time;
    const double p = power_for_rate(r, mu, gamma_bw);
    return (alpha * s * s * s + beta) * cpu_time + p * send_time;
  }
};

// Golden-section refinement on [a, b]; the objective need not be globally
// unimodal, the caller brackets a local basin first.
template <typename F>
double golden_min(const F& f, double a, double b) {
  constexpr double inv_phi = 0.6180339887498948482;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && (b - a) > kRelTol * (std::abs(a) + std::abs(b)) + 1e-15; ++it) {
    if (fc < fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - (b - a) * inv_phi;
      fc = f(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + (b - a) * inv_phi;
      fd = f(d);
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

double cpu_power(double alpha, double beta, double s_gcps) {
  if (!(s_gcps > 0.0)) throw std::domain_error("cpu speed must be > 0");
  if (alpha < 0.0 || beta < 0.0) throw std::domain_error("alpha and beta must be >= 0");
  return alpha * s_gcps * s_gcps * s_gcps + beta;
}

double optimal_cpu_speed(double alpha, double beta, double s_max) {
  if (!(alpha > 0.0)) throw std::domain_error("alpha must be > 0");
  if (!(s_max > 0.0)) throw std::domain_error("s_max must be > 0");
  if (beta == 0.0) return 0.0;  // degenerate: E^cpu increasing, no interior optimum
  return std::min(std::cbrt(beta / (2.0 * alpha)), s_max);
}

ServicePlan solve_p3(const TaskRequest& task, const UavConfig& uav, double delivery_distance_m,
                     int upload_delay_slots, double slot_length_s, const RadioEnv& radio) {
  ServicePlan plan;
  plan.uav_id = uav.id;
  plan.task_id = task.task_id;
  plan.upload_delay_slots = upload_delay_slots;
  plan.delivery_distance_m = delivery_distance_m;
  plan.feasible = false;

  const double tau = slot_length_s;
  const double phi = task.cycles_gc;
  const double out_bits = task.output_bits;
  const double lambda = task.qos_bps;
  const double s_max = uav.cpu_max_gcps;
  const double gamma_bw = radio.rate_efficiency * radio.bandwidth_hz;
  const double mu =
      radio.noise_power_w * delivery_distance_m * delivery_distance_m / radio.channel_gain_ref;
  const double recv_j = uav.recv_energy_j_per_bit * task.input_bits;

  // CPU work alone must fit in the slot, leaving time for the downlink.
  if (!(phi / s_max < tau)) return plan;

  const auto finish = [&](double s, double r) {
    plan.cpu_speed_gcps = s;
    plan.downlink_rate_bps = r;
    plan.downlink_power_w = power_for_rate(r, mu, gamma_bw);
    const double cpu_j = (uav.alpha * s * s * s + uav.beta) * phi / s;
    const double send_j = plan.downlink_power_w * out_bits / r;
    plan.energy_j = recv_j + cpu_j + send_j;
    plan.feasible = std::isfinite(plan.energy_j);
  };

  // (a) closed-form pair: per-variable optima with the deadline ignored.
  if (uav.beta > 0.0) {
    const double s_star = optimal_cpu_speed(uav.alpha, uav.beta, s_max);
    if (phi / s_star + out_bits / lambda <= tau) {
      finish(s_star, lambda);
      return plan;
    }
  }

  // (b) deadline-binding branch: optimum on the boundary phi/s + O/r = tau,
  // with r(s) = O / (tau - phi/s) and s constrained by s_max and r(s) >= lambda.
  const double s_lo = (phi / tau) * (1.0 + 1e-9);
  double s_hi = s_max;
  if (tau > out_bits / lambda) {
    // r(s) decreases in s, so the QoS floor caps s from above. The cap point
    // itself has r = lambda with the deadline exactly met.
    s_hi = std::min(s_hi, phi / (tau - out_bits / lambda));
  }
  if (!(s_lo < s_hi)) {
    // Degenerate sliver: the QoS cap collapses onto phi/tau. The cap point is
    // still feasible and optimal (cpu energy grows beyond it, rate is pinned).
    finish(s_hi, out_bits / (tau - phi / s_hi));
    return plan;
  }

  const BoundaryObjective obj{phi, out_bits, mu, gamma_bw, tau, uav.alpha, uav.beta};

  int best = -1;
  double best_val = std::numeric_limits<double>::infinity();
  double grid[kScanPoints + 1];
  for (int k = 0; k <= kScanPoints; ++k) {
    grid[k] = s_lo + (s_hi - s_lo) * static_cast<double>(k) / kScanPoints;
    const double v = obj(grid[k]);
    if (v < best_val) {
      best_val = v;
      best = k;
    }
  }
  if (best < 0 || !std::isfinite(best_val)) return plan;

  const double a = grid[best > 0 ? best - 1 : 0];
  const double b = grid[best < kScanPoints ? best + 1 : kScanPoints];
  double s_opt = golden_min(obj, a, b);
  if (obj(s_opt) > best_val) s_opt = grid[best];  // refinement must not regress

  const double send_time = tau - phi / s_opt;
  finish(s_opt, out_bits / send_time);
  return plan;
}

EnergyBreakdown service_energy(const TaskRequest& task, const ServicePlan& plan,
                               const UavConfig& uav, const RadioEnv& radio) {
  if (!plan.feasible) throw std::logic_error("service_energy requires a feasible plan");
  EnergyBreakdown e;
  e.recv_j = uav.recv_energy_j_per_bit * task.input_bits;
  e.cpu_j = cpu_power(uav.alpha, uav.beta, plan.cpu_speed_gcps) * task.cycles_gc /
            plan.cpu_speed_gcps;
  const double r = downlink_rate(plan.downlink_power_w, plan.delivery_distance_m,
                                 radio.channel_gain_ref, radio.noise_power_w, radio.bandwidth_hz,
                                 radio.rate_efficiency);
  e.send_j = r > 0.0 ? plan.downlink_power_w * task.output_bits / r : 0.0;
  e.total_j = e.recv_j + e.cpu_j + e.send_j;
  return e;
}

}  // namespace uavmec
