#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "support/oracles.hpp"
#include "uavmec/energy_opt.hpp"
#include "uavmec/rng.hpp"

using namespace uavmec;
using oracles::P3Instance;
using oracles::P3OracleResult;

namespace {

constexpr RadioEnv kRadio{1e-5, 1e-11, 1e6, 0.95};  // N0 d^2/g0 = 1e-6 d^2
constexpr double kTau = 5.0;

UavConfig test_uav() {
  UavConfig uav;
  uav.id = 0;
  uav.cpu_max_gcps = 10.0;
  uav.alpha = 0.05;
  uav.beta = 0.9;
  uav.recv_energy_j_per_bit = 1e-8;
  return uav;
}

TaskRequest test_task(double input_bits, double output_bits, double qos_bps) {
  TaskRequest t;
  t.input_bits = input_bits;
  t.output_bits = output_bits;
  t.cycles_gc = 1e-6 * input_bits;
  t.qos_bps = qos_bps;
  t.payment = 5.0;
  return t;
}

P3Instance to_instance(const TaskRequest& task, const UavConfig& uav, double d) {
  P3Instance inst;
  inst.phi_gc = task.cycles_gc;
  inst.input_bits = task.input_bits;
  inst.output_bits = task.output_bits;
  inst.qos_bps = task.qos_bps;
  inst.alpha = uav.alpha;
  inst.beta = uav.beta;
  inst.s_max = uav.cpu_max_gcps;
  inst.recv_j_per_bit = uav.recv_energy_j_per_bit;
  inst.mu = kRadio.noise_power_w * d * d / kRadio.channel_gain_ref;
  inst.gamma_bw = kRadio.rate_efficiency * kRadio.bandwidth_hz;
  inst.tau = kTau;
  return inst;
}

// Golden-section minimizer used as the independent oracle for the CPU-speed
// closed form.
double golden_cpu_oracle(double alpha, double beta, double phi, double s_max) {
  const auto f = [&](double s) { return (alpha * s * s * s + beta) * phi / s; };
  double a = 1e-6, b = s_max;
  const double inv_phi = 0.6180339887498948482;
  double c = b - (b - a) * inv_phi;
  double d = a + (b - a) * inv_phi;
  for (int i = 0; i < 120; ++i) {
    if (f(c) < f(d)) {
      b = d;
    } else {
      a = c;
    }
    c = b - (b - a) * inv_phi;
    d = a + (b - a) * inv_phi;
  }
  return 0.5 * (a + b);
}

}  // namespace

TEST_CASE("cpu power model") {
  CHECK_THROWS_AS(cpu_power(0.05, 0.9, 0.0), std::domain_error);
  CHECK(cpu_power(0.0, 0.9, 5.0) == doctest::Approx(0.9).epsilon(1e-12));
  CHECK(cpu_power(0.05, 0.9, 2.08008) == doctest::Approx(1.35).epsilon(1e-4));
}

TEST_CASE("optimal cpu speed matches golden-section oracle") {
  const double oracle = golden_cpu_oracle(0.05, 0.9, 4.0, 10.0);
  const double s = optimal_cpu_speed(0.05, 0.9, 10.0);
  CHECK(s == doctest::Approx(oracle).epsilon(1e-5));
  CHECK(s == doctest::Approx(2.0800838).epsilon(1e-5));
  CHECK(optimal_cpu_speed(0.05, 0.9, 1.5) == 1.5);  // clamps at s_max
  CHECK(optimal_cpu_speed(0.05, 0.0, 10.0) == 0.0);  // degenerate beta contract
}

TEST_CASE("solve_p3 closed-form branch: slack deadline keeps the per-variable optima") {
  // Small output: downlink at the QoS floor easily fits the slot.
  const TaskRequest task = test_task(4e6, 2e5, 2.56e5);
  const UavConfig uav = test_uav();
  const ServicePlan plan = solve_p3(task, uav, 300.0, 1, kTau, kRadio);
  REQUIRE(plan.feasible);
  CHECK(plan.cpu_speed_gcps == doctest::Approx(2.08008).epsilon(1e-5));
  CHECK(plan.downlink_rate_bps == doctest::Approx(2.56e5).epsilon(1e-12));
  // E^cpu = 1.35 * (4 / 2.08008)
  const double cpu_j = cpu_power(uav.alpha, uav.beta, plan.cpu_speed_gcps) * task.cycles_gc /
                       plan.cpu_speed_gcps;
  CHECK(cpu_j == doctest::Approx(2.596).epsilon(1e-3));

  const P3OracleResult oracle = oracles::p3_grid_oracle(to_instance(task, uav, 300.0), 400);
  REQUIRE(oracle.feasible);
  CHECK(plan.energy_j == doctest::Approx(oracle.energy_j).epsilon(1e-6));
}

TEST_CASE("solve_p3 boundary branch: deadline binds exactly") {
  // O / lambda = 7.81 s alone violates the one-slot deadline.
  const TaskRequest task = test_task(4e6, 2e6, 2.56e5);
  const UavConfig uav = test_uav();
  const ServicePlan plan = solve_p3(task, uav, 300.0, 1, kTau, kRadio);
  REQUIRE(plan.feasible);
  const double elapsed = task.cycles_gc / plan.cpu_speed_gcps +
                         task.output_bits / plan.downlink_rate_bps;
  CHECK(elapsed == doctest::Approx(kTau).epsilon(1e-9));
  CHECK(plan.downlink_rate_bps >= task.qos_bps);

  const P3OracleResult oracle = oracles::p3_grid_oracle(to_instance(task, uav, 300.0), 400);
  REQUIRE(oracle.feasible);
  CHECK(plan.energy_j == doctest::Approx(oracle.energy_j).epsilon(1e-6));
}

TEST_CASE("solve_p3 infeasible when cpu work exceeds the slot") {
  TaskRequest task = test_task(4e6, 2e6, 2.56e5);
  task.cycles_gc = 60.0;  // phi > tau * s_max = 50
  const ServicePlan plan = solve_p3(task, test_uav(), 300.0, 1, kTau, kRadio);
  CHECK_FALSE(plan.feasible);
}

TEST_CASE("solve_p3 beta = 0 uses the deadline-binding branch") {
  UavConfig uav = test_uav();
  uav.beta = 0.0;
  const TaskRequest task = test_task(4e6, 2e6, 2.56e5);
  const ServicePlan plan = solve_p3(task, uav, 300.0, 1, kTau, kRadio);
  REQUIRE(plan.feasible);
  const double elapsed = task.cycles_gc / plan.cpu_speed_gcps +
                         task.output_bits / plan.downlink_rate_bps;
  CHECK(elapsed == doctest::Approx(kTau).epsilon(1e-9));

  const P3OracleResult oracle = oracles::p3_grid_oracle(to_instance(task, uav, 300.0), 400);
  CHECK(plan.energy_j == doctest::Approx(oracle.energy_j).epsilon(1e-6));
}

TEST_CASE("service energy breakdown") {
  const TaskRequest task = test_task(4e6, 2e6, 2.56e5);
  const UavConfig uav = test_uav();
  const ServicePlan plan = solve_p3(task, uav, 300.0, 1, kTau, kRadio);
  REQUIRE(plan.feasible);
  const EnergyBreakdown e = service_energy(task, plan, uav, kRadio);
  CHECK(e.recv_j == doctest::Approx(0.04).epsilon(1e-12));  // 1e-8 * 4e6
  CHECK(e.total_j == doctest::Approx(e.recv_j + e.cpu_j + e.send_j).epsilon(1e-12));
  CHECK(e.total_j == doctest::Approx(plan.energy_j).epsilon(1e-9));

  ServicePlan bad;
  bad.feasible = false;
  CHECK_THROWS_AS(service_energy(task, bad, uav, kRadio), std::logic_error);
}

TEST_CASE("send energy components match direct arithmetic") {
  // send = P * O / r at the QoS floor: 0.018483 W for 7.8125 s.
  const double p = 0.018483;
  const double r = 2.56e5;
  const double send = p * 2e6 / r;
  CHECK(send == doctest::Approx(0.1444).epsilon(1e-3));
}

TEST_CASE("transmit energy is strictly increasing in power (finite differences)") {
  RngStream rng(2024, 9);
  for (int i = 0; i < 100; ++i) {
    const double d = rng.uniform(50.0, 1500.0);
    const double mu = kRadio.noise_power_w * d * d / kRadio.channel_gain_ref;
    const double out_bits = rng.uniform(1e5, 1e7);
    const double p = rng.uniform(1e-6, 5.0);
    const double gamma_bw = kRadio.rate_efficiency * kRadio.bandwidth_hz;
    const auto send_energy = [&](double power) {
      const double rate = gamma_bw * std::log2(1.0 + power / mu);
      return power * out_bits / rate;
    };
    CHECK(send_energy(p * (1.0 + 1e-6)) > send_energy(p));
  }
}

TEST_CASE("random instances: oracle equivalence and constraint compliance") {
  RngStream rng(31337, 10);
  int closed_form_hits = 0;
  int boundary_hits = 0;
  for (int i = 0; i < 120; ++i) {
    TaskRequest task = test_task(rng.uniform(1e6, 1e7), rng.uniform(1e5, 1e7),
                                 rng.uniform(1e5, 1e6));
    UavConfig uav = test_uav();
    uav.alpha = rng.uniform(0.02, 0.1);
    uav.beta = rng.uniform(0.3, 1.5);
    uav.cpu_max_gcps = rng.uniform(5.0, 12.0);
    const double d = rng.uniform(100.0, 1500.0);

    const ServicePlan plan = solve_p3(task, uav, d, 1, kTau, kRadio);
    const P3OracleResult oracle = oracles::p3_grid_oracle(to_instance(task, uav, d), 400);
    REQUIRE(plan.feasible == oracle.feasible);
    if (!plan.feasible) continue;

    CHECK(plan.energy_j == doctest::Approx(oracle.energy_j).epsilon(1e-6));
    CHECK(plan.cpu_speed_gcps <= uav.cpu_max_gcps * (1.0 + 1e-9));
    CHECK(plan.downlink_rate_bps >= task.qos_bps * (1.0 - 1e-9));
    const double elapsed = task.cycles_gc / plan.cpu_speed_gcps +
                           task.output_bits / plan.downlink_rate_bps;
    CHECK(elapsed <= kTau * (1.0 + 1e-9));

    const double s_star = optimal_cpu_speed(uav.alpha, uav.beta, uav.cpu_max_gcps);
    const bool closed_form_ok = task.cycles_gc / s_star + task.output_bits / task.qos_bps <= kTau;
    if (closed_form_ok) {
      ++closed_form_hits;
    } else {
      ++boundary_hits;
      // The deadline must bind exactly whenever the closed form fails.
      CHECK(elapsed == doctest::Approx(kTau).epsilon(1e-6));
    }
  }
  CHECK(closed_form_hits > 10);
  CHECK(boundary_hits > 10);
}

TEST_CASE("grid oracle agrees on infeasibility and refuses tiny grids") {
  TaskRequest task = test_task(4e6, 2e6, 2.56e5);
  task.cycles_gc = 60.0;  // beyond tau * s_max
  const UavConfig uav = test_uav();
  CHECK_FALSE(oracles::p3_grid_oracle(to_instance(task, uav, 300.0), 400).feasible);
  CHECK_THROWS_AS(oracles::p3_grid_oracle(to_instance(task, uav, 300.0), 50),
                  std::invalid_argument);
}

TEST_CASE("oracle reports pass exactly at the tolerance") {
  const auto ok = oracles::make_report("probe", 2.0, 2.0 + 1e-7, 1e-6);
  CHECK(ok.pass);
  CHECK(ok.relative_error == doctest::Approx(5e-8));
  const auto bad = oracles::make_report("probe", 2.0, 2.01, 1e-6);
  CHECK_FALSE(bad.pass);
}

TEST_CASE("grid oracle self-consistency across resolutions") {
  const TaskRequest task = test_task(6e6, 4e6, 4e5);
  const UavConfig uav = test_uav();
  const P3Instance inst = to_instance(task, uav, 500.0);
  const double coarse = oracles::p3_grid_oracle(inst, 100).energy_j;
  const double mid = oracles::p3_grid_oracle(inst, 200).energy_j;
  const double fine = oracles::p3_grid_oracle(inst, 400).energy_j;
  CHECK(coarse >= fine - 1e-9);
  CHECK(mid >= fine - 1e-9);
  CHECK(coarse == doctest::Approx(fine).epsilon(1e-6));
}
