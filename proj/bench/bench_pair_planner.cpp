// Benchmark of the data-parallel kernels against their serial references:
// the per-pair P3 planning matrix and the deployment quadrature. Also checks
// that both paths agree bitwise, which is the contract the simulator relies
// on for deterministic exports.

#include <chrono>
#include <cstdio>
#include <cstring>
#include <vector>

#include "uavmec/deployment.hpp"
#include "uavmec/pair_planner.hpp"
#include "uavmec/rng.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace uavmec;
using Clock = std::chrono::steady_clock;

namespace {

double ms_since(Clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
}

bool plans_equal(const std::vector<ServicePlan>& a, const std::vector<ServicePlan>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].feasible != b[i].feasible || a[i].energy_j != b[i].energy_j ||
        a[i].cpu_speed_gcps != b[i].cpu_speed_gcps ||
        a[i].downlink_power_w != b[i].downlink_power_w)
      return false;
  }
  return true;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads = %d\n", omp_get_max_threads());
#else
  std::printf("OpenMP not available, parallel path degrades to serial\n");
#endif

  RngStream rng(99, 50);
  const RadioEnv radio{1e-5, 1e-13, 1e6, 0.95};
  const int num_tasks = 512;
  const int num_uavs = 8;

  std::vector<TaskRequest> tasks(num_tasks);
  for (int t = 0; t < num_tasks; ++t) {
    tasks[t].task_id = t;
    tasks[t].input_bits = rng.uniform(4e6, 1e7);
    tasks[t].output_bits = rng.uniform(2e6, 1e7);
    tasks[t].cycles_gc = 1e-6 * tasks[t].input_bits;
    tasks[t].qos_bps = rng.uniform(2.56e5, 7.68e5);
    tasks[t].payment = rng.uniform(1.0, 10.0);
    tasks[t].position = {rng.uniform(0.0, 1000.0), rng.uniform(0.0, 1000.0)};
    tasks[t].velocity = {rng.uniform(-20.0, 20.0), rng.uniform(-20.0, 20.0)};
  }

  std::vector<UavState> uavs(num_uavs);
  std::vector<std::vector<Position>> trajectories(num_uavs);
  for (int u = 0; u < num_uavs; ++u) {
    uavs[u].config.id = u;
    uavs[u].config.coverage = {0.0, 1000.0, 0.0, 1000.0};
    uavs[u].config.altitude_m = 300.0;
    uavs[u].config.cpu_max_gcps = 10.0;
    uavs[u].config.alpha = 0.05;
    uavs[u].config.beta = 0.9;
    uavs[u].config.recv_energy_j_per_bit = 1e-8;
    uavs[u].position = {rng.uniform(0.0, 1000.0), rng.uniform(0.0, 1000.0)};
    trajectories[u].assign(8, uavs[u].position);
  }

  SlotPlanningInput input;
  input.slot = 0;
  input.slot_length_s = 5.0;
  input.vehicle_tx_power_w = 0.01;
  input.radio = radio;
  input.tasks = tasks;
  input.uavs = uavs;
  input.trajectories = trajectories;

  std::printf("pair planner: %d tasks x %d uavs = %d P3 solves per pass\n", num_tasks, num_uavs,
              num_tasks * num_uavs);
  constexpr int kPasses = 5;

  auto t0 = Clock::now();
  std::vector<ServicePlan> serial;
  for (int p = 0; p < kPasses; ++p) serial = plan_service_matrix_serial(input);
  const double serial_ms = ms_since(t0) / kPasses;

  t0 = Clock::now();
  std::vector<ServicePlan> parallel;
  for (int p = 0; p < kPasses; ++p) parallel = plan_service_matrix(input, ExecPolicy::Parallel);
  const double parallel_ms = ms_since(t0) / kPasses;

  std::printf("  serial   %8.2f ms/pass\n", serial_ms);
  std::printf("  parallel %8.2f ms/pass  (speedup %.2fx)\n", parallel_ms,
              serial_ms / parallel_ms);
  std::printf("  bitwise equal: %s\n", plans_equal(serial, parallel) ? "yes" : "NO");

  DensityGrid grid;
  grid.region = {0.0, 1000.0, 0.0, 1000.0};
  grid.nx = 1000;
  grid.ny = 1000;
  grid.weights.resize(1000000);
  for (double& w : grid.weights) w = rng.uniform(0.0, 1.0);
  grid.normalize();
  const RectRegion cov{100.0, 900.0, 100.0, 900.0};

  std::printf("quadrature: %dx%d grid\n", grid.nx, grid.ny);
  t0 = Clock::now();
  double qs = 0.0;
  for (int p = 0; p < kPasses; ++p)
    qs = guarantee_power_quadrature(grid, cov, cov.center(), 300.0, 3, 7.68e5, radio,
                                    ExecPolicy::Serial);
  const double q_serial_ms = ms_since(t0) / kPasses;

  t0 = Clock::now();
  double qp = 0.0;
  for (int p = 0; p < kPasses; ++p)
    qp = guarantee_power_quadrature(grid, cov, cov.center(), 300.0, 3, 7.68e5, radio,
                                    ExecPolicy::Parallel);
  const double q_parallel_ms = ms_since(t0) / kPasses;

  std::printf("  serial   %8.2f ms/pass\n", q_serial_ms);
  std::printf("  parallel %8.2f ms/pass  (speedup %.2fx)\n", q_parallel_ms,
              q_serial_ms / q_parallel_ms);
  std::printf("  bitwise equal: %s\n", qs == qp ? "yes" : "NO");

  return plans_equal(serial, parallel) && qs == qp ? 0 : 1;
}
