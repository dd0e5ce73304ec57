#include "uavmec/deployment.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "uavmec/mobility.hpp"

namespace uavmec {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

double overlap_fraction(double cx_min, double cx_max, double cy_min, double cy_max,
                        const RectRegion& cov) {
  const double ox = std::max(0.0, std::min(cx_max, cov.x_max) - std::max(cx_min, cov.x_min));
  const double oy = std::max(0.0, std::min(cy_max, cov.y_max) - std::max(cy_min, cov.y_min));
  return ox * oy / ((cx_max - cx_min) * (cy_max - cy_min));
}

// Row partials first, one serial combine after: the parallel path sums in
// exactly the same order as the serial reference.
template <typename RowTerm>
std::vector<double> row_partials(int ny, ExecPolicy policy, const RowTerm& term) {
  std::vector<double> rows(static_cast<std::size_t>(ny), 0.0);
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int iy = 0; iy < ny; ++iy) rows[iy] = term(iy);
  } else {
    for (int iy = 0; iy < ny; ++iy) rows[iy] = term(iy);
  }
  return rows;
}

double serial_sum(const std::vector<double>& v) {
  double acc = 0.0;
  for (double x : v) acc += x;
  return acc;
}

}  // namespace

void DensityGrid::normalize() {
  double total = 0.0;
  for (double w : weights) total += w;
  if (!(total > 0.0)) throw std::domain_error("density grid has no mass");
  for (double& w : weights) w /= total;
}

Position density_hotspot_center(const ScenarioConfig& cfg, int slot) {
  const Position c = cfg.region.center();
  if (cfg.density.mode != DensitySpec::Mode::Hotspot) return c;
  const double radius = cfg.density.hotspot_radius_frac *
                        0.5 * std::min(cfg.region.width(), cfg.region.height());
  const double phase = kTwoPi * static_cast<double>(slot) / cfg.density.hotspot_period_slots;
  return {c.x + radius * std::cos(phase), c.y + radius * std::sin(phase)};
}

double density_value(const ScenarioConfig& cfg, int slot, const Position& p) {
  const double uniform = 1.0 / cfg.region.area();
  if (cfg.density.mode == DensitySpec::Mode::Uniform) return uniform;
  const double w = cfg.density.hotspot_weight;
  const double sigma = cfg.density.hotspot_sigma_m;
  const Position c = density_hotspot_center(cfg, slot);
  const double dx = p.x - c.x;
  const double dy = p.y - c.y;
  const double gauss =
      std::exp(-(dx * dx + dy * dy) / (2.0 * sigma * sigma)) / (kTwoPi * sigma * sigma);
  return (1.0 - w) * uniform + w * gauss;
}

DensityGrid oracle_grid(const ScenarioConfig& cfg, int slot) {
  DensityGrid g;
  g.region = cfg.region;
  g.nx = cfg.planner.grid_nx;
  g.ny = cfg.planner.grid_ny;
  g.weights.assign(static_cast<std::size_t>(g.nx) * g.ny, 0.0);
  for (int iy = 0; iy < g.ny; ++iy)
    for (int ix = 0; ix < g.nx; ++ix) g.at(ix, iy) = density_value(cfg, slot, g.cell_center(ix, iy));
  g.normalize();
  return g;
}

DensityGrid histogram_grid(const std::vector<Position>& positions, const RectRegion& region,
                           int nx, int ny) {
  DensityGrid g;
  g.region = region;
  g.nx = nx;
  g.ny = ny;
  g.weights.assign(static_cast<std::size_t>(nx) * ny, 1.0);  // Laplace smoothing
  for (const Position& p : positions) {
    int ix = static_cast<int>((p.x - region.x_min) / region.width() * nx);
    int iy = static_cast<int>((p.y - region.y_min) / region.height() * ny);
    ix = std::clamp(ix, 0, nx - 1);
    iy = std::clamp(iy, 0, ny - 1);
    g.at(ix, iy) += 1.0;
  }
  g.normalize();
  return g;
}

Position centroid_target(const DensityGrid& grid, const RectRegion& coverage, ExecPolicy policy) {
  const double cw = grid.cell_width();
  const double ch = grid.cell_height();
  struct Row {
    double mass, mx, my;
  };
  std::vector<Row> rows(static_cast<std::size_t>(grid.ny));
  const auto row_term = [&](int iy) {
    Row r{0.0, 0.0, 0.0};
    const double cy_min = grid.region.y_min + iy * ch;
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double cx_min = grid.region.x_min + ix * cw;
      const double f = overlap_fraction(cx_min, cx_min + cw, cy_min, cy_min + ch, coverage);
      if (f <= 0.0) continue;
      const double mass = grid.at(ix, iy) * f;
      const Position c = grid.cell_center(ix, iy);
      r.mass += mass;
      r.mx += mass * c.x;
      r.my += mass * c.y;
    }
    return r;
  };
  if (policy == ExecPolicy::Parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
#endif
    for (int iy = 0; iy < grid.ny; ++iy) rows[iy] = row_term(iy);
  } else {
    for (int iy = 0; iy < grid.ny; ++iy) rows[iy] = row_term(iy);
  }
  double mass = 0.0, mx = 0.0, my = 0.0;
  for (const Row& r : rows) {
    mass += r.mass;
    mx += r.mx;
    my += r.my;
  }
  if (!(mass > 0.0)) return coverage.center();
  return {mx / mass, my / mass};
}

double guarantee_power_quadrature(const DensityGrid& grid, const RectRegion& coverage,
                                  const Position& uav_pos, double altitude_m, int channels,
                                  double lambda_max_bps, const RadioEnv& radio,
                                  ExecPolicy policy) {
  const double cw = grid.cell_width();
  const double ch = grid.cell_height();
  const double gamma_bw = radio.rate_efficiency * radio.bandwidth_hz;
  const double qos_factor = std::exp2(lambda_max_bps / gamma_bw) - 1.0;
  const double scale = qos_factor * radio.noise_power_w / radio.channel_gain_ref *
                       static_cast<double>(channels);
  const auto row_term = [&](int iy) {
    double acc = 0.0;
    const double cy_min = grid.region.y_min + iy * ch;
    for (int ix = 0; ix < grid.nx; ++ix) {
      const double cx_min = grid.region.x_min + ix * cw;
      const double f = overlap_fraction(cx_min, cx_min + cw, cy_min, cy_min + ch, coverage);
      if (f <= 0.0) continue;
      const Position c = grid.cell_center(ix, iy);
      const double dx = c.x - uav_pos.x;
      const double dy = c.y - uav_pos.y;
      const double d2 = dx * dx + dy * dy + altitude_m * altitude_m;
      acc += grid.at(ix, iy) * f * d2;
    }
    return acc;
  };
  return scale * serial_sum(row_partials(grid.ny, policy, row_term));
}

double avg_transmit_power(const DensityGrid& grid, const std::vector<Position>& uav_positions,
                          const std::vector<UavConfig>& uav_configs, double lambda_max_bps,
                          const RadioEnv& radio, ExecPolicy policy) {
  double z_total = 0.0;
  double channel_total = 0.0;
  for (std::size_t i = 0; i < uav_configs.size(); ++i) {
    z_total += guarantee_power_quadrature(grid, uav_configs[i].coverage, uav_positions[i],
                                          uav_configs[i].altitude_m, uav_configs[i].channels,
                                          lambda_max_bps, radio, policy);
    channel_total += static_cast<double>(uav_configs[i].channels);
  }
  return z_total / channel_total;
}

std::vector<std::vector<Position>> plan_trajectory(
    const std::function<const DensityGrid&(int)>& grid_for, int num_slots,
    const std::vector<UavConfig>& uavs, double slot_length_s, ExecPolicy policy) {
  std::vector<std::vector<Position>> traj(uavs.size());
  std::vector<Position> current(uavs.size());
  for (std::size_t i = 0; i < uavs.size(); ++i) {
    current[i] = uavs[i].start.value_or(uavs[i].coverage.center());
    traj[i].reserve(static_cast<std::size_t>(num_slots));
  }
  for (int t = 0; t < num_slots; ++t) {
    const DensityGrid& grid = grid_for(t);
    for (std::size_t i = 0; i < uavs.size(); ++i) {
      const Position target = centroid_target(grid, uavs[i].coverage, policy);
      current[i] = clamp_uav_move(current[i], target, uavs[i].max_speed_mps, slot_length_s);
      traj[i].push_back(current[i]);
    }
  }
  return traj;
}

std::vector<std::vector<Position>> plan_trajectory_oracle(const ScenarioConfig& cfg,
                                                          ExecPolicy policy) {
  if (cfg.density.mode == DensitySpec::Mode::Uniform) {
    const DensityGrid grid = oracle_grid(cfg, 0);
    return plan_trajectory([&](int) -> const DensityGrid& { return grid; }, cfg.num_slots,
                           cfg.uav_configs, cfg.slot_length_s, policy);
  }
  DensityGrid scratch;
  return plan_trajectory(
      [&](int t) -> const DensityGrid& {
        scratch = oracle_grid(cfg, t);
        return scratch;
      },
      cfg.num_slots, cfg.uav_configs, cfg.slot_length_s, policy);
}

void write_plan_csv(const std::vector<std::vector<Position>>& trajectories,
                    const std::vector<UavConfig>& uavs, const std::string& path) {
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  std::fputs("slot,uav_id,x,y\n", f);
  const int num_slots = trajectories.empty() ? 0 : static_cast<int>(trajectories[0].size());
  for (int t = 0; t < num_slots; ++t) {
    for (std::size_t i = 0; i < trajectories.size(); ++i) {
      std::fprintf(f, "%d,%d,%.9g,%.9g\n", t, uavs[i].id, trajectories[i][t].x,
                   trajectories[i][t].y);
    }
  }
  std::fclose(f);
}

}  // namespace uavmec
