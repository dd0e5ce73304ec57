#include "uavmec/config.hpp"

#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

namespace uavmec {

namespace {

std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

class KeyValueReader {
 public:
  KeyValueReader(const std::string& text, std::vector<std::string>& errors) : errors_(errors) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
      ++lineno;
      const std::size_t hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      line = trim(line);
      if (line.empty()) continue;
      const std::size_t eq = line.find('=');
      if (eq == std::string::npos) {
        errors_.push_back("line " + std::to_string(lineno) + ": expected key = value");
        continue;
      }
      const std::string key = trim(line.substr(0, eq));
      const std::string value = trim(line.substr(eq + 1));
      if (key.empty() || value.empty()) {
        errors_.push_back("line " + std::to_string(lineno) + ": empty key or value");
        continue;
      }
      if (!entries_.emplace(key, value).second)
        errors_.push_back(key + ": duplicate key");
    }
  }

  std::optional<std::string> raw(const std::string& key) {
    auto it = entries_.find(key);
    if (it == entries_.end()) return std::nullopt;
    consumed_.insert(key);
    return it->second;
  }

  std::string require_string(const std::string& key) {
    auto v = raw(key);
    if (!v) {
      errors_.push_back(key + ": missing required key");
      return {};
    }
    return *v;
  }

  double require_double(const std::string& key) {
    auto v = raw(key);
    if (!v) {
      errors_.push_back(key + ": missing required key");
      return 0.0;
    }
    return parse_double(key, *v);
  }

  double optional_double(const std::string& key, double fallback) {
    auto v = raw(key);
    return v ? parse_double(key, *v) : fallback;
  }

  std::optional<double> maybe_double(const std::string& key) {
    auto v = raw(key);
    if (!v) return std::nullopt;
    return parse_double(key, *v);
  }

  long long require_int(const std::string& key) {
    const double d = require_double(key);
    if (d != static_cast<double>(static_cast<long long>(d)))
      errors_.push_back(key + ": expected an integer");
    return static_cast<long long>(d);
  }

  long long optional_int(const std::string& key, long long fallback) {
    auto v = raw(key);
    if (!v) return fallback;
    const double d = parse_double(key, *v);
    if (d != static_cast<double>(static_cast<long long>(d)))
      errors_.push_back(key + ": expected an integer");
    return static_cast<long long>(d);
  }

  bool has_prefix(const std::string& prefix) const {
    auto it = entries_.lower_bound(prefix);
    return it != entries_.end() && it->first.compare(0, prefix.size(), prefix) == 0;
  }

  void report_unknown() {
    for (const auto& [key, value] : entries_) {
      (void)value;
      if (!consumed_.count(key)) errors_.push_back(key + ": unknown key");
    }
  }

 private:
  double parse_double(const std::string& key, const std::string& text) {
    char* end = nullptr;
    const double v = std::strtod(text.c_str(), &end);
    if (end == text.c_str() || *end != '\0') {
      errors_.push_back(key + ": not a number: '" + text + "'");
      return 0.0;
    }
    return v;
  }

  std::map<std::string, std::string> entries_;
  std::set<std::string> consumed_;
  std::vector<std::string>& errors_;
};

RectRegion read_rect(KeyValueReader& kv, const std::string& prefix) {
  RectRegion r;
  r.x_min = kv.require_double(prefix + ".x_min");
  r.x_max = kv.require_double(prefix + ".x_max");
  r.y_min = kv.require_double(prefix + ".y_min");
  r.y_max = kv.require_double(prefix + ".y_max");
  return r;
}

Interval read_interval(KeyValueReader& kv, const std::string& prefix) {
  Interval v;
  v.min = kv.require_double(prefix + ".min");
  v.max = kv.require_double(prefix + ".max");
  return v;
}

}  // namespace

ScenarioParseResult parse_scenario(const std::string& text) {
  ScenarioParseResult result;
  KeyValueReader kv(text, result.errors);

  const std::string version = kv.require_string("schema_version");
  if (!version.empty() && version != "v1")
    result.errors.push_back("schema_version: unsupported version '" + version + "'");

  ScenarioConfig cfg;
  cfg.slot_length_s = kv.require_double("slot_length_s");
  cfg.num_slots = static_cast<int>(kv.require_int("num_slots"));
  cfg.region = read_rect(kv, "region");
  cfg.vehicle_count = static_cast<int>(kv.require_int("vehicle_count"));
  cfg.vehicle_speed_range_mps = read_interval(kv, "vehicle_speed_range_mps");
  cfg.task_gen_prob = kv.require_double("task_gen_prob");
  cfg.input_bits_range = read_interval(kv, "input_bits_range");
  cfg.output_bits_range = read_interval(kv, "output_bits_range");
  cfg.qos_range_bps = read_interval(kv, "qos_range_bps");
  cfg.payment_range = read_interval(kv, "payment_range");
  cfg.cycles_per_bit = kv.require_double("cycles_per_bit");
  cfg.vehicle_tx_power_w = kv.require_double("vehicle_tx_power_w");
  cfg.bandwidth_hz = kv.require_double("bandwidth_hz");
  cfg.channel_gain_ref = kv.require_double("channel_gain_ref");
  cfg.noise_power_w = kv.require_double("noise_power_w");
  cfg.rate_efficiency = kv.require_double("rate_efficiency");
  cfg.control_v = kv.require_double("control_v");
  cfg.rng_seed = static_cast<std::uint64_t>(kv.require_int("rng_seed"));

  const std::string mode = [&] {
    auto raw = kv.raw("density.mode");
    return raw ? *raw : std::string("uniform");
  }();
  if (mode == "uniform") {
    cfg.density.mode = DensitySpec::Mode::Uniform;
  } else if (mode == "hotspot") {
    cfg.density.mode = DensitySpec::Mode::Hotspot;
  } else {
    result.errors.push_back("density.mode: expected uniform or hotspot");
  }
  cfg.density.hotspot_sigma_m =
      kv.optional_double("density.hotspot_sigma_m", cfg.density.hotspot_sigma_m);
  cfg.density.hotspot_weight =
      kv.optional_double("density.hotspot_weight", cfg.density.hotspot_weight);
  cfg.density.hotspot_radius_frac =
      kv.optional_double("density.hotspot_radius_frac", cfg.density.hotspot_radius_frac);
  cfg.density.hotspot_period_slots =
      kv.optional_double("density.hotspot_period_slots", cfg.density.hotspot_period_slots);

  cfg.planner.grid_nx = static_cast<int>(kv.optional_int("planner.grid_nx", cfg.planner.grid_nx));
  cfg.planner.grid_ny = static_cast<int>(kv.optional_int("planner.grid_ny", cfg.planner.grid_ny));
  const std::string source = [&] {
    auto raw = kv.raw("planner.density_source");
    return raw ? *raw : std::string("oracle");
  }();
  if (source == "oracle") {
    cfg.planner.density_source = PlannerSpec::Source::Oracle;
  } else if (source == "empirical") {
    cfg.planner.density_source = PlannerSpec::Source::Empirical;
  } else {
    result.errors.push_back("planner.density_source: expected oracle or empirical");
  }

  for (int i = 0;; ++i) {
    const std::string prefix = "uav." + std::to_string(i);
    if (!kv.has_prefix(prefix + ".")) break;
    UavConfig uav;
    uav.id = static_cast<int>(kv.optional_int(prefix + ".id", i));
    uav.coverage = read_rect(kv, prefix + ".coverage");
    uav.altitude_m = kv.require_double(prefix + ".altitude_m");
    uav.max_speed_mps = kv.require_double(prefix + ".max_speed_mps");
    uav.channels = static_cast<int>(kv.require_int(prefix + ".channels"));
    uav.cpu_max_gcps = kv.require_double(prefix + ".cpu_max_gcps");
    uav.alpha = kv.require_double(prefix + ".alpha");
    uav.beta = kv.require_double(prefix + ".beta");
    uav.recv_energy_j_per_bit = kv.require_double(prefix + ".recv_energy_j_per_bit");
    uav.battery_target_j = kv.maybe_double(prefix + ".battery_target_j");
    uav.harvest_max_w = kv.require_double(prefix + ".harvest_max_w");
    uav.harvest_mean_w = kv.require_double(prefix + ".harvest_mean_w");
    const auto sx = kv.maybe_double(prefix + ".start_x");
    const auto sy = kv.maybe_double(prefix + ".start_y");
    if (sx.has_value() != sy.has_value())
      result.errors.push_back(prefix + ": start_x and start_y must both be given");
    if (sx && sy) uav.start = Position{*sx, *sy};
    cfg.uav_configs.push_back(uav);
  }

  kv.report_unknown();
  if (result.errors.empty()) result.config = cfg;
  return result;
}

ScenarioParseResult load_scenario(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    ScenarioParseResult r;
    r.errors.push_back(path + ": cannot open file");
    return r;
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_scenario(buf.str());
}

std::string serialize_scenario(const ScenarioConfig& cfg) {
  std::ostringstream out;
  const auto put = [&](const std::string& key, const std::string& value) {
    out << key << " = " << value << "\n";
  };
  const auto put_d = [&](const std::string& key, double v) { put(key, fmt_double(v)); };
  const auto put_i = [&](const std::string& key, long long v) { put(key, std::to_string(v)); };
  const auto put_rect = [&](const std::string& p, const RectRegion& r) {
    put_d(p + ".x_min", r.x_min);
    put_d(p + ".x_max", r.x_max);
    put_d(p + ".y_min", r.y_min);
    put_d(p + ".y_max", r.y_max);
  };
  const auto put_range = [&](const std::string& p, const Interval& v) {
    put_d(p + ".min", v.min);
    put_d(p + ".max", v.max);
  };

  put("schema_version", "v1");
  put_d("slot_length_s", cfg.slot_length_s);
  put_i("num_slots", cfg.num_slots);
  put_rect("region", cfg.region);
  put_i("vehicle_count", cfg.vehicle_count);
  put_range("vehicle_speed_range_mps", cfg.vehicle_speed_range_mps);
  put_d("task_gen_prob", cfg.task_gen_prob);
  put_range("input_bits_range", cfg.input_bits_range);
  put_range("output_bits_range", cfg.output_bits_range);
  put_range("qos_range_bps", cfg.qos_range_bps);
  put_range("payment_range", cfg.payment_range);
  put_d("cycles_per_bit", cfg.cycles_per_bit);
  put_d("vehicle_tx_power_w", cfg.vehicle_tx_power_w);
  put_d("bandwidth_hz", cfg.bandwidth_hz);
  put_d("channel_gain_ref", cfg.channel_gain_ref);
  put_d("noise_power_w", cfg.noise_power_w);
  put_d("rate_efficiency", cfg.rate_efficiency);
  put_d("control_v", cfg.control_v);
  put_i("rng_seed", static_cast<long long>(cfg.rng_seed));
  put("density.mode", cfg.density.mode == DensitySpec::Mode::Hotspot ? "hotspot" : "uniform");
  put_d("density.hotspot_sigma_m", cfg.density.hotspot_sigma_m);
  put_d("density.hotspot_weight", cfg.density.hotspot_weight);
  put_d("density.hotspot_radius_frac", cfg.density.hotspot_radius_frac);
  put_d("density.hotspot_period_slots", cfg.density.hotspot_period_slots);
  put_i("planner.grid_nx", cfg.planner.grid_nx);
  put_i("planner.grid_ny", cfg.planner.grid_ny);
  put("planner.density_source",
      cfg.planner.density_source == PlannerSpec::Source::Empirical ? "empirical" : "oracle");
  for (std::size_t i = 0; i < cfg.uav_configs.size(); ++i) {
    const UavConfig& uav = cfg.uav_configs[i];
    const std::string p = "uav." + std::to_string(i);
    put_i(p + ".id", uav.id);
    put_rect(p + ".coverage", uav.coverage);
    put_d(p + ".altitude_m", uav.altitude_m);
    put_d(p + ".max_speed_mps", uav.max_speed_mps);
    put_i(p + ".channels", uav.channels);
    put_d(p + ".cpu_max_gcps", uav.cpu_max_gcps);
    put_d(p + ".alpha", uav.alpha);
    put_d(p + ".beta", uav.beta);
    put_d(p + ".recv_energy_j_per_bit", uav.recv_energy_j_per_bit);
    if (uav.battery_target_j) put_d(p + ".battery_target_j", *uav.battery_target_j);
    put_d(p + ".harvest_max_w", uav.harvest_max_w);
    put_d(p + ".harvest_mean_w", uav.harvest_mean_w);
    if (uav.start) {
      put_d(p + ".start_x", uav.start->x);
      put_d(p + ".start_y", uav.start->y);
    }
  }
  return out.str();
}

std::vector<std::string> validate_config(const ScenarioConfig& cfg) {
  std::vector<std::string> v;
  const auto need = [&](bool ok, const std::string& msg) {
    if (!ok) v.push_back(msg);
  };

  need(cfg.slot_length_s > 0.0, "slot_length_s must be > 0");
  need(cfg.num_slots >= 0, "num_slots must be >= 0");
  need(cfg.region.valid(), "region: x_min < x_max and y_min < y_max required");
  need(cfg.vehicle_count >= 0, "vehicle_count must be >= 0");
  need(cfg.vehicle_speed_range_mps.valid(), "vehicle_speed_range_mps: min > max");
  need(cfg.vehicle_speed_range_mps.min >= 0.0, "vehicle_speed_range_mps.min must be >= 0");
  need(cfg.task_gen_prob >= 0.0 && cfg.task_gen_prob <= 1.0, "task_gen_prob not in [0,1]");
  need(cfg.input_bits_range.valid(), "input_bits_range: min > max");
  need(cfg.input_bits_range.min > 0.0, "input_bits_range.min must be > 0");
  need(cfg.output_bits_range.valid(), "output_bits_range: min > max");
  need(cfg.output_bits_range.min > 0.0, "output_bits_range.min must be > 0");
  need(cfg.qos_range_bps.valid(), "qos_range_bps: min > max");
  need(cfg.qos_range_bps.min > 0.0, "qos_range_bps.min must be > 0");
  need(cfg.payment_range.valid(), "payment_range: min > max");
  need(cfg.payment_range.min > 0.0, "payment_range.min must be > 0");
  need(cfg.cycles_per_bit > 0.0, "cycles_per_bit must be > 0");
  need(cfg.vehicle_tx_power_w > 0.0, "vehicle_tx_power_w must be > 0");
  need(cfg.bandwidth_hz > 0.0, "bandwidth_hz must be > 0");
  need(cfg.channel_gain_ref > 0.0, "channel_gain_ref must be > 0");
  need(cfg.noise_power_w > 0.0, "noise_power_w must be > 0");
  need(cfg.rate_efficiency > 0.0 && cfg.rate_efficiency < 1.0, "rate_efficiency not in (0,1)");
  need(cfg.control_v >= 0.0, "control_v must be >= 0");

  if (cfg.density.mode == DensitySpec::Mode::Hotspot) {
    need(cfg.density.hotspot_sigma_m > 0.0, "density.hotspot_sigma_m must be > 0");
    need(cfg.density.hotspot_weight >= 0.0 && cfg.density.hotspot_weight <= 1.0,
         "density.hotspot_weight not in [0,1]");
    need(cfg.density.hotspot_radius_frac >= 0.0 && cfg.density.hotspot_radius_frac <= 1.0,
         "density.hotspot_radius_frac not in [0,1]");
    need(cfg.density.hotspot_period_slots > 0.0, "density.hotspot_period_slots must be > 0");
  }
  need(cfg.planner.grid_nx >= 1, "planner.grid_nx must be >= 1");
  need(cfg.planner.grid_ny >= 1, "planner.grid_ny must be >= 1");

  std::set<int> ids;
  for (std::size_t i = 0; i < cfg.uav_configs.size(); ++i) {
    const UavConfig& uav = cfg.uav_configs[i];
    const std::string p = "uav[" + std::to_string(i) + "].";
    need(ids.insert(uav.id).second, p + "id duplicated");
    need(uav.coverage.valid(), p + "coverage: x_min < x_max and y_min < y_max required");
    if (cfg.region.valid() && uav.coverage.valid())
      need(cfg.region.contains(uav.coverage), p + "coverage not contained in region");
    need(uav.altitude_m > 0.0, p + "altitude_m must be > 0");
    need(uav.max_speed_mps > 0.0, p + "max_speed_mps must be > 0");
    need(uav.channels >= 1, p + "channels must be >= 1");
    need(uav.cpu_max_gcps > 0.0, p + "cpu_max_gcps must be > 0");
    need(uav.alpha > 0.0, p + "alpha must be > 0");
    need(uav.beta >= 0.0, p + "beta must be >= 0");
    need(uav.recv_energy_j_per_bit >= 0.0, p + "recv_energy_j_per_bit must be >= 0");
    need(uav.harvest_max_w >= 0.0, p + "harvest_max_w must be >= 0");
    need(uav.harvest_mean_w >= 0.0, p + "harvest_mean_w must be >= 0");
    if (uav.battery_target_j) need(*uav.battery_target_j > 0.0, p + "battery_target_j must be > 0");
    if (uav.start && uav.coverage.valid())
      need(uav.coverage.contains(*uav.start), p + "start not inside coverage");
  }
  return v;
}

}  // namespace uavmec
