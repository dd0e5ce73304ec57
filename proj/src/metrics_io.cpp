#include "uavmec/metrics_io.hpp"

#include <cstdio>
#include <stdexcept>

namespace uavmec {

namespace {

void append_double(std::string& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  out += buf;
}

}  // namespace

std::string render_metrics(const RunSummary& summary) {
  const std::size_t num_uavs = summary.config.uav_configs.size();
  std::string out = "run_id,algorithm,seed,slot,remuneration_cum,utility_cum";
  for (std::size_t i = 0; i < num_uavs; ++i) out += ",battery_" + std::to_string(i);
  for (std::size_t i = 0; i < num_uavs; ++i) out += ",free_channels_" + std::to_string(i);
  out += ",tasks_served_cum\n";

  long served_cum = 0;
  for (std::size_t t = 0; t < summary.slots.size(); ++t) {
    const SlotMetrics& m = summary.slots[t];
    served_cum += m.tasks_served;
    out += summary.run_id;
    out += ',';
    out += summary.algorithm;
    out += ',';
    out += std::to_string(summary.seed);
    out += ',';
    out += std::to_string(m.slot);
    out += ',';
    append_double(out, summary.remuneration_cum[t]);
    out += ',';
    append_double(out, summary.utility_cum[t]);
    for (std::size_t i = 0; i < num_uavs; ++i) {
      out += ',';
      append_double(out, m.battery_j[i]);
    }
    for (std::size_t i = 0; i < num_uavs; ++i) {
      out += ',';
      out += std::to_string(m.free_channels[i]);
    }
    out += ',';
    out += std::to_string(served_cum);
    out += '\n';
  }
  return out;
}

void export_metrics(const RunSummary& summary, const std::string& path) {
  const std::string body = render_metrics(summary);
  std::FILE* f = std::fopen(path.c_str(), "wb");
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  const std::size_t written = std::fwrite(body.data(), 1, body.size(), f);
  const int closed = std::fclose(f);
  if (written != body.size() || closed != 0)
    throw std::runtime_error("short write to " + path);
}

}  // namespace uavmec
