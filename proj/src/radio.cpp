#include "uavmec/radio.hpp"

#include <cmath>
#include <stdexcept>

namespace uavmec {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0)) throw std::domain_error(std::string(name) + " must be > 0");
}

}  // namespace

double path_gain(double g0, double d_m) {
  require_positive(g0, "channel_gain_ref");
  require_positive(d_m, "distance");
  return g0 / (d_m * d_m);
}

double uplink_rate(double tx_power_w, double gain, double noise_w, double bandwidth_hz,
                   double gamma) {
  require_positive(tx_power_w, "tx_power_w");
  require_positive(gain, "gain");
  require_positive(noise_w, "noise_power_w");
  require_positive(bandwidth_hz, "bandwidth_hz");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::domain_error("rate_efficiency not in (0,1)");
  const double snr = tx_power_w * gain / noise_w;
  return gamma * bandwidth_hz * std::log2(1.0 + snr);
}

std::optional<int> upload_delay_slots(double input_bits, double rate_bps, double slot_length_s) {
  require_positive(input_bits, "input_bits");
  require_positive(slot_length_s, "slot_length_s");
  if (!(rate_bps > 0.0)) return std::nullopt;
  const double slots = input_bits / (rate_bps * slot_length_s);
  const double up = std::ceil(slots);
  if (up >= 2147483647.0) return std::nullopt;
  return std::max(1, static_cast<int>(up));
}

double downlink_rate(double power_w, double d_at_delivery_m, double g0, double noise_w,
                     double bandwidth_hz, double gamma) {
  if (power_w < 0.0) throw std::domain_error("power_w must be >= 0");
  require_positive(d_at_delivery_m, "delivery distance");
  require_positive(g0, "channel_gain_ref");
  require_positive(noise_w, "noise_power_w");
  require_positive(bandwidth_hz, "bandwidth_hz");
  if (!(gamma > 0.0 && gamma < 1.0)) throw std::domain_error("rate_efficiency not in (0,1)");
  const double snr = power_w * g0 / (d_at_delivery_m * d_at_delivery_m * noise_w);
  return gamma * bandwidth_hz * std::log2(1.0 + snr);
}

double min_downlink_power(double qos_bps, double d_at_delivery_m, double g0, double noise_w,
                          double bandwidth_hz, double gamma) {
  if (qos_bps < 0.0) throw std::domain_error("qos_bps must be >= 0");
  if (qos_bps == 0.0) return 0.0;
  require_positive(d_at_delivery_m, "delivery distance");
  const double exponent = qos_bps / (gamma * bandwidth_hz);
  const double factor = std::exp2(exponent) - 1.0;  // inf for absurd QoS is fine
  return factor * noise_w * d_at_delivery_m * d_at_delivery_m / g0;
}

}  // namespace uavmec
