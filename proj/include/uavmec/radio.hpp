#pragma once

#include <optional>

#include "uavmec/types.hpp"

namespace uavmec {

// Air-to-ground LoS link geometry. The slant distance folds the hover
// altitude into the horizontal separation.
struct LinkGeometry {
  double horizontal_distance_m = 0.0;
  double altitude_m = 0.0;
  double slant_m() const {
    return std::hypot(horizontal_distance_m, altitude_m);
  }
};

inline LinkGeometry link_geometry(const Position& uav, const Position& vehicle, double altitude_m) {
  return {distance(uav, vehicle), altitude_m};
}

// Free-space channel power gain g0 * d^-2. Throws std::domain_error on d <= 0.
double path_gain(double g0, double d_m);

// Effective uplink rate gamma * W * log2(1 + P h / N0) in bits/second.
double uplink_rate(double tx_power_w, double gain, double noise_w, double bandwidth_hz,
                   double gamma);

// Whole slots needed to push input_bits at rate_bps; never less than one.
// A zero rate has no finite delay: nullopt, caller marks the pair infeasible.
std::optional<int> upload_delay_slots(double input_bits, double rate_bps, double slot_length_s);

// Downlink rate gamma * W * log2(1 + P g0 / (d^2 N0)) at the delivery-slot
// distance. Strictly increasing and invertible in power_w.
double downlink_rate(double power_w, double d_at_delivery_m, double g0, double noise_w,
                     double bandwidth_hz, double gamma);

// Minimum transmit power meeting a QoS floor: (2^(qos/(gamma W)) - 1) * N0 d^2 / g0.
double min_downlink_power(double qos_bps, double d_at_delivery_m, double g0, double noise_w,
                          double bandwidth_hz, double gamma);

}  // namespace uavmec
