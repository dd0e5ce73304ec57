#pragma once

#include "uavmec/types.hpp"

namespace uavmec {

struct VehicleState {
  int id = 0;
  Position position;
  Velocity velocity;  // straight path, fixed speed
};

// Linear extrapolation l(t + d) = l(t) + v * tau * d.
Position predict_position(const Position& pos, const Velocity& vel, double slot_length_s,
                          int delay_slots);

// A pair is admissible only if the vehicle sits inside the UAV coverage now
// and at upload completion. Rectangles are boundary-inclusive.
bool coverage_feasible(const TaskRequest& task, const UavConfig& uav, int delay_slots,
                       double slot_length_s);

// One-slot displacement limit: fly toward target, at most v_max * tau.
Position clamp_uav_move(const Position& current, const Position& target, double v_max,
                        double slot_length_s);

}  // namespace uavmec
