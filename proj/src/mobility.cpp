#include "uavmec/mobility.hpp"

#include <cmath>

namespace uavmec {

Position predict_position(const Position& pos, const Velocity& vel, double slot_length_s,
                          int delay_slots) {
  const double dt = slot_length_s * static_cast<double>(delay_slots);
  return {pos.x + vel.vx * dt, pos.y + vel.vy * dt};
}

bool coverage_feasible(const TaskRequest& task, const UavConfig& uav, int delay_slots,
                       double slot_length_s) {
  if (!uav.coverage.contains(task.position)) return false;
  const Position later = predict_position(task.position, task.velocity, slot_length_s,
                                          delay_slots);
  return uav.coverage.contains(later);
}

Position clamp_uav_move(const Position& current, const Position& target, double v_max,
                        double slot_length_s) {
  const double reach = v_max * slot_length_s;
  const double dx = target.x - current.x;
  const double dy = target.y - current.y;
  const double dist = std::hypot(dx, dy);
  if (dist <= reach) return target;
  const double scale = reach / dist;
  return {current.x + dx * scale, current.y + dy * scale};
}

}  // namespace uavmec
