#pragma once

#include <vector>

#include "uavmec/types.hpp"

namespace uavmec {

// Busy-until bookkeeping realizing the occupancy count y_i(t): a channel
// taken at slot t with upload delay d stays busy through slot t + d (upload
// slots plus the compute/downlink slot) and frees at the start of t + d + 1.
// Forward-only: entries are added at their assignment slot and queried at or
// after it.
class ChannelLedger {
 public:
  explicit ChannelLedger(std::size_t uav_count) : busy_until_(uav_count) {}

  void occupy(int uav_index, int busy_until_slot) {
    busy_until_[uav_index].push_back(busy_until_slot);
  }

  int occupied(int uav_index, int slot) const {
    int n = 0;
    for (int until : busy_until_[uav_index])
      if (until >= slot) ++n;
    return n;
  }

  // Drop entries that can never block again; keeps long runs O(c_i) per slot.
  void compact(int slot) {
    for (auto& entries : busy_until_) {
      std::erase_if(entries, [slot](int until) { return until < slot; });
    }
  }

  std::size_t uav_count() const { return busy_until_.size(); }

 private:
  std::vector<std::vector<int>> busy_until_;
};

int free_channels(const ChannelLedger& ledger, int uav_index, int slot, int channels);

// Row-major tasks x UAVs weight matrix with infeasible entries masked.
struct WeightMatrix {
  int num_tasks = 0;
  int num_uavs = 0;
  std::vector<double> values;  // num_tasks * num_uavs

  double at(int task, int uav) const { return values[task * num_uavs + uav]; }
};

// Entry = v_im for feasible pairs; kInfeasibleWeight for coverage- or
// deadline-infeasible pairs and for UAVs with no free channel.
WeightMatrix build_weight_matrix(const std::vector<TaskRequest>& tasks,
                                 const std::vector<ServicePlan>& plans,
                                 const std::vector<int>& free_channel_counts, double control_v,
                                 const std::vector<double>& queues_j);

struct Match {
  int uav_index = -1;
  int task_index = -1;
};

struct AssignmentSolution {
  std::vector<Match> matches;  // sorted by (uav_index, task_index)
  double objective = 0.0;      // sum of selected weights, task-index order
};

// Maximum-weight capacity-constrained matching. Each UAV column is expanded
// into one column per free channel and the square problem is solved exactly
// with the Hungarian algorithm. Only strictly positive weights are selected;
// skipping a task is always worth 0.
AssignmentSolution solve_assignment(const WeightMatrix& matrix,
                                    const std::vector<int>& free_channel_counts);

}  // namespace uavmec
