#include "uavmec/assignment.hpp"

#include <algorithm>
#include <limits>

#include "uavmec/lyapunov.hpp"

namespace uavmec {

int free_channels(const ChannelLedger& ledger, int uav_index, int slot, int channels) {
  return channels - ledger.occupied(uav_index, slot);
}

WeightMatrix build_weight_matrix(const std::vector<TaskRequest>& tasks,
                                 const std::vector<ServicePlan>& plans,
                                 const std::vector<int>& free_channel_counts, double control_v,
                                 const std::vector<double>& queues_j) {
  WeightMatrix m;
  m.num_tasks = static_cast<int>(tasks.size());
  m.num_uavs = static_cast<int>(free_channel_counts.size());
  m.values.assign(static_cast<std::size_t>(m.num_tasks) * m.num_uavs, kInfeasibleWeight);
  for (int t = 0; t < m.num_tasks; ++t) {
    for (int u = 0; u < m.num_uavs; ++u) {
      if (free_channel_counts[u] <= 0) continue;
      const ServicePlan& plan = plans[static_cast<std::size_t>(u) * m.num_tasks + t];
      m.values[static_cast<std::size_t>(t) * m.num_uavs + u] =
          plan_weight(control_v, tasks[t].payment, queues_j[u], plan);
    }
  }
  return m;
}

namespace {

// Square Hungarian (Jonker-Volgenant potentials), minimizing cost. Rows and
// columns are 1-based internally; row_to_col[i] is the assigned column.
std::vector<int> hungarian_min(const std::vector<std::vector<double>>& cost) {
  const int n = static_cast<int>(cost.size());
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0);
  std::vector<int> p(n + 1, 0), way(n + 1, 0);
  for (int i = 1; i <= n; ++i) {
    p[0] = i;
    int j0 = 0;
    std::vector<double> minv(n + 1, std::numeric_limits<double>::infinity());
    std::vector<char> used(n + 1, 0);
    do {
      used[j0] = 1;
      const int i0 = p[j0];
      int j1 = 0;
      double delta = std::numeric_limits<double>::infinity();
      for (int j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost[i0 - 1][j - 1] - u[i0] - v[j];
        if (cur < minv[j]) {
          minv[j] = cur;
          way[j] = j0;
        }
        if (minv[j] < delta) {
          delta = minv[j];
          j1 = j;
        }
      }
      for (int j = 0; j <= n; ++j) {
        if (used[j]) {
          u[p[j]] += delta;
          v[j] -= delta;
        } else {
          minv[j] -= delta;
        }
      }
      j0 = j1;
    } while (p[j0] != 0);
    do {
      const int j1 = way[j0];
      p[j0] = p[j1];
      j0 = j1;
    } while (j0);
  }
  std::vector<int> row_to_col(n, -1);
  for (int j = 1; j <= n; ++j)
    if (p[j] > 0) row_to_col[p[j] - 1] = j - 1;
  return row_to_col;
}

}  // namespace

AssignmentSolution solve_assignment(const WeightMatrix& matrix,
                                    const std::vector<int>& free_channel_counts) {
  AssignmentSolution result;
  const int num_tasks = matrix.num_tasks;
  const int num_uavs = matrix.num_uavs;
  if (num_tasks == 0) return result;

  // Expand capacity: one column per free channel, in (uav, duplicate) order.
  std::vector<int> col_uav;
  for (int u = 0; u < num_uavs; ++u)
    for (int k = 0; k < free_channel_counts[u]; ++k) col_uav.push_back(u);
  const int real_cols = static_cast<int>(col_uav.size());
  if (real_cols == 0) return result;

  // Square profit matrix; dummy rows/columns carry the skip value 0, and so
  // do non-positive weights (they must never be picked; a skipped task is
  // worth exactly zero).
  const int n = std::max(num_tasks, real_cols);
  std::vector<std::vector<double>> cost(n, std::vector<double>(n, 0.0));
  for (int t = 0; t < num_tasks; ++t) {
    for (int c = 0; c < real_cols; ++c) {
      const double w = matrix.at(t, col_uav[c]);
      cost[t][c] = -std::max(w, 0.0);
    }
  }

  const std::vector<int> row_to_col = hungarian_min(cost);

  for (int t = 0; t < num_tasks; ++t) {
    const int c = row_to_col[t];
    if (c < 0 || c >= real_cols) continue;
    const double w = matrix.at(t, col_uav[c]);
    if (w > 0.0) result.matches.push_back({col_uav[c], t});
  }
  std::sort(result.matches.begin(), result.matches.end(), [](const Match& a, const Match& b) {
    return a.uav_index != b.uav_index ? a.uav_index < b.uav_index : a.task_index < b.task_index;
  });

  // Objective accumulated in task-index order so it is bit-identical to an
  // enumeration oracle selecting the same set.
  std::vector<const Match*> by_task(result.matches.size());
  for (std::size_t i = 0; i < result.matches.size(); ++i) by_task[i] = &result.matches[i];
  std::sort(by_task.begin(), by_task.end(),
            [](const Match* a, const Match* b) { return a->task_index < b->task_index; });
  for (const Match* m : by_task) result.objective += matrix.at(m->task_index, m->uav_index);
  return result;
}

}  // namespace uavmec
