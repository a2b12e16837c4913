#include "rss/LowerBounds.hpp"

#include <algorithm>
#include <deque>
#include <limits>

namespace rss {

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();

void fillMinima(BoundTable::Row& row) {
  const std::size_t n = row.value.size();
  row.minBelow.resize(n);
  row.minAbove.resize(n);
  double running = kInf;
  for (std::size_t i = 0; i < n; ++i) {
    row.minBelow[i] = running;
    running = std::min(running, row.value[i]);
  }
  running = kInf;
  for (std::size_t i = n; i-- > 0;) {
    running = std::min(running, row.value[i]);
    row.minAbove[i] = running;
  }
}

// sliding-window minimum over [i, i + window] with a monotone deque
void fillPairing(BoundTable::Row& row, int window) {
  const int n = static_cast<int>(row.value.size());
  row.pairing.resize(n);
  std::deque<int> order;
  for (int i = n - 1; i >= 0; --i) {
    while (!order.empty() && row.value[order.back()] >= row.value[i]) order.pop_back();
    order.push_back(i);
    while (order.front() > i + window) order.pop_front();
    row.pairing[i] = row.value[order.front()];
  }
}
}  // namespace

std::pair<std::vector<double>, std::vector<double>> prefixMinima(const std::vector<double>& row) {
  BoundTable::Row tmp;
  tmp.value = row;
  fillMinima(tmp);
  return {std::move(tmp.minBelow), std::move(tmp.minAbove)};
}

BoundTable computeMcBounds(const SdpSolver& solver) {
  const Instance& inst = solver.instance();
  const InventoryGrid& grid = solver.grid();
  const double orderCharge = inst.reviewCost + inst.fixedOrderCost;

  BoundTable table;
  table.rows.resize(inst.periods);

  {
    BoundTable::Row& first = table.rows[0];
    first.period = 1;
    first.lowLevel = grid.lowAt(1);
    first.value.resize(grid.maxLevel - first.lowLevel + 1);
    for (int pos = first.lowLevel; pos <= grid.maxLevel; ++pos) {
      double value = solver.periodLoss(1, pos);
      if (pos > inst.initialInventory) value += orderCharge;
      first.value[pos - first.lowLevel] = value;
    }
    fillMinima(first);
    fillPairing(first, solver.demands()[0].supportMax);
    table.statesComputed += static_cast<std::int64_t>(first.value.size());
  }

  for (int t = 2; t <= inst.periods; ++t) {
    const BoundTable::Row& prev = table.rows[t - 2];
    BoundTable::Row& row = table.rows[t - 1];
    row.period = t;
    row.lowLevel = grid.lowAt(t);
    row.value.resize(grid.maxLevel - row.lowLevel + 1);
    const double prevGlobalMin = prev.minAbove.empty() ? kInf : prev.minAbove[0];
    for (int pos = row.lowLevel; pos <= grid.maxLevel; ++pos) {
      double below = kInf;
      double above = prevGlobalMin;
      if (pos >= prev.lowLevel) {
        below = prev.minBelow[pos - prev.lowLevel];
        above = prev.minAbove[pos - prev.lowLevel];
      }
      const double loss = solver.periodLoss(t, pos);
      row.value[pos - row.lowLevel] = std::min(orderCharge + loss + below, loss + above);
    }
    fillMinima(row);
    fillPairing(row, solver.demands()[t - 1].supportMax);
    table.statesComputed += static_cast<std::int64_t>(row.value.size());
  }
  return table;
}

}  // namespace rss
