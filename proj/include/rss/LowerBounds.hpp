#ifndef RSS_LOWER_BOUNDS_HPP
#define RSS_LOWER_BOUNDS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "rss/Sdp.hpp"

namespace rss {

/// Plan-independent lower bounds MC_t(I) on the cost accrued over periods
/// 1..t when the post-order position of period t is I, computed by a
/// forward DP over the same grid as the stage recursion.
struct BoundTable {
  struct Row {
    int period = 1;
    int lowLevel = 0;
    std::vector<double> value;     // MC_t over [lowLevel, grid.maxLevel]
    std::vector<double> minBelow;  // min_{j < I} MC_t(j), +inf at the band bottom
    std::vector<double> minAbove;  // min_{j >= I} MC_t(j)
    // pairing row for the pruning test at stage t+1: the value of MC_t is a
    // bound given the period-t post-order position, while the stage cost is
    // indexed by the period-t closing level, which sits up to one demand
    // support below it. Pairing the raw values over-charges at levels where
    // MC_t falls with the position and can cut optimal plans; the sound row
    // takes min_{j in [I, I + supportMax(d_t)]} MC_t(j).
    std::vector<double> pairing;
  };

  std::vector<Row> rows;             // index t-1, t = 1..T
  std::int64_t statesComputed = 0;   // total (t, I) cells touched

  const Row& row(int period) const { return rows[period - 1]; }
};

/// Forward bound DP. The ordering branch charges W + K and may come from
/// any strictly lower position; the no-order branch comes from any position
/// at or above. Unit cost is left out of the bound.
BoundTable computeMcBounds(const SdpSolver& solver);

/// Running minima of a row: below[i] = min over j < i (+inf at i = 0),
/// above[i] = min over j >= i.
std::pair<std::vector<double>, std::vector<double>> prefixMinima(const std::vector<double>& row);

}  // namespace rss

#endif  // RSS_LOWER_BOUNDS_HPP
