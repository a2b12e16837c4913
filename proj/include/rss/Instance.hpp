#ifndef RSS_INSTANCE_HPP
#define RSS_INSTANCE_HPP

#include <vector>

namespace rss {

/// One problem instance of the finite-horizon stochastic lot-sizing model.
///
/// Demand in period t is Poisson with mean demandMeans[t-1], truncated at
/// the 1 - pmfEpsilon quantile when discretised.
struct Instance {
  int periods = 0;                   // T
  std::vector<double> demandMeans;   // length T
  double fixedOrderCost = 0.0;       // K, charged when an order is placed
  double reviewCost = 0.0;           // W, charged at every review period
  double holdingCost = 0.0;          // h, per unit carried per period
  double penaltyCost = 0.0;          // b, per unit short per period
  double unitCost = 0.0;             // v, per unit ordered
  double backorderFraction = 1.0;    // beta: 1 backlog, 0 lost sales
  int initialInventory = 0;          // I0
  double pmfEpsilon = 1e-4;          // truncation mass of each demand pmf

  /// Throws std::invalid_argument when a field is out of range.
  void validate() const;
};

}  // namespace rss

#endif  // RSS_INSTANCE_HPP
