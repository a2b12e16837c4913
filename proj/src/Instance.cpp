#include "rss/Instance.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace rss {

void Instance::validate() const {
  if (periods < 1) throw std::invalid_argument("Instance: periods must be >= 1");
  if (static_cast<int>(demandMeans.size()) != periods) {
    throw std::invalid_argument("Instance: demandMeans must have one entry per period");
  }
  for (double m : demandMeans) {
    if (!std::isfinite(m) || m < 0.0) {
      throw std::invalid_argument("Instance: demand means must be finite and non-negative");
    }
  }
  if (fixedOrderCost < 0.0 || reviewCost < 0.0 || holdingCost < 0.0 || penaltyCost < 0.0 ||
      unitCost < 0.0) {
    throw std::invalid_argument("Instance: cost parameters must be non-negative");
  }
  if (!(backorderFraction >= 0.0 && backorderFraction <= 1.0)) {
    throw std::invalid_argument("Instance: backorderFraction must lie in [0, 1]");
  }
  if (!(pmfEpsilon > 0.0 && pmfEpsilon < 1.0)) {
    throw std::invalid_argument("Instance: pmfEpsilon must lie in (0, 1)");
  }
}

}  // namespace rss
