#ifndef RSS_DEMAND_HPP
#define RSS_DEMAND_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace rss {

/// Discrete demand distribution with finite support 0..supportMax.
struct DemandDistribution {
  int supportMax = 0;
  std::vector<double> pmf;  // indexed by demand value, sums to 1
  double mean = 0.0;        // mean of the (re-normalised) pmf

  double cdf(int value) const;
};

/// Seasonal shapes used to generate per-period demand means.
enum class PatternKind {
  STA,   // stationary at 50
  INC,   // rising 0 -> 100
  DEC,   // falling 100 -> 0
  LCY1,  // rise to 75, plateau, fall back
  LCY2,  // rise to 100 at mid-horizon, then fall
  RAND   // i.i.d. uniform on 1..100
};

std::string patternKindToString(PatternKind kind);
PatternKind stringToPatternKind(const std::string& str);

/// Poisson pmf truncated at the 1 - epsTrunc quantile and re-normalised.
///
/// supportMax is the smallest n whose Poisson CDF reaches 1 - epsTrunc.
/// Deterministic: identical inputs give bit-identical pmfs.
DemandDistribution truncatedPoissonPmf(double mean, double epsTrunc);

/// Per-period demand means for one of the seasonal patterns.
/// The seed is consumed only by PatternKind::RAND.
/// Every pattern averages 50 per period up to integer rounding.
std::vector<double> patternDemands(PatternKind kind, int periods, std::uint64_t seed);

}  // namespace rss

#endif  // RSS_DEMAND_HPP
