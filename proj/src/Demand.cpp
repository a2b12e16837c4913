#include "rss/Demand.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>
#include <utility>

namespace rss {

double DemandDistribution::cdf(int value) const {
  if (value < 0) return 0.0;
  double acc = 0.0;
  const int top = std::min(value, supportMax);
  for (int k = 0; k <= top; ++k) acc += pmf[k];
  return acc;
}

std::string patternKindToString(PatternKind kind) {
  switch (kind) {
    case PatternKind::STA:
      return "STA";
    case PatternKind::INC:
      return "INC";
    case PatternKind::DEC:
      return "DEC";
    case PatternKind::LCY1:
      return "LCY1";
    case PatternKind::LCY2:
      return "LCY2";
    case PatternKind::RAND:
      return "RAND";
    default:
      return "unknown";
  }
}

PatternKind stringToPatternKind(const std::string& str) {
  if (str == "STA") return PatternKind::STA;
  if (str == "INC") return PatternKind::INC;
  if (str == "DEC") return PatternKind::DEC;
  if (str == "LCY1") return PatternKind::LCY1;
  if (str == "LCY2") return PatternKind::LCY2;
  if (str == "RAND") return PatternKind::RAND;
  throw std::invalid_argument("Invalid pattern kind: " + str +
                              ". Available options are: "
                              "STA, INC, DEC, LCY1, LCY2, RAND.");
}

namespace {

// log of the Poisson pmf, stable for large means
double logPoissonPmf(int k, double mean) {
  return -mean + k * std::log(mean) - std::lgamma(static_cast<double>(k) + 1.0);
}

// uniform double in [0, 1) with 53 random bits
double uniform01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// exact integral of a piecewise-linear curve over [a, b];
// points must be sorted by x and cover [a, b]
double integratePiecewiseLinear(const std::vector<std::pair<double, double>>& points, double a,
                                double b) {
  double area = 0.0;
  for (std::size_t i = 0; i + 1 < points.size(); ++i) {
    const double x0 = points[i].first;
    const double x1 = points[i + 1].first;
    const double lo = std::max(a, x0);
    const double hi = std::min(b, x1);
    if (hi <= lo) continue;
    const double slope = (points[i + 1].second - points[i].second) / (x1 - x0);
    const double yLo = points[i].second + slope * (lo - x0);
    const double yHi = points[i].second + slope * (hi - x0);
    area += 0.5 * (yLo + yHi) * (hi - lo);
  }
  return area;
}

// per-period means of a piecewise-linear curve, rounded up
std::vector<double> sampleCurve(const std::vector<std::pair<double, double>>& points,
                                int periods) {
  std::vector<double> means(periods);
  for (int t = 0; t < periods; ++t) {
    const double avg = integratePiecewiseLinear(points, t, t + 1.0);
    means[t] = std::ceil(avg - 1e-9);
  }
  return means;
}

}  // namespace

DemandDistribution truncatedPoissonPmf(double mean, double epsTrunc) {
  if (!std::isfinite(mean) || mean < 0.0) {
    throw std::invalid_argument("truncatedPoissonPmf: mean must be finite and non-negative");
  }
  if (!(epsTrunc > 0.0) || !(epsTrunc < 1.0)) {
    throw std::invalid_argument("truncatedPoissonPmf: epsTrunc must lie in (0, 1)");
  }

  DemandDistribution dist;
  if (mean == 0.0) {
    dist.supportMax = 0;
    dist.pmf = {1.0};
    dist.mean = 0.0;
    return dist;
  }

  const double target = 1.0 - epsTrunc;
  std::vector<double> pmf;
  double cumulative = 0.0;
  // generous cap; the quantile sits near mean + O(sqrt(mean))
  const int cap = static_cast<int>(mean + 12.0 * std::sqrt(mean) + 200.0);
  int k = 0;
  for (;; ++k) {
    const double p = std::exp(logPoissonPmf(k, mean));
    pmf.push_back(p);
    cumulative += p;
    if (cumulative >= target) break;
    if (k > cap) break;
  }

  // re-normalise to sum exactly 1 by folding the cut tail into the last
  // support point; this keeps the mean within O(epsTrunc) of the target
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < pmf.size(); ++i) sum += pmf[i];
  pmf.back() = 1.0 - sum;

  dist.supportMax = k;
  dist.pmf = std::move(pmf);
  dist.mean = 0.0;
  for (int v = 0; v <= dist.supportMax; ++v) dist.mean += v * dist.pmf[v];
  return dist;
}

std::vector<double> patternDemands(PatternKind kind, int periods, std::uint64_t seed) {
  if (periods < 1) throw std::invalid_argument("patternDemands: periods must be >= 1");
  const double n = periods;

  switch (kind) {
    case PatternKind::STA:
      return std::vector<double>(periods, 50.0);

    case PatternKind::INC: {
      if (periods == 1) {
        throw std::invalid_argument("patternDemands: INC is undefined for a single period");
      }
      std::vector<double> means(periods);
      for (int t = 0; t < periods; ++t) means[t] = std::ceil(100.0 * t / (n - 1.0));
      return means;
    }

    case PatternKind::DEC: {
      if (periods == 1) {
        throw std::invalid_argument("patternDemands: DEC is undefined for a single period");
      }
      std::vector<double> means(periods);
      for (int t = 0; t < periods; ++t) means[t] = std::ceil(100.0 - 100.0 * t / (n - 1.0));
      return means;
    }

    case PatternKind::LCY1:
      // rise to 75 over the first third, hold, fall back; periods straddling
      // a kink take the exact average of the curve, so the vector keeps the
      // 50-per-period average for any horizon
      return sampleCurve({{0.0, 0.0}, {n / 3.0, 75.0}, {2.0 * n / 3.0, 75.0}, {n, 0.0}},
                         periods);

    case PatternKind::LCY2:
      return sampleCurve({{0.0, 0.0}, {n / 2.0, 100.0}, {n, 0.0}}, periods);

    case PatternKind::RAND: {
      std::mt19937_64 rng(seed);
      std::vector<double> means(periods);
      for (int t = 0; t < periods; ++t) {
        means[t] = 1.0 + std::floor(uniform01(rng) * 100.0);
      }
      return means;
    }
  }
  throw std::invalid_argument("patternDemands: unknown pattern kind");
}

}  // namespace rss
