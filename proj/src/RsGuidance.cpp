#include "rss/RsGuidance.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace rss {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double pmfMean(const std::vector<double>& pmf) {
  double mean = 0.0;
  for (std::size_t k = 0; k < pmf.size(); ++k) mean += static_cast<double>(k) * pmf[k];
  return mean;
}

// discrete convolution, truncated at the 1 - eps quantile and re-normalised
std::vector<double> convolveTruncate(const std::vector<double>& a, const std::vector<double>& b,
                                     double eps) {
  std::vector<double> out(a.size() + b.size() - 1, 0.0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  double cdf = 0.0;
  std::size_t cut = out.size() - 1;
  for (std::size_t k = 0; k < out.size(); ++k) {
    cdf += out[k];
    if (cdf >= 1.0 - eps) {
      cut = k;
      break;
    }
  }
  out.resize(cut + 1);
  double total = 0.0;
  for (double p : out) total += p;
  for (double& p : out) p /= total;
  return out;
}

// expected holding + penalty cost at every position in [yLo, yHi]
std::vector<double> lossSweep(const std::vector<double>& pmf, double h, double b, int yLo,
                              int yHi) {
  const double mean = pmfMean(pmf);
  std::vector<double> out(yHi - yLo + 1);
  double cdf = 0.0;
  double partial = 0.0;  // E[(y - D)+]
  for (int y = std::min(yLo, 0); y <= yHi; ++y) {
    if (y >= yLo) out[y - yLo] = h * partial + b * std::max(0.0, mean - y + partial);
    if (y >= 0 && y < static_cast<int>(pmf.size())) cdf += pmf[y];
    partial += cdf;
  }
  return out;
}

}  // namespace

CycleCostCache::CycleCostCache(const SdpSolver& solver) {
  const Instance& inst = solver.instance();
  const auto& demands = solver.demands();
  periods_ = inst.periods;
  const double h = inst.holdingCost;
  const double b = inst.penaltyCost;
  const double eps = inst.pmfEpsilon;
  const int i0 = inst.initialInventory;

  cycles_.resize(periods_);
  noReview_.assign(periods_ + 1, 0.0);

  for (int i = 1; i <= periods_; ++i) {
    cycles_[i - 1].resize(periods_ - i + 1);

    int widestTop = 0;
    for (int t = i; t <= periods_; ++t) widestTop += demands[t - 1].supportMax;
    const int yLo = i == 1 ? std::min(i0, 0) : 0;
    const int yHi = std::max(widestTop, i == 1 ? i0 : 0);

    std::vector<double> accumulated(yHi - yLo + 1, 0.0);
    std::vector<double> pmf = demands[i - 1].pmf;

    for (int j = i + 1; j <= periods_ + 1; ++j) {
      // add period j-1's loss for the demand accumulated since the review
      const std::vector<double> loss = lossSweep(pmf, h, b, yLo, yHi);
      for (std::size_t k = 0; k < accumulated.size(); ++k) accumulated[k] += loss[k];

      CycleCost cell;
      if (i == 1) {
        noReview_[j - 1] = accumulated[i0 - yLo];
        // order-up-to at least I0; staying at I0 places no order
        double best = accumulated[i0 - yLo];
        int bestY = i0;
        for (int y = i0 + 1; y <= yHi; ++y) {
          const double candidate = inst.fixedOrderCost + accumulated[y - yLo];
          if (candidate < best) {
            best = candidate;
            bestY = y;
          }
        }
        cell.cost = inst.reviewCost + best;
        cell.orderUpTo = bestY;
      } else {
        double best = accumulated[0 - yLo];
        int bestY = 0;
        for (int y = 1; y <= yHi; ++y) {
          if (accumulated[y - yLo] < best) {
            best = accumulated[y - yLo];
            bestY = y;
          }
        }
        cell.cost = inst.reviewCost + inst.fixedOrderCost + best;
        cell.orderUpTo = bestY;
      }
      cycles_[i - 1][j - i - 1] = cell;

      if (j <= periods_) pmf = convolveTruncate(pmf, demands[j - 1].pmf, eps);
    }
  }
}

double CycleCostCache::cost(int firstPeriod, int endPeriod) const {
  return cycles_[firstPeriod - 1][endPeriod - firstPeriod - 1].cost;
}

int CycleCostCache::orderUpTo(int firstPeriod, int endPeriod) const {
  return cycles_[firstPeriod - 1][endPeriod - firstPeriod - 1].orderUpTo;
}

double CycleCostCache::noReviewCost(int endPeriod) const { return noReview_[endPeriod - 1]; }

CycleCost cycleCost(const SdpSolver& solver, int firstPeriod, int endPeriod) {
  const int periods = solver.instance().periods;
  if (firstPeriod < 1 || firstPeriod >= endPeriod || endPeriod > periods + 1) {
    throw std::invalid_argument("cycleCost: need 1 <= firstPeriod < endPeriod <= T + 1");
  }
  const CycleCostCache cache(solver);
  return {cache.cost(firstPeriod, endPeriod), cache.orderUpTo(firstPeriod, endPeriod)};
}

double cyclePlanCost(const CycleCostCache& cache, const ReviewPlan& plan) {
  const int periods = cache.periods();
  if (plan.periods() != periods) {
    throw std::invalid_argument("cyclePlanCost: plan length must equal the horizon");
  }
  std::vector<int> reviews;
  for (int t = 1; t <= periods; ++t) {
    if (plan.reviewAt(t)) reviews.push_back(t);
  }
  if (reviews.empty()) return cache.noReviewCost(periods + 1);

  double total = reviews.front() > 1 ? cache.noReviewCost(reviews.front()) : 0.0;
  for (std::size_t k = 0; k < reviews.size(); ++k) {
    const int from = reviews[k];
    const int to = k + 1 < reviews.size() ? reviews[k + 1] : periods + 1;
    total += cache.cost(from, to);
  }
  return total;
}

ReviewPlan computeRsPlan(const CycleCostCache& cache) {
  const int periods = cache.periods();

  // cost-to-go of starting a reviewed cycle at period j; ties keep the
  // longer cycle because ends are scanned from the horizon backwards
  std::vector<double> toGo(periods + 2, 0.0);
  std::vector<int> successor(periods + 2, periods + 1);
  for (int j = periods; j >= 1; --j) {
    double best = kInf;
    int bestEnd = periods + 1;
    for (int end = periods + 1; end > j; --end) {
      const double candidate = cache.cost(j, end) + toGo[end];
      if (candidate < best) {
        best = candidate;
        bestEnd = end;
      }
    }
    toGo[j] = best;
    successor[j] = bestEnd;
  }

  // the horizon may open with an unreviewed stretch ending at the first
  // review; a tie prefers the stretch over a reviewed cycle of equal length
  double best = kInf;
  int firstReview = periods + 1;  // T+1 means no review at all
  int firstCycleEnd = periods + 1;
  bool reviewedStart = false;
  for (int end = periods + 1; end >= 2; --end) {
    const double tail = end <= periods ? toGo[end] : 0.0;
    const double unreviewed = cache.noReviewCost(end) + tail;
    if (unreviewed < best) {
      best = unreviewed;
      firstReview = end;
      reviewedStart = false;
    }
    const double reviewed = cache.cost(1, end) + tail;
    if (reviewed < best) {
      best = reviewed;
      firstCycleEnd = end;
      reviewedStart = true;
    }
  }

  ReviewPlan plan;
  plan.gamma.assign(periods, 0);
  int next;
  if (reviewedStart) {
    plan.gamma[0] = 1;
    next = firstCycleEnd;
  } else {
    next = firstReview;
  }
  while (next <= periods) {
    plan.gamma[next - 1] = 1;
    next = successor[next];
  }
  return plan;
}

ReviewPlan computeRsPlan(const SdpSolver& solver) {
  const CycleCostCache cache(solver);
  return computeRsPlan(cache);
}

}  // namespace rss
