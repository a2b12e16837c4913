#ifndef RSS_IO_HPP
#define RSS_IO_HPP

#include <string>

#include "rss/Instance.hpp"
#include "rss/Sdp.hpp"

namespace rss {

/// Flat key-value instance document, one field per line:
/// T, demand_means (space-separated list), K, W, h, b, v, beta, I0, epsilon.
/// v, beta, I0 and epsilon are optional and default to 0, 1, 0 and 1e-4.
/// parseInstance throws ParseError naming the offending field;
/// parse(serialize(x)) == x.
std::string serializeInstance(const Instance& instance);
Instance parseInstance(const std::string& text);

Instance loadInstance(const std::string& path);
void saveInstance(const Instance& instance, const std::string& path);

/// Policies travel as JSON: plan, expected cost and the review triples.
std::string serializePolicy(const Policy& policy, const ReviewPlan& plan, double expectedCost);
Policy parsePolicy(const std::string& text);

Policy loadPolicy(const std::string& path);
void savePolicy(const Policy& policy, const ReviewPlan& plan, double expectedCost,
                const std::string& path);

}  // namespace rss

#endif  // RSS_IO_HPP
