#include "rss/Io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "rss/Errors.hpp"

namespace rss {

namespace {

std::string formatNumber(double value) {
  char buffer[64];
  std::snprintf(buffer, sizeof(buffer), "%.17g", value);
  std::string out(buffer);
  // keep the encoding explicitly decimal
  if (out.find('.') == std::string::npos && out.find('e') == std::string::npos &&
      out.find("inf") == std::string::npos && out.find("nan") == std::string::npos) {
    out += ".0";
  }
  return out;
}

double parseNumber(const std::string& field, const std::string& token) {
  try {
    std::size_t consumed = 0;
    const double value = std::stod(token, &consumed);
    if (consumed != token.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw ParseError(field, "not a number: '" + token + "'");
  }
}

int parseInteger(const std::string& field, const std::string& token) {
  try {
    std::size_t consumed = 0;
    const int value = std::stoi(token, &consumed);
    if (consumed != token.size()) throw std::invalid_argument("trailing characters");
    return value;
  } catch (const std::exception&) {
    throw ParseError(field, "not an integer: '" + token + "'");
  }
}

std::string readFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeFile(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

}  // namespace

std::string serializeInstance(const Instance& instance) {
  std::ostringstream out;
  out << "T " << instance.periods << "\n";
  out << "demand_means";
  for (double m : instance.demandMeans) out << " " << formatNumber(m);
  out << "\n";
  out << "K " << formatNumber(instance.fixedOrderCost) << "\n";
  out << "W " << formatNumber(instance.reviewCost) << "\n";
  out << "h " << formatNumber(instance.holdingCost) << "\n";
  out << "b " << formatNumber(instance.penaltyCost) << "\n";
  out << "v " << formatNumber(instance.unitCost) << "\n";
  out << "beta " << formatNumber(instance.backorderFraction) << "\n";
  out << "I0 " << instance.initialInventory << "\n";
  out << "epsilon " << formatNumber(instance.pmfEpsilon) << "\n";
  return out.str();
}

Instance parseInstance(const std::string& text) {
  Instance instance;
  bool sawT = false, sawMeans = false, sawK = false, sawW = false, sawH = false, sawB = false;

  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream tokens(line);
    std::string key;
    tokens >> key;
    if (key.empty()) continue;

    if (key == "T") {
      std::string token;
      tokens >> token;
      instance.periods = parseInteger("T", token);
      sawT = true;
    } else if (key == "demand_means") {
      instance.demandMeans.clear();
      std::string token;
      while (tokens >> token) {
        instance.demandMeans.push_back(parseNumber("demand_means", token));
      }
      if (instance.demandMeans.empty()) {
        throw ParseError("demand_means", "expected at least one value");
      }
      sawMeans = true;
    } else if (key == "K" || key == "W" || key == "h" || key == "b" || key == "v" ||
               key == "beta" || key == "epsilon") {
      std::string token;
      tokens >> token;
      const double value = parseNumber(key, token);
      if (key == "K") {
        instance.fixedOrderCost = value;
        sawK = true;
      } else if (key == "W") {
        instance.reviewCost = value;
        sawW = true;
      } else if (key == "h") {
        instance.holdingCost = value;
        sawH = true;
      } else if (key == "b") {
        instance.penaltyCost = value;
        sawB = true;
      } else if (key == "v") {
        instance.unitCost = value;
      } else if (key == "beta") {
        instance.backorderFraction = value;
      } else {
        instance.pmfEpsilon = value;
      }
    } else if (key == "I0") {
      std::string token;
      tokens >> token;
      instance.initialInventory = parseInteger("I0", token);
    } else {
      throw ParseError(key, "unknown field");
    }
  }

  if (!sawT) throw ParseError("T", "missing required field");
  if (!sawMeans) throw ParseError("demand_means", "missing required field");
  if (!sawK) throw ParseError("K", "missing required field");
  if (!sawW) throw ParseError("W", "missing required field");
  if (!sawH) throw ParseError("h", "missing required field");
  if (!sawB) throw ParseError("b", "missing required field");
  if (static_cast<int>(instance.demandMeans.size()) != instance.periods) {
    throw ParseError("demand_means", "expected " + std::to_string(instance.periods) +
                                         " values, got " +
                                         std::to_string(instance.demandMeans.size()));
  }
  try {
    instance.validate();
  } catch (const std::invalid_argument& e) {
    throw ParseError("instance", e.what());
  }
  return instance;
}

Instance loadInstance(const std::string& path) { return parseInstance(readFile(path)); }

void saveInstance(const Instance& instance, const std::string& path) {
  writeFile(path, serializeInstance(instance));
}

std::string serializePolicy(const Policy& policy, const ReviewPlan& plan, double expectedCost) {
  nlohmann::json doc;
  doc["plan"] = std::vector<int>(plan.gamma.begin(), plan.gamma.end());
  doc["expected_cost"] = expectedCost;
  doc["reviews"] = nlohmann::json::array();
  for (const PolicyReview& review : policy.reviews) {
    nlohmann::json entry;
    entry["period"] = review.period;
    if (review.hasOrderRegion) {
      entry["s"] = review.reorderLevel;
      entry["S"] = review.orderUpTo;
    } else {
      entry["no_order"] = true;
    }
    doc["reviews"].push_back(entry);
  }
  return doc.dump(2) + "\n";
}

Policy parsePolicy(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("policy", e.what());
  }
  Policy policy;
  if (!doc.contains("reviews") || !doc["reviews"].is_array()) {
    throw ParseError("reviews", "missing or not an array");
  }
  for (const auto& entry : doc["reviews"]) {
    PolicyReview review;
    if (!entry.contains("period")) throw ParseError("period", "missing in review entry");
    review.period = entry["period"].get<int>();
    if (entry.contains("s") && entry.contains("S")) {
      review.hasOrderRegion = true;
      review.reorderLevel = entry["s"].get<int>();
      review.orderUpTo = entry["S"].get<int>();
    } else if (!entry.value("no_order", false)) {
      throw ParseError("reviews", "review entry needs either s and S or no_order");
    }
    policy.reviews.push_back(review);
  }
  return policy;
}

Policy loadPolicy(const std::string& path) { return parsePolicy(readFile(path)); }

void savePolicy(const Policy& policy, const ReviewPlan& plan, double expectedCost,
                const std::string& path) {
  writeFile(path, serializePolicy(policy, plan, expectedCost));
}

}  // namespace rss
