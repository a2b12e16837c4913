#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rss/Bench.hpp"
#include "rss/Demand.hpp"
#include "rss/Errors.hpp"
#include "rss/Io.hpp"
#include "rss/LowerBounds.hpp"
#include "rss/RsGuidance.hpp"
#include "rss/Sdp.hpp"
#include "rss/Simulator.hpp"
#include "rss/TreeSearch.hpp"

namespace py = pybind11;

namespace {

rss::ReviewPlan toPlan(const std::vector<int>& gamma) {
  rss::ReviewPlan plan;
  plan.gamma.reserve(gamma.size());
  for (int g : gamma) plan.gamma.push_back(g ? 1 : 0);
  return plan;
}

std::vector<int> fromPlan(const rss::ReviewPlan& plan) {
  return std::vector<int>(plan.gamma.begin(), plan.gamma.end());
}

rss::DescentStrategy toStrategy(const std::string& name, std::uint64_t seed,
                                const rss::SdpSolver& solver) {
  if (name == "det1") return rss::DescentStrategy::deterministic(rss::DescentOrder::OneFirst);
  if (name == "det0") return rss::DescentStrategy::deterministic(rss::DescentOrder::ZeroFirst);
  if (name == "rand") return rss::DescentStrategy::randomized(seed);
  if (name == "guided") return rss::DescentStrategy::guided(rss::computeRsPlan(solver), seed);
  throw std::invalid_argument("strategy must be one of det1, det0, rand, guided");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Optimal (R,s,S) inventory policies: stochastic DP + branch-and-bound";

  py::register_exception<rss::ResourceLimitError>(m, "ResourceLimitError");
  py::register_exception<rss::StructureViolationError>(m, "StructureViolationError");
  py::register_exception<rss::ParseError>(m, "ParseError");

  py::class_<rss::Instance>(m, "Instance")
      .def(py::init([](int periods, std::vector<double> demand_means, double K, double W,
                       double h, double b, double v, double beta, int I0, double epsilon) {
             rss::Instance instance;
             instance.periods = periods;
             instance.demandMeans = std::move(demand_means);
             instance.fixedOrderCost = K;
             instance.reviewCost = W;
             instance.holdingCost = h;
             instance.penaltyCost = b;
             instance.unitCost = v;
             instance.backorderFraction = beta;
             instance.initialInventory = I0;
             instance.pmfEpsilon = epsilon;
             instance.validate();
             return instance;
           }),
           py::arg("periods"), py::arg("demand_means"), py::arg("K"), py::arg("W"),
           py::arg("h"), py::arg("b"), py::arg("v") = 0.0, py::arg("beta") = 1.0,
           py::arg("I0") = 0, py::arg("epsilon") = 1e-4)
      .def_readwrite("periods", &rss::Instance::periods)
      .def_readwrite("demand_means", &rss::Instance::demandMeans)
      .def_readwrite("K", &rss::Instance::fixedOrderCost)
      .def_readwrite("W", &rss::Instance::reviewCost)
      .def_readwrite("h", &rss::Instance::holdingCost)
      .def_readwrite("b", &rss::Instance::penaltyCost)
      .def_readwrite("v", &rss::Instance::unitCost)
      .def_readwrite("beta", &rss::Instance::backorderFraction)
      .def_readwrite("I0", &rss::Instance::initialInventory)
      .def_readwrite("epsilon", &rss::Instance::pmfEpsilon);

  py::class_<rss::DemandDistribution>(m, "DemandDistribution")
      .def_readonly("support_max", &rss::DemandDistribution::supportMax)
      .def_readonly("pmf", &rss::DemandDistribution::pmf)
      .def_readonly("mean", &rss::DemandDistribution::mean)
      .def("cdf", &rss::DemandDistribution::cdf);

  py::class_<rss::PolicyReview>(m, "PolicyReview")
      .def_readonly("period", &rss::PolicyReview::period)
      .def_readonly("has_order_region", &rss::PolicyReview::hasOrderRegion)
      .def_readonly("s", &rss::PolicyReview::reorderLevel)
      .def_readonly("S", &rss::PolicyReview::orderUpTo);

  py::class_<rss::Policy>(m, "Policy").def_readonly("reviews", &rss::Policy::reviews);

  py::class_<rss::SearchStats>(m, "SearchStats")
      .def_readonly("nodes_computed", &rss::SearchStats::nodesComputed)
      .def_readonly("nodes_pruned", &rss::SearchStats::nodesPruned)
      .def_readonly("total_nodes", &rss::SearchStats::totalNodes)
      .def("pruning_pct_visited", &rss::SearchStats::pruningPctVisited)
      .def("pruning_pct_fulltree", &rss::SearchStats::pruningPctFullTree)
      .def_property_readonly("incumbent_trace", [](const rss::SearchStats& stats) {
        std::vector<std::pair<std::vector<int>, double>> trace;
        for (const auto& [plan, cost] : stats.incumbentTrace) {
          trace.emplace_back(fromPlan(plan), cost);
        }
        return trace;
      });

  py::class_<rss::SimulationReport>(m, "SimulationReport")
      .def_readonly("runs", &rss::SimulationReport::runs)
      .def_readonly("mean_cost", &rss::SimulationReport::meanCost)
      .def_readonly("std_error", &rss::SimulationReport::stdError);

  py::class_<rss::BnbResult>(m, "BnbResult")
      .def_property_readonly("best_plan",
                             [](const rss::BnbResult& r) { return fromPlan(r.bestPlan); })
      .def_readonly("best_cost", &rss::BnbResult::bestCost)
      .def_readonly("policy", &rss::BnbResult::policy)
      .def_readonly("stats", &rss::BnbResult::stats);

  py::class_<rss::BaselineResult>(m, "BaselineResult")
      .def_property_readonly("best_plan",
                             [](const rss::BaselineResult& r) { return fromPlan(r.bestPlan); })
      .def_readonly("best_cost", &rss::BaselineResult::bestCost)
      .def_readonly("all_costs", &rss::BaselineResult::allCosts);

  m.def(
      "truncated_pmf",
      [](double mean, double epsilon) { return rss::truncatedPoissonPmf(mean, epsilon); },
      py::arg("mean"), py::arg("epsilon") = 1e-4,
      "Poisson pmf truncated at the 1 - epsilon quantile");

  m.def(
      "pattern_demands",
      [](const std::string& kind, int periods, std::uint64_t seed) {
        return rss::patternDemands(rss::stringToPatternKind(kind), periods, seed);
      },
      py::arg("kind"), py::arg("periods"), py::arg("seed") = 0,
      "Demand means for STA, INC, DEC, LCY1, LCY2 or RAND");

  m.def(
      "solve_fixed_plan",
      [](const rss::Instance& instance, const std::vector<int>& plan) {
        return rss::SdpSolver(instance).solveFixedPlan(toPlan(plan)).second;
      },
      py::arg("instance"), py::arg("plan"),
      "Expected cost of the optimal (s,S) policy for a fixed review plan");

  m.def(
      "extract_policy",
      [](const rss::Instance& instance, const std::vector<int>& plan) {
        rss::SdpSolver solver(instance);
        const auto reviewPlan = toPlan(plan);
        const auto solved = solver.solveFixedPlan(reviewPlan);
        return rss::extractPolicy(solver, solved.first, reviewPlan);
      },
      py::arg("instance"), py::arg("plan"),
      "(s_t, S_t) parameters of the optimal policy for a fixed review plan");

  m.def(
      "enumerate_baseline",
      [](const rss::Instance& instance, int cap) {
        return rss::enumerateBaseline(rss::SdpSolver(instance), cap);
      },
      py::arg("instance"), py::arg("cap") = 20,
      "Solve every review plan exhaustively");

  m.def(
      "bnb_solve",
      [](const rss::Instance& instance, const std::string& strategy, std::uint64_t seed,
         bool use_bounds) {
        rss::SdpSolver solver(instance);
        return rss::bnbSolve(solver, toStrategy(strategy, seed, solver), use_bounds);
      },
      py::arg("instance"), py::arg("strategy") = "det1", py::arg("seed") = 0,
      py::arg("use_bounds") = true,
      "Optimal (R,s,S) policy by depth-first branch-and-bound");

  m.def(
      "compute_rs_plan",
      [](const rss::Instance& instance) {
        return fromPlan(rss::computeRsPlan(rss::SdpSolver(instance)));
      },
      py::arg("instance"), "Near-optimal review plan from the cycle-cost shortest path");

  m.def(
      "simulate_policy",
      [](const rss::Instance& instance, const rss::Policy& policy, std::int64_t runs,
         std::uint64_t seed) { return rss::simulatePolicy(instance, policy, runs, seed); },
      py::arg("instance"), py::arg("policy"), py::arg("runs") = 100000, py::arg("seed") = 0,
      "Monte Carlo cost of an extracted policy");

  m.def("load_instance", &rss::loadInstance, py::arg("path"));
  m.def(
      "save_instance",
      [](const rss::Instance& instance, const std::string& path) {
        rss::saveInstance(instance, path);
      },
      py::arg("instance"), py::arg("path"));
}
