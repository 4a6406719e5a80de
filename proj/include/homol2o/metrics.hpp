#pragma once

#include <span>
#include <string>
#include <vector>

#include "homol2o/mlp.hpp"
#include "homol2o/problem.hpp"

namespace homol2o {

// Mean and population standard deviation across instances.
struct Aggregate {
  double mean = 0.0;
  double std = 0.0;
};

Aggregate aggregate(std::span<const double> values);
// "mean (std)" with a fixed number of decimals.
std::string format_aggregate(const Aggregate& a, int decimals);

struct InstanceMetrics {
  double objective = 0.0;
  double mean_eq = 0.0;   // mean |h_i|
  double max_eq = 0.0;    // max |h_i|
  double mean_ineq = 0.0; // mean relu(g_i), bounds included
  double max_ineq = 0.0;
};

struct ViolationStats {
  std::vector<InstanceMetrics> instances;
  Aggregate objective;
  Aggregate mean_eq;
  Aggregate max_eq;
  Aggregate mean_ineq;
  Aggregate max_ineq;
};

// Scores decisions against the original problem (lambda = 1, no hooks).
// Exempt helper constraints are not part of the original problem and are not
// scored.
ViolationStats violation_metrics(const ParametricProblem& problem, const DenseMat& x,
                                 const DenseMat& xi);
ViolationStats violation_metrics(const ParametricProblem& problem, const PolicyNet& policy,
                                 const DenseMat& test_xi);

}  // namespace homol2o
