#pragma once

// Relaxation homotopies and the lambda schedule.
//
// A stage at lambda in [0, 1] deforms a ParametricProblem as follows, in this
// order:
//   1. domain hooks (load/Tx stepping) rewrite h inside the problem itself;
//   2. SaS turns every h_i = 0 into h_i - eps <= 0 and -h_i - eps <= 0 with
//      eps = (1 - lambda) eps_high + lambda eps_low;
//   3. SBnds moves each finite bound to (1 - lambda) eps_bound + lambda bound;
//   4. GPen multiplies every inequality residual (native, SaS bands, bounds)
//      by lambda;
//   5. CObj blends the objective (1 - lambda) f_cvx + lambda f_obj.
// Exempt inequalities and regularizers pass through untouched. At lambda = 1
// every stage reproduces the original problem.

#include <optional>
#include <set>
#include <vector>

#include "homol2o/problem.hpp"

namespace homol2o {

struct HomotopyConstants {
  double eps_high = 0.01;   // SaS band at lambda = 0
  double eps_low = 0.0;     // SaS band at lambda = 1
  double eps_minus = 0.0;   // SBnds lower bound at lambda = 0
  double eps_plus = 1.0;    // SBnds upper bound at lambda = 0
  double delta_short = 1e-3;
};

struct HomotopyState {
  double lambda = 1.0;
  double delta_lambda = 0.05;
  double start_lambda = 0.0;
  std::size_t step_index = 0;
  std::set<Transform> active;
  HomotopyConstants constants;

  // lambda = 1, nothing active.
  static HomotopyState original();
  // First stage of a schedule.
  static HomotopyState start(std::set<Transform> active, double delta_lambda,
                             HomotopyConstants constants = {});

  bool has(Transform t) const { return active.count(t) != 0; }
  bool final_stage() const { return lambda >= 1.0; }
  DomainStage domain_stage() const;
  void validate() const;
};

// Next stage, or nullopt once lambda = 1 has been visited. Stage k sits at
// start + k * delta; a value within 1e-9 of 1 (or past it) snaps to exactly 1.
std::optional<HomotopyState> schedule_advance(const HomotopyState& state);

// All lambda values a schedule visits.
std::vector<double> schedule_lambdas(double delta_lambda, double start_lambda = 0.0);

double cobj_blend(double f_cvx, double f_obj, double lambda);
ad::Var cobj_blend(const ad::Var& f_cvx, const ad::Var& f_obj, double lambda);

BoundSet sbnds_bounds(const BoundSet& original, double eps_minus, double eps_plus, double lambda);

double gpen_scale(double g, double lambda);
ad::Var gpen_scale(const ad::Var& g, double lambda);

double sas_epsilon(double eps_high, double eps_low, double lambda);
// [h - eps, -h - eps], side by side.
ad::Var sas_split(const ad::Var& h, double eps);

struct TransformedGraph {
  ad::Var objective;    // f_lambda
  ad::Var eq;           // squared-penalty equalities; invalid under SaS or when none
  ad::Var ineq;         // every hinge-penalized inequality after transforms
  ad::Var exempt;
  ad::Var regularizer;

  ad::Var h_lambda;     // equalities after domain hooks, before SaS
  ad::Var sas_bands;
  ad::Var native_ineq;  // g after GPen
  ad::Var bound_ineq;   // bound residuals after SBnds and GPen
  BoundSet stage_bounds;
  double sas_eps = 0.0;
};

// Rejects transform sets the problem cannot honor.
void validate_transforms(const ParametricProblem& problem, const HomotopyState& state);

TransformedGraph apply_transforms(ad::Tape& tape, const ParametricProblem& problem,
                                  const ad::Var& x, const DenseMat& xi,
                                  const HomotopyState& state);

// Residuals of the deformed problem: f_lambda, h_lambda and the full
// transformed inequality vector.
ConstraintValues eval_constraints(const ParametricProblem& problem, const DenseMat& x,
                                  const DenseMat& xi, const HomotopyState& state);

}  // namespace homol2o
