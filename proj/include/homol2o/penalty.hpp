#pragma once

#include "homol2o/homotopy.hpp"
#include "homol2o/problem.hpp"

namespace homol2o {

struct PenaltyWeights {
  double eq = 50.0;
  double ineq = 50.0;
  double pullup = 0.0;
  double warm = 0.0;

  void validate() const;
};

enum class InequalityPenalty { hinge, squared_hinge };

// Scalar pieces of the batch-mean penalty loss.
struct PenaltyLoss {
  ad::Var total;
  ad::Var objective;
  ad::Var equality;
  ad::Var inequality;
  ad::Var exempt;
  ad::Var warm;
};

// loss = mean over the batch of
//   f_lambda + w_eq sum h^2 + w_ineq sum p(g) + w_pullup sum relu(exempt) + w_warm reg
// where p is relu (default) or relu^2.
PenaltyLoss assemble_penalty_loss(ad::Tape& tape, const TransformedGraph& graph,
                                  const PenaltyWeights& weights,
                                  InequalityPenalty penalty = InequalityPenalty::hinge);

// Records x = policy(xi) upstream; this overload takes the decision batch as a
// tape variable and does the transform step too.
PenaltyLoss assemble_penalty_loss(ad::Tape& tape, const ParametricProblem& problem,
                                  const ad::Var& x, const DenseMat& xi,
                                  const PenaltyWeights& weights, const HomotopyState& state,
                                  InequalityPenalty penalty = InequalityPenalty::hinge);

}  // namespace homol2o
