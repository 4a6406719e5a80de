#pragma once

#include <functional>
#include <vector>

#include "homol2o/autodiff.hpp"
#include "homol2o/dense.hpp"

namespace homol2o {

// Builds a 1x1 loss on `tape` from parameter leaves given in ParamList order.
using LossBuilder = std::function<ad::Var(ad::Tape& tape, const std::vector<ad::Var>& params)>;

struct GradCheckOptions {
  double step = 1e-5;
  // Entries whose analytic and numeric values are both below this fraction of
  // the largest analytic gradient are compared against that floor instead.
  double relative_floor = 1e-3;
};

struct GradCheckReport {
  double max_rel_error = 0.0;
  std::size_t checked = 0;
  // Entries where the +/- step evaluations straddle a relu/abs/max kink.
  std::size_t kinks_excluded = 0;
  std::size_t worst_tensor = 0;
  Eigen::Index worst_entry = 0;
  double worst_analytic = 0.0;
  double worst_numeric = 0.0;

  bool within(double tolerance) const { return max_rel_error <= tolerance; }
};

// Compares every analytic gradient entry against a central difference.
GradCheckReport grad_check(const ParamList& params, const LossBuilder& loss,
                           const GradCheckOptions& options = {});

}  // namespace homol2o
