#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include "homol2o/autodiff.hpp"
#include "homol2o/dense.hpp"

namespace homol2o {

// Problem deformations. cobj/sbnds/gpen/sas are generic relaxations applied by
// the homotopy layer; load_step and tx_step are domain hooks a problem family
// implements itself.
enum class Transform { cobj, sbnds, gpen, sas, load_step, tx_step };

std::string to_string(Transform t);
Transform parse_transform(const std::string& name);
const std::vector<std::string>& transform_names();

// What a problem family must know about the current homotopy stage when it
// records its residuals.
struct DomainStage {
  double lambda = 1.0;
  bool load_step = false;
  bool tx_step = false;
  double delta_short = 1e-3;

  static DomainStage original() { return {}; }
};

// Lower/upper limits on the problem's bounded quantities. Infinite entries are
// unbounded on that side.
struct BoundSet {
  std::vector<double> lower;
  std::vector<double> upper;

  std::size_t size() const { return lower.size(); }
  bool empty() const { return lower.empty(); }
};

// Batched residual graph of one problem instance set. Every member is a
// tape variable with one row per instance; members a family does not provide
// stay invalid.
struct ProblemGraph {
  ad::Var objective;    // B x 1
  ad::Var surrogate;    // B x 1, convex stand-in for the objective
  ad::Var eq;           // B x m_eq, h(x, xi) = 0
  ad::Var ineq;         // B x m_ineq, g(x, xi) <= 0
  ad::Var bounded;      // B x q, quantities limited by bounds()
  ad::Var exempt;       // B x e, inequalities no homotopy ever touches
  ad::Var regularizer;  // B x 1, extra stage-specific loss (already normalized)
};

// Parametric nonlinear program: min f(x, xi) s.t. h(x, xi) = 0, g(x, xi) <= 0,
// lower <= q(x) <= upper, for xi drawn from the family's sampler.
class ParametricProblem {
 public:
  virtual ~ParametricProblem() = default;

  virtual std::string kind() const = 0;
  // Identifies the instance family; checkpoints and datasets are matched on it.
  virtual std::string signature() const = 0;

  virtual std::size_t dim_x() const = 0;
  virtual std::size_t dim_xi() const = 0;
  virtual std::size_t num_eq() const = 0;
  virtual std::size_t num_ineq() const = 0;
  virtual const BoundSet& bounds() const = 0;
  virtual bool has_surrogate() const { return false; }
  // Domain hooks this family implements (subset of {load_step, tx_step}).
  virtual std::set<Transform> domain_transforms() const { return {}; }

  virtual std::vector<std::string> xi_names() const;

  // Typical decision the policy's output bias may start at; empty means zero.
  virtual std::vector<double> nominal_decision() const { return {}; }

  // Records f, h, g, bounded quantities and extras at `x` (B x dim_x) for
  // parameters `xi` (B x dim_xi).
  virtual ProblemGraph record(ad::Tape& tape, const ad::Var& x, const DenseMat& xi,
                              const DomainStage& stage) const = 0;

  virtual DenseMat sample(std::size_t count, std::uint64_t seed) const = 0;
};

// Plain-value residuals of the untransformed (or staged) problem.
struct ConstraintValues {
  DenseMat objective;  // B x 1
  DenseMat eq;         // B x m_eq
  DenseMat ineq;       // B x (m_ineq + bound residuals)
};

// Two residuals per finite bound: lower - q <= 0 and q - upper <= 0. Lower
// residuals first, then upper, each in quantity order.
ad::Var bound_residuals(const ad::Var& bounded, const BoundSet& bounds);

ConstraintValues eval_constraints(const ParametricProblem& problem, const DenseMat& x,
                                  const DenseMat& xi,
                                  const DomainStage& stage = DomainStage::original());

}  // namespace homol2o
