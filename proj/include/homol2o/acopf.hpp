#pragma once

#include <memory>
#include <span>

#include "homol2o/grid_case.hpp"
#include "homol2o/problem.hpp"

namespace homol2o::acopf {

// Decision vector layout: [V_real (n_bus), V_imag (n_bus), P_g (n_gen), Q_g (n_gen)].
struct DecisionLayout {
  Eigen::Index n_bus = 0;
  Eigen::Index n_gen = 0;

  Eigen::Index size() const { return 2 * n_bus + 2 * n_gen; }
  Eigen::Index vr() const { return 0; }
  Eigen::Index vi() const { return n_bus; }
  Eigen::Index pg() const { return 2 * n_bus; }
  Eigen::Index qg() const { return 2 * n_bus + n_gen; }
};

// Per-bus demand for a batch: rows are instances, columns are buses.
struct BusLoads {
  DenseMat pd;
  DenseMat qd;
};

// Maps a parameter batch [P_d per load, Q_d per load] onto buses.
BusLoads loads_from_xi(const GridCase& grid, const DenseMat& xi);
// Load stepping scales every demand by lambda.
BusLoads load_step_transform(const BusLoads& loads, double lambda);

// Rows: instance; columns: [Re residual per bus, Im residual per bus] of
// (P_g - P_d) + j(Q_g - Q_d) - V .* conj(Y V).
ad::Var power_balance_residual(const GridCase& grid, const AdmittanceMatrix& y, const ad::Var& x,
                               const BusLoads& loads);
// V_imag at the slack bus, B x 1.
ad::Var slack_residual(const GridCase& grid, const ad::Var& x);
// [|V| per bus, P_g, Q_g]; |V| carries a 1e-12 guard under the root.
ad::Var bounded_quantities(const GridCase& grid, const ad::Var& x);
BoundSet operational_bounds(const GridCase& grid);
// Stacked two-sided residuals of bounded_quantities against `bounds`.
ad::Var operational_residuals(const GridCase& grid, const ad::Var& x, const BoundSet& bounds);
// sum_g alpha (base P_g)^2 + beta (base P_g) + gamma, B x 1.
ad::Var dispatch_cost(const GridCase& grid, const ad::Var& x);
double dispatch_cost(const GridCase& grid, std::span<const double> pg_per_unit);
// eps + sum P_d - sum P_g, B x 1. `pd_total` is the untransformed total demand per instance.
ad::Var pg_pullup_residual(const GridCase& grid, const ad::Var& x, const DenseMat& pd_total, double eps);
// ||x - x0||^2 / dim(x) with x0 = 0, B x 1.
ad::Var warm_loss(const ad::Var& x);

// Uniform [low, high] multiples of every base load entry, one row per instance.
// Instance i draws from its own stream seeded by (seed, i).
DenseMat sample_loads(const GridCase& grid, std::size_t count, std::uint64_t seed,
                      double low = 0.75, double high = 1.50);

struct AcopfOptions {
  double pullup_eps = 0.01;
  bool pullup = true;
  // Forces V_imag at the slack bus to zero instead of penalizing it.
  bool hard_slack = false;
  double sample_low = 0.75;
  double sample_high = 1.50;
};

class AcopfProblem final : public ParametricProblem {
 public:
  explicit AcopfProblem(GridCase grid, AcopfOptions options = {});

  std::string kind() const override { return "acopf"; }
  std::string signature() const override { return signature_; }
  std::size_t dim_x() const override { return static_cast<std::size_t>(layout_.size()); }
  std::size_t dim_xi() const override { return 2 * grid_.loads.size(); }
  std::size_t num_eq() const override { return 2 * grid_.num_buses() + 1; }
  std::size_t num_ineq() const override { return 0; }
  const BoundSet& bounds() const override { return bounds_; }
  std::set<Transform> domain_transforms() const override {
    return {Transform::load_step, Transform::tx_step};
  }
  std::vector<std::string> xi_names() const override;
  // Flat start: V = 1 + 0j at every bus, P_g and Q_g at the middle of their limits.
  std::vector<double> nominal_decision() const override;

  ProblemGraph record(ad::Tape& tape, const ad::Var& x, const DenseMat& xi,
                      const DomainStage& stage) const override;
  DenseMat sample(std::size_t count, std::uint64_t seed) const override;

  const GridCase& grid() const { return grid_; }
  const AdmittanceMatrix& ybus() const { return ybus_; }
  const DecisionLayout& layout() const { return layout_; }
  const AcopfOptions& options() const { return options_; }

 private:
  GridCase grid_;
  AcopfOptions options_;
  DecisionLayout layout_;
  AdmittanceMatrix ybus_;
  BoundSet bounds_;
  std::string signature_;
};

}  // namespace homol2o::acopf
