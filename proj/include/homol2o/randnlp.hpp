#pragma once

// Random nonconvex benchmark:
//   min_x  sum_{i<n} (1 - x_i)^2 + 2 (x_{i+1} - x_i^2)^2
//   s.t.   A x <= b + C xi,  box_lower <= x <= box_upper
// A (n x n) and C (n x round(0.4 n)) have standard normal entries, xi is
// uniform on [-1, 1], and b_i = margin + sum_j |C_ij| so x = 0 satisfies every
// row with slack at least `margin` for any xi in range.

#include <cstdint>
#include <optional>
#include <span>

#include <nlohmann/json.hpp>

#include "homol2o/problem.hpp"

namespace homol2o::randnlp {

struct RandNlpSystem {
  std::size_t n = 0;
  std::size_t dim_xi = 0;
  DenseMat a;            // n x n
  Eigen::VectorXd b;     // n
  DenseMat c;            // n x dim_xi
  std::uint64_t seed = 0;
  double xi_low = -1.0;
  double xi_high = 1.0;
  double margin = 0.5;
  double box_lower = -2.0;
  double box_upper = 2.0;

  nlohmann::json to_json() const;
  static RandNlpSystem from_json(const nlohmann::json& doc);
};

std::size_t xi_dim_for(std::size_t n);
RandNlpSystem generate_system(std::size_t n, std::uint64_t seed);

double rosenbrock_objective(std::span<const double> x);
double convex_surrogate(std::span<const double> x);
ad::Var rosenbrock_objective(const ad::Var& x);
ad::Var convex_surrogate(const ad::Var& x);

// g = A x - b - C xi for one instance.
Eigen::VectorXd linear_residuals(const RandNlpSystem& sys, std::span<const double> x,
                                 std::span<const double> xi);

// Hidden width of the policy for size n: round(30 sqrt(n / 5)).
std::size_t hidden_width_for(std::size_t n);

class RandNlpProblem final : public ParametricProblem {
 public:
  // `with_box` declares the oracle box as variable bounds.
  explicit RandNlpProblem(RandNlpSystem sys, bool with_box = true);

  std::string kind() const override { return "randnlp"; }
  std::string signature() const override { return signature_; }
  std::size_t dim_x() const override { return system_.n; }
  std::size_t dim_xi() const override { return system_.dim_xi; }
  std::size_t num_eq() const override { return 0; }
  std::size_t num_ineq() const override { return system_.n; }
  const BoundSet& bounds() const override { return bounds_; }
  bool has_surrogate() const override { return true; }

  ProblemGraph record(ad::Tape& tape, const ad::Var& x, const DenseMat& xi,
                      const DomainStage& stage) const override;
  DenseMat sample(std::size_t count, std::uint64_t seed) const override;

  const RandNlpSystem& sys() const { return system_; }

 private:
  RandNlpSystem system_;
  BoundSet bounds_;
  std::string signature_;
};

struct OracleResult {
  bool feasible = false;  // false: no grid point satisfied every constraint
  double objective = 0.0;
  Eigen::VectorXd x;
  std::size_t points_scanned = 0;
};

struct OracleBox {
  double lower = -2.0;
  double upper = 2.0;
};

// Exhaustive scan of the box at spacing `resolution`, keeping the best point
// with every g <= 0; optionally rescans +/- one cell around the incumbent at a
// tenth of the spacing. Only for n <= 3.
OracleResult oracle_grid_search(const RandNlpSystem& sys, std::span<const double> xi,
                                double resolution, OracleBox box = {}, bool refine = true);

}  // namespace homol2o::randnlp
