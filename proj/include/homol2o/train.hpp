#pragma once

#include <functional>
#include <set>
#include <string>
#include <vector>

#include "homol2o/homotopy.hpp"
#include "homol2o/mlp.hpp"
#include "homol2o/optim.hpp"
#include "homol2o/penalty.hpp"

namespace homol2o {

enum class Method { penalty, homotopy };

std::string to_string(Method m);
Method parse_method(const std::string& name);

struct NetConfig {
  std::size_t hidden_layers = 2;
  std::size_t hidden_width = 200;
  Activation activation = Activation::relu;
  // Start the output bias at the problem's nominal decision instead of zero.
  bool nominal_bias = true;
  // Multiplies the initial output-layer weights.
  double output_scale = 1.0;
};

struct TrainConfig {
  Method method = Method::penalty;
  std::set<Transform> transforms;
  double delta_lambda = 0.05;
  HomotopyConstants constants;
  PenaltyWeights weights;
  InequalityPenalty ineq_penalty = InequalityPenalty::hinge;
  NetConfig net;

  std::size_t batch_size = 256;
  double lr = 1e-3;
  int lr_period = 100;
  double lr_factor = 0.1;
  double lr_floor = 1e-5;

  // Penalty baseline: one stage at lambda = 1 with decay throughout.
  int epochs = 1000;
  int warmup = 50;
  int patience = 200;

  // Homotopy stages before lambda = 1 run at a fixed learning rate.
  int stage_epochs = 100;
  int stage_warmup = 50;
  int stage_patience = 50;
  // The lambda = 1 stage runs with decay and its own budget.
  int final_stage_epochs = 1000;
  int final_stage_warmup = 50;
  int final_stage_patience = 200;

  std::uint64_t seed = 0;

  void validate() const;
};

struct EpochLog {
  std::size_t stage = 0;
  double lambda = 1.0;
  int epoch = 0;
  double train_loss = 0.0;
  double val_loss = 0.0;
  double lr = 0.0;
};

struct StageLog {
  std::size_t stage = 0;
  double lambda = 1.0;
  int epochs_run = 0;
  bool early_stopped = false;
  int best_epoch = -1;
  double best_val_loss = 0.0;
  std::uint64_t start_hash = 0;
  std::uint64_t end_hash = 0;
  std::uint64_t steps = 0;
  std::uint64_t batches_per_epoch = 0;
  bool lr_decay = false;
};

struct TrainResult {
  PolicyNet net;
  std::vector<EpochLog> epochs;
  std::vector<StageLog> stages;
  // Stage loss of the returned weights on the validation set.
  double final_val_loss = 0.0;
  std::uint64_t total_steps = 0;
};

using StageCallback = std::function<void(const StageLog&, const PolicyNet&)>;

PolicyNet make_policy(const ParametricProblem& problem, const NetConfig& net, std::uint64_t seed);

// Batch-mean stage loss of `net` on `xi`, evaluated in chunks.
double stage_loss(const PolicyNet& net, const ParametricProblem& problem, const DenseMat& xi,
                  const PenaltyWeights& weights, const HomotopyState& state,
                  InequalityPenalty penalty = InequalityPenalty::hinge);

TrainResult train_baseline(const ParametricProblem& problem, const DenseMat& train_xi,
                           const DenseMat& val_xi, const TrainConfig& config,
                           const StageCallback& on_stage = {});

TrainResult train_homotopy(const ParametricProblem& problem, const DenseMat& train_xi,
                           const DenseMat& val_xi, const TrainConfig& config,
                           const StageCallback& on_stage = {});

// Dispatches on config.method.
TrainResult train(const ParametricProblem& problem, const DenseMat& train_xi,
                  const DenseMat& val_xi, const TrainConfig& config,
                  const StageCallback& on_stage = {});

}  // namespace homol2o
