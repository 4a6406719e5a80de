#pragma once

#include <cstdint>

#include "homol2o/dense.hpp"

namespace homol2o {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Adam with bias correction. Moment buffers are shaped like the parameters
// they were created for.
class Adam {
 public:
  Adam() = default;
  Adam(const ParamList& like, AdamConfig config);

  void step(ParamList& params, const ParamList& grads);

  double lr() const { return config_.lr; }
  void set_lr(double lr) { config_.lr = lr; }
  std::uint64_t step_count() const { return t_; }
  const ParamList& first_moment() const { return m_; }
  const ParamList& second_moment() const { return v_; }

 private:
  AdamConfig config_;
  ParamList m_;
  ParamList v_;
  std::uint64_t t_ = 0;
};

// lr(epoch) = max(floor, base * factor^floor(epoch / period)) while enabled,
// base otherwise.
struct StepDecay {
  double base_lr = 1e-3;
  int period = 100;
  double factor = 0.1;
  double floor = 1e-5;
  bool enabled = true;

  double at(int epoch) const;
};

enum class StopDecision { keep_going, stop };

// Validation-loss early stopping. Epochs before `warmup` are ignored; after
// that the best loss and its weights are tracked, and training stops once the
// number of epochs without improvement exceeds `patience`.
class EarlyStopping {
 public:
  EarlyStopping(int warmup, int patience) : warmup_(warmup), patience_(patience) {}

  StopDecision update(int epoch, double val_loss, const ParamList& params);

  bool has_best() const { return has_best_; }
  double best_loss() const { return best_loss_; }
  int best_epoch() const { return best_epoch_; }
  int epochs_since_improvement() const { return since_improvement_; }
  const ParamList& best_params() const { return best_params_; }

 private:
  int warmup_;
  int patience_;
  bool has_best_ = false;
  double best_loss_ = 0.0;
  int best_epoch_ = -1;
  int since_improvement_ = 0;
  ParamList best_params_;
};

}  // namespace homol2o
