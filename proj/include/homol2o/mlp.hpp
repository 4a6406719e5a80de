#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "homol2o/autodiff.hpp"
#include "homol2o/dense.hpp"

namespace homol2o {

enum class Activation { relu, tanh };

std::string to_string(Activation a);
Activation parse_activation(const std::string& name);

// Per-feature affine normalization of the network input.
struct Standardizer {
  RowVec mean;
  RowVec std;

  bool fitted() const { return mean.size() > 0; }
  // Columns with zero spread get std = 1 so they pass through centred.
  static Standardizer fit(const DenseMat& data);
  static Standardizer identity(Eigen::Index dim);
  DenseMat apply(const DenseMat& data) const;
};

// Multilayer perceptron pi(xi) -> x. Hidden layers share one width and use the
// configured activation; the output layer is affine.
class PolicyNet {
 public:
  PolicyNet() = default;
  PolicyNet(std::vector<std::size_t> layer_dims, Activation activation, std::uint64_t seed);

  static PolicyNet cylinder(std::size_t input_dim, std::size_t output_dim, std::size_t hidden_layers,
                            std::size_t hidden_width, Activation activation, std::uint64_t seed);

  const std::vector<std::size_t>& layer_dims() const { return layer_dims_; }
  std::size_t input_dim() const { return layer_dims_.front(); }
  std::size_t output_dim() const { return layer_dims_.back(); }
  std::size_t num_layers() const { return layer_dims_.size() - 1; }
  Activation activation() const { return activation_; }

  const Standardizer& standardizer() const { return standardizer_; }
  void set_standardizer(Standardizer s);

  // Flat parameter list ordered W0, b0, W1, b1, ... with W_k of shape
  // (dims[k+1], dims[k]) and b_k of shape (1, dims[k+1]).
  const ParamList& params() const { return params_; }
  void set_params(ParamList params);
  std::size_t num_params() const;

  // Plain forward pass; safe to call concurrently on a const net.
  DenseMat forward(const DenseMat& xi) const;

  // Records the forward pass on a tape. When `param_vars` is non-null the
  // weights enter as parameter leaves and are returned in params() order;
  // otherwise they are constants.
  ad::Var record(ad::Tape& tape, const DenseMat& xi, std::vector<ad::Var>* param_vars) const;

 private:
  void check_input(const DenseMat& xi) const;

  std::vector<std::size_t> layer_dims_;
  Activation activation_ = Activation::relu;
  Standardizer standardizer_;
  ParamList params_;
};

}  // namespace homol2o
