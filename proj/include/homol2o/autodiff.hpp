#pragma once

// Reverse-mode automatic differentiation over 2-D dense matrices.
//
// A Tape records every operation applied to its variables. Calling
// Tape::backward on a 1x1 result walks the record in reverse and leaves
// d(result)/d(node) in each node's gradient slot. Only nodes that depend on a
// parameter leaf carry gradients.
//
// Elementwise binary ops broadcast an operand whose shape is 1x1, 1xC or Rx1
// against an RxC partner. Nothing beyond that is supported.

#include <cstdint>
#include <deque>
#include <functional>
#include <initializer_list>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

#include "homol2o/dense.hpp"

namespace homol2o::ad {

class Tape;

// Handle to a node on a Tape. Cheap to copy; valid while the tape lives.
class Var {
 public:
  Var() = default;

  bool valid() const { return tape_ != nullptr; }
  Tape* tape() const { return tape_; }
  std::size_t id() const { return id_; }

  const DenseMat& value() const;
  Eigen::Index rows() const { return value().rows(); }
  Eigen::Index cols() const { return value().cols(); }
  // Value of a 1x1 variable.
  double scalar() const;

 private:
  friend class Tape;
  Var(Tape* tape, std::size_t id) : tape_(tape), id_(id) {}

  Tape* tape_ = nullptr;
  std::size_t id_ = 0;
};

class Tape {
 public:
  using Backward = std::function<void(Tape&, std::size_t)>;

  Tape() = default;
  Tape(const Tape&) = delete;
  Tape& operator=(const Tape&) = delete;

  // Leaf that never receives a gradient.
  Var constant(DenseMat value);
  // Leaf whose gradient is accumulated by backward().
  Var parameter(DenseMat value);

  // Appends an op node. `backward` receives the tape and the node id and is
  // expected to push the node's gradient into its parents via accumulate().
  Var record(std::string_view op, DenseMat value, std::initializer_list<Var> parents,
             Backward backward);
  Var record(std::string_view op, DenseMat value, std::span<const Var> parents,
             Backward backward);

  const DenseMat& value(const Var& v) const;
  // Gradient of the last backward() target with respect to v. Zeros when no
  // gradient reached v.
  DenseMat grad(const Var& v) const;

  bool requires_grad(std::size_t id) const { return nodes_[id].requires_grad; }
  const DenseMat& node_value(std::size_t id) const { return nodes_[id].value; }
  const DenseMat& node_grad(std::size_t id) const { return nodes_[id].grad; }
  void accumulate(std::size_t id, const DenseMat& g);

  // Runs reverse accumulation from a 1x1 variable on this tape.
  void backward(const Var& loss);

  std::size_t size() const { return nodes_.size(); }

  // Kink tracking records which side of every non-differentiable point
  // (relu and abs at 0, ties in row_max) each entry fell on. Two evaluations
  // with the same signature share one smooth piece of the graph.
  void set_track_kinks(bool on) { track_kinks_ = on; }
  bool track_kinks() const { return track_kinks_; }
  void note_sign_pattern(const DenseMat& input);
  void note_argmax(const std::vector<Eigen::Index>& argmax, double gap);
  std::uint64_t kink_signature() const { return kink_signature_; }
  double kink_margin() const { return kink_margin_; }

 private:
  struct Node {
    DenseMat value;
    DenseMat grad;
    bool requires_grad = false;
    bool has_grad = false;
    std::string_view op;
    Backward backward;
  };

  Var push(Node node);

  // deque keeps references to earlier values stable while recording.
  std::deque<Node> nodes_;
  std::string_view backward_op_;  // op whose backward is running
  bool track_kinks_ = false;
  std::uint64_t kink_signature_ = 1469598103934665603ULL;
  double kink_margin_ = std::numeric_limits<double>::infinity();
};

Var operator+(const Var& a, const Var& b);
Var operator-(const Var& a, const Var& b);
Var operator*(const Var& a, const Var& b);
Var operator-(const Var& a);

Var scale(const Var& a, double s);
Var shift(const Var& a, double c);
Var matmul(const Var& a, const Var& b);
// x * W^T + b with W of shape (out, in) and b of shape (1, out).
Var affine(const Var& x, const Var& weight, const Var& bias);

Var relu(const Var& a);
// Hinge penalty relu(a); recorded under its own op name.
Var hinge(const Var& a);
Var tanh(const Var& a);
Var square(const Var& a);
Var abs(const Var& a);
Var sqrt(const Var& a);

Var sum(const Var& a);
Var mean(const Var& a);
Var row_sum(const Var& a);
Var row_max(const Var& a);

Var cols(const Var& a, Eigen::Index start, Eigen::Index count);
Var select_cols(const Var& a, const std::vector<Eigen::Index>& indices);
Var hcat(std::span<const Var> parts);
Var hcat(std::initializer_list<Var> parts);

}  // namespace homol2o::ad
