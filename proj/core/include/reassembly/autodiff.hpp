#pragma once

#include <functional>
#include <memory>
#include <vector>

#include <Eigen/Dense>

#include "reassembly/errors.hpp"

namespace reassembly::ad {

using Mat = Eigen::MatrixXd;
using IndexVec = std::shared_ptr<const std::vector<int>>;

struct Var {
  int id = -1;
  bool valid() const { return id >= 0; }
};

/// Reverse-mode tape over dense float64 matrices. One tape per forward pass;
/// parameters enter as grad-tracked leaves. Gradients are exact reverse-mode
/// derivatives; correctness is pinned by finite-difference tests.
class Tape {
 public:
  Var constant(Mat v);
  Var leaf(Mat v);  // grad-tracked

  const Mat& value(Var v) const;
  const Mat& grad(Var v) const;  // zero matrix if no gradient flowed

  // Elementwise / linear algebra.
  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  Var mul(Var a, Var b);
  Var scale(Var a, double s);
  Var add_scalar(Var a, double s);
  Var matmul(Var a, Var b);
  Var square(Var a);
  Var gelu(Var a);
  Var sigmoid(Var a);

  // Shape plumbing.
  Var concat_cols(const std::vector<Var>& parts);
  Var slice_cols(Var a, int begin, int n);
  Var gather_rows(Var a, IndexVec rows);
  Var broadcast_row(Var row, int nrows);

  // Reductions.
  Var sum(Var a);                       // 1x1
  Var mean_over_rows(Var a);            // R x C -> 1 x C
  Var mean_over_cols(Var a);            // R x C -> R x 1
  Var row_dot(Var a, Var b);            // R x C, R x C -> R x 1

  // Row-structured ops.
  Var layer_norm_rows(Var a, Var gamma, Var beta, double eps = 1e-5);
  Var l2_normalize_rows(Var a, double eps = 1e-12);

  // Graph attention primitives. src/dst index rows of the node matrices;
  // the head dimension partitions columns into equal blocks.
  Var edge_logits(Var q, Var k, IndexVec src, IndexVec dst, int heads);
  Var segment_softmax(Var logits, IndexVec dst, int num_nodes);
  Var edge_mix(Var alpha, Var v, IndexVec src, IndexVec dst, int num_nodes);

  // Image ops. Images are stored channels x pixels (row-major pixels).
  Var conv2d_3x3(Var img, Var kernel, Var bias, int side);
  Var avg_pool2(Var img, int side);

  // Vector-channel ops for the rotation-equivariant point encoder.
  // Activations are channels x (3 * npoints).
  Var vn_gate(Var v, Var a, Var b);        // per-channel norm gating
  Var vn_mean_points(Var v);               // channels x 3N -> channels x 3
  Var vn_tile_points(Var v3, int npoints); // channels x 3 -> channels x 3N

  void backward(Var loss_scalar);

  std::size_t size() const { return nodes_.size(); }

 private:
  struct Node {
    Mat value;
    Mat grad;
    bool needs_grad = false;
    std::function<void()> back;
  };

  Var push(Mat v, bool needs_grad, std::function<void()> back = nullptr);
  Mat& grad_ref(int id);
  bool needs(Var v) const { return nodes_[static_cast<std::size_t>(v.id)].needs_grad; }

  std::vector<Node> nodes_;
  static const Mat empty_;
};

}  // namespace reassembly::ad
