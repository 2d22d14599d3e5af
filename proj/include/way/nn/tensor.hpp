#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "way/rng.hpp"

namespace way::nn {

using Shape = std::vector<int>;

std::int64_t numel_of(const Shape& s);
std::string shape_str(const Shape& s);

struct TensorImpl;
class Tensor;

// Reverse-mode tape node. Parents plus a local derivative closure; the DAG of
// impls is the recorded graph. The closure receives the node itself so it can
// read the forward value and the incoming gradient without owning them (a
// self shared_ptr inside the closure would leak the whole graph).
struct TensorImpl {
  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;  // allocated lazily by backward()
  bool requires_grad = false;
  std::vector<std::shared_ptr<TensorImpl>> parents;
  std::function<void(const TensorImpl& self)> backward_fn;

  std::int64_t numel() const { return static_cast<std::int64_t>(data.size()); }
  void ensure_grad() {
    if (grad.size() != data.size()) grad.assign(data.size(), 0.0);
  }
};

// Value-semantics handle over an immutable tensor. Shape is fixed at
// creation. Copies share storage.
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape);
  static Tensor full(Shape shape, double value);
  static Tensor from(Shape shape, std::vector<double> values);
  static Tensor scalar(double value);
  // Leaf with requires_grad set; gradients accumulate across backward calls
  // until zero_grad().
  static Tensor param(Shape shape, std::vector<double> values);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const { return impl_->shape; }
  int dim(int i) const { return impl_->shape[static_cast<std::size_t>(i)]; }
  int rank() const { return static_cast<int>(impl_->shape.size()); }
  std::int64_t numel() const { return impl_->numel(); }

  std::span<const double> data() const { return impl_->data; }
  double item() const;
  double at(std::initializer_list<int> index) const;

  bool requires_grad() const { return impl_->requires_grad; }
  bool has_grad() const { return impl_->grad.size() == impl_->data.size(); }
  std::span<const double> grad() const { return impl_->grad; }
  void zero_grad() { impl_->grad.clear(); }

  // In-place value mutation for the optimizer. Must only be used on leaves
  // between training steps, never on a tensor wired into a live graph.
  std::span<double> data_mut() { return impl_->data; }

  std::shared_ptr<TensorImpl>& impl() { return impl_; }
  const std::shared_ptr<TensorImpl>& impl() const { return impl_; }

 private:
  std::shared_ptr<TensorImpl> impl_;
};

// Thread-local recording switch. Ops record tape nodes only when enabled and
// at least one input requires a gradient.
bool grad_enabled();
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

// Runs reverse-mode accumulation from a scalar loss. Visits each node once in
// reverse topological order; fan-out gradients sum.
void backward(const Tensor& loss);

// ---- primitives ----------------------------------------------------------

Tensor matmul(const Tensor& a, const Tensor& b);   // rank-2 only
Tensor transpose2(const Tensor& a);                // rank-2

// Broadcasting follows numpy right-aligned rules.
Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
Tensor scale(const Tensor& a, double c);

Tensor sigmoid(const Tensor& a);
Tensor tanh_t(const Tensor& a);
Tensor relu(const Tensor& a);

// Row-wise over the last axis.
Tensor softmax(const Tensor& a);
Tensor log_softmax(const Tensor& a);
Tensor layer_norm(const Tensor& a, double eps = 1e-5);

// Inverted dropout: survivors scaled by 1/(1-rate); rate 0 is the identity.
Tensor dropout(const Tensor& a, double rate, rng::Rng& rng);

Tensor mean_pool(const Tensor& a, int axis);  // drops the axis
Tensor max_pool(const Tensor& a, int axis);   // drops the axis; ties -> first

Tensor concat(std::span<const Tensor> parts, int axis);
Tensor slice(const Tensor& a, int axis, int start, int len);
Tensor reshape(const Tensor& a, Shape shape);

// Row `index` of a rank-2 table, as a {1, d} tensor.
Tensor embedding_lookup(const Tensor& table, int index);

// Fills entries above the main diagonal of the trailing two (square) axes
// with a large negative constant so softmax zeroes them.
Tensor causal_mask_fill(const Tensor& a);
inline constexpr double kMaskFill = -1e30;

Tensor sum_all(const Tensor& a);  // -> {1}

// Stacks equal-shape tensors along a new leading axis.
Tensor stack0(std::span<const Tensor> parts);

}  // namespace way::nn
