#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace bearing {

// Single epsilon used by every normalization guard (l2_normalize, cosine
// similarity, heading normalization). Keep it in one place.
inline constexpr double kEps = 1e-12;

using Shape = std::vector<int>;

std::string shape_str(const Shape& s);
std::int64_t shape_numel(const Shape& s);

namespace detail {
struct TensorImpl {
  Shape shape;
  std::vector<double> data;
  std::vector<double> grad;  // same length as data once requires_grad is set
  bool requires_grad = false;
};
}  // namespace detail

// Dense float64 tensor with value semantics over a shared buffer. Data is
// written once at construction; only the grad buffer mutates afterwards
// (and parameter data between optimizer steps, via mutable_data()).
class Tensor {
 public:
  Tensor() = default;

  static Tensor zeros(Shape shape, bool requires_grad = false);
  static Tensor full(Shape shape, double value, bool requires_grad = false);
  static Tensor from_data(Shape shape, std::vector<double> values, bool requires_grad = false);
  static Tensor scalar(double value);

  bool defined() const { return impl_ != nullptr; }
  const Shape& shape() const { return impl_->shape; }
  int ndim() const { return static_cast<int>(impl_->shape.size()); }
  int extent(int axis) const { return impl_->shape[static_cast<std::size_t>(axis)]; }
  std::int64_t numel() const { return static_cast<std::int64_t>(impl_->data.size()); }

  const std::vector<double>& data() const { return impl_->data; }
  double* mutable_data() { return impl_->data.data(); }
  double value() const;  // numel()==1 convenience
  double at(int i) const { return impl_->data[static_cast<std::size_t>(i)]; }
  double at(int i, int j) const;
  double at(int i, int j, int k) const;

  bool requires_grad() const { return impl_->requires_grad; }
  const std::vector<double>& grad() const;
  double* mutable_grad() { return impl_->grad.data(); }

  Tensor detach() const;  // shares data, never tracks gradients
  Tensor clone() const;   // deep copy

  const std::shared_ptr<detail::TensorImpl>& impl() const { return impl_; }

 private:
  explicit Tensor(std::shared_ptr<detail::TensorImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<detail::TensorImpl> impl_;
};

// Reverse-mode tape. Ops append nodes in forward order, so the node list is
// already a topological order and backward() is a single reverse sweep that
// touches each node exactly once. Rebuilt every forward pass; one tape per
// thread (see tape()).
class Tape {
 public:
  void record(std::vector<std::shared_ptr<detail::TensorImpl>> touched,
              std::shared_ptr<detail::TensorImpl> output,
              std::function<void()> backward_fn);

  // Zeroes every participating grad, seeds d(loss)/d(loss)=1, then replays
  // the recorded nodes in reverse. Repeatable: a second call over the same
  // forward reproduces identical gradients.
  void backward(const Tensor& loss);

  void reset() { nodes_.clear(); }
  std::size_t size() const { return nodes_.size(); }

  bool grad_enabled() const { return grad_enabled_; }
  void set_grad_enabled(bool on) { grad_enabled_ = on; }

 private:
  struct Node {
    std::vector<std::shared_ptr<detail::TensorImpl>> touched;
    std::shared_ptr<detail::TensorImpl> output;
    std::function<void()> backward_fn;
  };
  std::vector<Node> nodes_;
  bool grad_enabled_ = true;
};

// Thread-local tape: a forward+backward pass is confined to one thread, and
// model replicas on distinct threads never share a tape.
Tape& tape();

// Disables recording for the enclosed scope (inference, finite differences).
class NoGradGuard {
 public:
  NoGradGuard() : prev_(tape().grad_enabled()) { tape().set_grad_enabled(false); }
  ~NoGradGuard() { tape().set_grad_enabled(prev_); }
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool prev_;
};

// ---- differentiable primitives ------------------------------------------

Tensor add(const Tensor& a, const Tensor& b);       // same shape
Tensor sub(const Tensor& a, const Tensor& b);       // same shape
Tensor mul(const Tensor& a, const Tensor& b);       // elementwise, same shape
Tensor scale(const Tensor& a, double s);
Tensor matmul(const Tensor& a, const Tensor& b);    // {m,k}x{k,n} or {m,k}x{k}
Tensor transpose(const Tensor& a);                  // 2-d
Tensor reshape(const Tensor& a, Shape shape);       // numel preserved
Tensor concat(int axis, const std::vector<Tensor>& parts);
Tensor select_row(const Tensor& a, int row);        // {m,n} -> {n}
Tensor relu(const Tensor& a);
Tensor softmax(const Tensor& a, int axis);
Tensor l2_normalize(const Tensor& a, int axis, double eps = kEps);
Tensor row_l2norms(const Tensor& a);                // {m,n} -> {m}
Tensor sub_rowvec(const Tensor& a, const Tensor& v);  // a {m,n} minus v {n} per row
Tensor sum(const Tensor& a);                        // -> scalar
Tensor mean(const Tensor& a);                       // -> scalar
Tensor conv2d(const Tensor& x, const Tensor& k, int stride);  // x {C,H,W}, k {O,C,kh,kw}
Tensor add_channel_bias(const Tensor& x, const Tensor& b);    // x {C,H,W}, b {C}
Tensor smooth_l1(const Tensor& pred, const Tensor& target, double beta = 1.0);  // -> scalar
Tensor cosine_similarity(const Tensor& a, const Tensor& b);   // vectors -> scalar

// backward through the thread-local tape; loss must be a scalar output of
// some recorded node.
void backward(const Tensor& loss);

}  // namespace bearing
