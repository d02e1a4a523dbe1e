#include "gsc/nn/tensor.hpp"

#include <sstream>

namespace gsc::nn {

namespace {

thread_local std::vector<std::shared_ptr<detail::Node>> g_tape;
thread_local bool g_grad_enabled = true;

}  // namespace

std::size_t shape_size(const Shape& shape) {
  std::size_t n = 1;
  for (std::size_t d : shape) n *= d;
  return n;
}

std::string shape_string(const Shape& shape) {
  std::ostringstream out;
  out << '[';
  for (std::size_t i = 0; i < shape.size(); ++i) {
    if (i) out << ", ";
    out << shape[i];
  }
  out << ']';
  return out.str();
}

std::span<double> detail::Node::grad_buffer() {
  if (grad.empty()) grad.assign(value.size(), 0.0);
  return grad;
}

Tensor::Tensor(Shape shape, double fill) : node_(std::make_shared<detail::Node>()) {
  node_->value.assign(shape_size(shape), fill);
  node_->shape = std::move(shape);
}

Tensor::Tensor(Shape shape, std::vector<double> values) : node_(std::make_shared<detail::Node>()) {
  if (values.size() != shape_size(shape)) {
    throw ShapeError("tensor of shape " + shape_string(shape) + " given " + std::to_string(values.size()) +
                     " values");
  }
  node_->shape = std::move(shape);
  node_->value.assign(values.begin(), values.end());
}

Tensor Tensor::scalar(double value) { return Tensor(Shape{}, std::vector<double>{value}); }

Tensor Tensor::row(std::vector<double> values) {
  const std::size_t n = values.size();
  return Tensor(Shape{1, n}, std::move(values));
}

Tensor Tensor::matrix(std::size_t rows, std::size_t cols, std::vector<double> values) {
  return Tensor(Shape{rows, cols}, std::move(values));
}

Tensor Tensor::wrap(std::shared_ptr<detail::Node> node) {
  Tensor t;
  t.node_ = std::move(node);
  return t;
}

const Shape& Tensor::shape() const {
  static const Shape empty;
  return node_ ? node_->shape : empty;
}

std::size_t Tensor::rows() const {
  const Shape& s = shape();
  return s.size() == 2 ? s[0] : 1;
}

std::size_t Tensor::cols() const {
  const Shape& s = shape();
  if (s.size() == 2) return s[1];
  if (s.size() == 1) return s[0];
  return 1;
}

std::size_t Tensor::size() const { return node_ ? node_->value.size() : 0; }

std::span<const double> Tensor::values() const {
  if (!node_) return {};
  return node_->value;
}

std::span<double> Tensor::mutable_values() {
  if (!node_) return {};
  return node_->value;
}

double Tensor::item() const {
  if (size() != 1) throw ShapeError("item() on tensor of shape " + shape_string(shape()));
  return node_->value[0];
}

double Tensor::at(std::size_t r, std::size_t c) const { return node_->value[r * cols() + c]; }

bool Tensor::requires_grad() const { return node_ && node_->requires_grad; }

Tensor& Tensor::set_requires_grad(bool flag) {
  node_->requires_grad = flag;
  return *this;
}

bool Tensor::has_grad() const { return node_ && !node_->grad.empty(); }

std::span<const double> Tensor::grad() const {
  if (!node_) return {};
  return node_->grad;
}

void Tensor::clear_grad() {
  if (node_) node_->grad.clear();
}

void backward(const Tensor& loss) {
  if (!loss.defined() || loss.size() != 1) {
    throw ShapeError("backward() needs a scalar loss, got shape " + shape_string(loss.shape()));
  }
  if (!loss.requires_grad()) {
    g_tape.clear();
    throw std::logic_error("backward() called on a loss that is not on the tape");
  }
  loss.node()->grad_buffer()[0] += 1.0;
  for (auto it = g_tape.rbegin(); it != g_tape.rend(); ++it) {
    detail::Node& n = **it;
    if (!n.grad.empty() && n.backward) n.backward(n);
  }
  g_tape.clear();
}

bool grad_enabled() { return g_grad_enabled; }
std::size_t tape_size() { return g_tape.size(); }
void clear_tape() { g_tape.clear(); }

NoGradGuard::NoGradGuard() : previous_(g_grad_enabled) { g_grad_enabled = false; }
NoGradGuard::~NoGradGuard() { g_grad_enabled = previous_; }

Tensor detail::record(Shape shape, Buffer value, std::initializer_list<const Tensor*> inputs,
                      std::function<void(Node&)> backward_fn) {
  bool needs = false;
  for (const Tensor* t : inputs) needs = needs || t->requires_grad();
  return record(std::move(shape), std::move(value), needs, std::move(backward_fn));
}

Tensor detail::record(Shape shape, Buffer value, bool inputs_require_grad,
                      std::function<void(Node&)> backward_fn) {
  auto node = std::make_shared<Node>();
  node->shape = std::move(shape);
  node->value = std::move(value);
  if (g_grad_enabled && inputs_require_grad) {
    node->requires_grad = true;
    node->backward = std::move(backward_fn);
    g_tape.push_back(node);
  }
  return Tensor::wrap(std::move(node));
}

}  // namespace gsc::nn
