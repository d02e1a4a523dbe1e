#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <new>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace gsc::nn {

using Shape = std::vector<std::size_t>;

std::size_t shape_size(const Shape& shape);
std::string shape_string(const Shape& shape);

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Cache-line aligned so that vectorized kernels see the same layout on every
// allocation and produce bitwise reproducible results.
template <class T>
struct AlignedAllocator {
  using value_type = T;
  static constexpr std::align_val_t kAlign{64};
  AlignedAllocator() = default;
  template <class U>
  AlignedAllocator(const AlignedAllocator<U>&) {}
  T* allocate(std::size_t n) { return static_cast<T*>(::operator new(n * sizeof(T), kAlign)); }
  void deallocate(T* p, std::size_t) { ::operator delete(p, kAlign); }
  template <class U>
  bool operator==(const AlignedAllocator<U>&) const { return true; }
};

using Buffer = std::vector<double, AlignedAllocator<double>>;

namespace detail {

struct Node {
  Shape shape;
  Buffer value;
  // Empty until something flows into it.
  Buffer grad;
  bool requires_grad = false;
  std::function<void(Node&)> backward;

  std::span<double> grad_buffer();
};

}  // namespace detail

// Dense row-major array of doubles. Rank 0, 1 and 2 are supported; rank-1
// tensors behave as 1 x n rows in matrix ops. Copies share storage.
class Tensor {
 public:
  Tensor() = default;
  explicit Tensor(Shape shape, double fill = 0.0);
  Tensor(Shape shape, std::vector<double> values);

  static Tensor scalar(double value);
  static Tensor row(std::vector<double> values);
  static Tensor matrix(std::size_t rows, std::size_t cols, std::vector<double> values);

  bool defined() const { return node_ != nullptr; }
  const Shape& shape() const;
  std::size_t rank() const { return shape().size(); }
  std::size_t rows() const;
  std::size_t cols() const;
  std::size_t size() const;

  std::span<const double> values() const;
  // Writes through this span are not recorded on the tape.
  std::span<double> mutable_values();
  double item() const;
  double at(std::size_t r, std::size_t c) const;

  bool requires_grad() const;
  Tensor& set_requires_grad(bool flag);
  bool has_grad() const;
  std::span<const double> grad() const;
  void clear_grad();

  detail::Node* node() const { return node_.get(); }
  const std::shared_ptr<detail::Node>& handle() const { return node_; }
  static Tensor wrap(std::shared_ptr<detail::Node> node);

 private:
  std::shared_ptr<detail::Node> node_;
};

// Runs reverse-mode accumulation from a scalar loss through every operation
// recorded on this thread's tape, then clears the tape.
void backward(const Tensor& loss);

bool grad_enabled();
std::size_t tape_size();
void clear_tape();

class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

namespace detail {

// Builds an op result. When gradients are enabled and any input requires them
// the result is pushed on the tape with the given backward function.
Tensor record(Shape shape, Buffer value, std::initializer_list<const Tensor*> inputs,
              std::function<void(Node&)> backward);
Tensor record(Shape shape, Buffer value, bool inputs_require_grad,
              std::function<void(Node&)> backward);

}  // namespace detail

}  // namespace gsc::nn
