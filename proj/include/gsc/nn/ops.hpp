#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "gsc/nn/tensor.hpp"

// Differentiable primitives. All matrix ops treat rank-1 inputs as 1 x n rows.
// Shape mismatches throw ShapeError naming both operand shapes.
namespace gsc::nn {

Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& a);
// x * w^T + b; w is out x in, b is 1 x out (may be undefined).
Tensor linear(const Tensor& x, const Tensor& w, const Tensor& b = {});

Tensor add(const Tensor& a, const Tensor& b);
Tensor sub(const Tensor& a, const Tensor& b);
Tensor mul(const Tensor& a, const Tensor& b);
// Adds a 1 x m row to every row of an n x m matrix.
Tensor add_row(const Tensor& x, const Tensor& row);
Tensor scale(const Tensor& x, double factor);
// Multiplies every element by the single element of `s`.
Tensor scale_by(const Tensor& x, const Tensor& s);
Tensor one_minus(const Tensor& x);

Tensor sigmoid(const Tensor& x);
Tensor tanh(const Tensor& x);
Tensor relu(const Tensor& x);
Tensor exp(const Tensor& x);
Tensor log(const Tensor& x);

Tensor softmax_rows(const Tensor& x);
Tensor log_softmax_rows(const Tensor& x);

Tensor concat_cols(const std::vector<Tensor>& parts);
Tensor concat_rows(const std::vector<Tensor>& parts);
Tensor slice_cols(const Tensor& x, std::size_t begin, std::size_t end);
Tensor slice_rows(const Tensor& x, std::size_t begin, std::size_t end);
Tensor reshape(const Tensor& x, Shape shape);

Tensor sum(const Tensor& x);
Tensor mean(const Tensor& x);
Tensor mean_rows(const Tensor& x);
// Max-pool over axis 0: n x m -> 1 x m.
Tensor max_rows(const Tensor& x);

Tensor gather_rows(const Tensor& x, std::span<const std::size_t> index);
inline Tensor embedding(const Tensor& table, std::span<const std::size_t> index) {
  return gather_rows(table, index);
}
// out[index[i]] += x[i]; out has `rows` rows.
Tensor scatter_add_rows(const Tensor& x, std::span<const std::size_t> index, std::size_t rows);
// Multiplies row i by the constant weights[i].
Tensor scale_rows(const Tensor& x, std::span<const double> weights);
// Selects flat elements into a 1 x k row.
Tensor pick(const Tensor& x, std::span<const std::size_t> flat_index);

// x: L x in_channels; w: out_channels x (kernel * in_channels), laid out as
// [tap][in_channel]; b: 1 x out_channels. Zero padding on both ends.
Tensor conv1d(const Tensor& x, const Tensor& w, const Tensor& b, std::size_t kernel, std::size_t padding);

// Mean binary cross-entropy of probabilities against 0/1 labels. Probabilities
// are clipped to [1e-7, 1 - 1e-7]; values outside [0, 1] are an error.
Tensor binary_cross_entropy(const Tensor& probs, std::span<const double> labels);

}  // namespace gsc::nn
