#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gsc/nn/ops.hpp"
#include "gsc/nn/parameters.hpp"

namespace gsc::nn {

class Linear {
 public:
  Linear() = default;
  Linear(ParameterStore& store, const std::string& name, std::size_t in, std::size_t out, Rng& rng,
         bool bias = true);

  Tensor operator()(const Tensor& x) const { return linear(x, weight_, bias_); }
  const Tensor& weight() const { return weight_; }
  const Tensor& bias() const { return bias_; }

 private:
  Tensor weight_;
  Tensor bias_;
};

// Linear layers with relu between them and no activation after the last.
class Mlp {
 public:
  Mlp() = default;
  Mlp(ParameterStore& store, const std::string& name, const std::vector<std::size_t>& widths, Rng& rng);

  Tensor operator()(const Tensor& x) const;

 private:
  std::vector<Linear> layers_;
};

// Standard GRU cell over row-batched inputs:
//   r = sigmoid(x W_ir + h W_hr + b), z = sigmoid(x W_iz + h W_hz + b),
//   n = tanh(x W_in + b_in + r * (h W_hn + b_hn)), h' = n + z * (h - n).
class GruCell {
 public:
  GruCell() = default;
  GruCell(ParameterStore& store, const std::string& name, std::size_t input, std::size_t hidden, Rng& rng);

  Tensor operator()(const Tensor& x, const Tensor& h) const;
  std::size_t hidden_size() const { return hidden_; }

 private:
  std::size_t hidden_ = 0;
  Tensor w_ih_, w_hh_, b_ih_, b_hh_;
};

}  // namespace gsc::nn
