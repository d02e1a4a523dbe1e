#include "gsc/nn/layers.hpp"

#include <stdexcept>

namespace gsc::nn {

Linear::Linear(ParameterStore& store, const std::string& name, std::size_t in, std::size_t out, Rng& rng,
               bool bias) {
  if (in == 0 || out == 0) throw std::invalid_argument("linear layer " + name + " needs non-zero widths");
  weight_ = store.create(name + ".weight", Shape{out, in}, Init::kGlorot, rng, in, out);
  if (bias) bias_ = store.create(name + ".bias", Shape{1, out}, Init::kZeros, rng);
}

Mlp::Mlp(ParameterStore& store, const std::string& name, const std::vector<std::size_t>& widths, Rng& rng) {
  if (widths.size() < 2) throw std::invalid_argument("mlp " + name + " needs at least two widths");
  for (std::size_t i = 0; i + 1 < widths.size(); ++i) {
    layers_.emplace_back(store, name + ".layer" + std::to_string(i), widths[i], widths[i + 1], rng);
  }
}

Tensor Mlp::operator()(const Tensor& x) const {
  Tensor h = x;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    h = layers_[i](h);
    if (i + 1 < layers_.size()) h = relu(h);
  }
  return h;
}

GruCell::GruCell(ParameterStore& store, const std::string& name, std::size_t input, std::size_t hidden, Rng& rng)
    : hidden_(hidden) {
  if (input == 0 || hidden == 0) throw std::invalid_argument("gru " + name + " needs non-zero widths");
  w_ih_ = store.create(name + ".w_ih", Shape{3 * hidden, input}, Init::kGlorot, rng, input, hidden);
  w_hh_ = store.create(name + ".w_hh", Shape{3 * hidden, hidden}, Init::kGlorot, rng, hidden, hidden);
  b_ih_ = store.create(name + ".b_ih", Shape{1, 3 * hidden}, Init::kZeros, rng);
  b_hh_ = store.create(name + ".b_hh", Shape{1, 3 * hidden}, Init::kZeros, rng);
}

Tensor GruCell::operator()(const Tensor& x, const Tensor& h) const {
  const std::size_t H = hidden_;
  const Tensor gi = linear(x, w_ih_, b_ih_);
  const Tensor gh = linear(h, w_hh_, b_hh_);
  const Tensor rz = sigmoid(add(slice_cols(gi, 0, 2 * H), slice_cols(gh, 0, 2 * H)));
  const Tensor r = slice_cols(rz, 0, H);
  const Tensor z = slice_cols(rz, H, 2 * H);
  const Tensor n = tanh(add(slice_cols(gi, 2 * H, 3 * H), mul(r, slice_cols(gh, 2 * H, 3 * H))));
  return add(n, mul(z, sub(h, n)));
}

}  // namespace gsc::nn
