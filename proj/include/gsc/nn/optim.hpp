#pragma once

#include <span>

#include "gsc/nn/parameters.hpp"

namespace gsc::nn {

struct AdamConfig {
  double lr = 1e-3;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
};

// Bias-corrected Adam step over every parameter that received a gradient,
// then clears all gradients. Throws if no parameter has a gradient.
void adam_update(std::span<Parameter* const> params, const AdamConfig& config);

}  // namespace gsc::nn
