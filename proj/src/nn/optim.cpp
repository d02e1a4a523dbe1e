#include "gsc/nn/optim.hpp"

#include <cmath>
#include <stdexcept>

namespace gsc::nn {

void adam_update(std::span<Parameter* const> params, const AdamConfig& config) {
  bool any = false;
  for (const Parameter* p : params) any = any || p->tensor.has_grad();
  if (!any) throw std::logic_error("adam_update: no parameter has a gradient");

  for (Parameter* p : params) {
    if (!p->tensor.has_grad()) continue;
    ++p->step_count;
    const double t = static_cast<double>(p->step_count);
    const double correction1 = 1.0 - std::pow(config.beta1, t);
    const double correction2 = 1.0 - std::pow(config.beta2, t);
    auto values = p->tensor.mutable_values();
    auto grad = p->tensor.grad();
    for (std::size_t i = 0; i < values.size(); ++i) {
      const double g = grad[i];
      p->adam_m[i] = config.beta1 * p->adam_m[i] + (1.0 - config.beta1) * g;
      p->adam_v[i] = config.beta2 * p->adam_v[i] + (1.0 - config.beta2) * g * g;
      const double m_hat = p->adam_m[i] / correction1;
      const double v_hat = p->adam_v[i] / correction2;
      values[i] -= config.lr * m_hat / (std::sqrt(v_hat) + config.eps);
    }
  }
  for (Parameter* p : params) p->tensor.clear_grad();
}

}  // namespace gsc::nn
