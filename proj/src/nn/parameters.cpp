#include "gsc/nn/parameters.hpp"

#include <cmath>
#include <stdexcept>

namespace gsc::nn {

Tensor ParameterStore::create(const std::string& name, Shape shape, Init init, Rng& rng, std::size_t fan_in,
                              std::size_t fan_out) {
  if (params_.count(name)) throw std::invalid_argument("duplicate parameter name: " + name);
  const std::size_t n = shape_size(shape);
  std::vector<double> values(n, 0.0);
  switch (init) {
    case Init::kGlorot: {
      if (fan_in + fan_out == 0) throw std::invalid_argument("glorot init needs fan sizes: " + name);
      const double a = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
      for (double& v : values) v = rng.uniform(-a, a);
      break;
    }
    case Init::kEmbedding:
      for (double& v : values) v = rng.uniform(-0.05, 0.05);
      break;
    case Init::kZeros:
      break;
  }
  Parameter p;
  p.name = name;
  p.tensor = Tensor(std::move(shape), std::move(values));
  p.tensor.set_requires_grad(true);
  p.adam_m.assign(n, 0.0);
  p.adam_v.assign(n, 0.0);
  auto [it, _] = params_.emplace(name, std::move(p));
  return it->second.tensor;
}

Tensor ParameterStore::get(const std::string& name) const {
  auto it = params_.find(name);
  if (it == params_.end()) throw std::out_of_range("unknown parameter: " + name);
  return it->second.tensor;
}

std::vector<Parameter*> ParameterStore::all() {
  std::vector<Parameter*> out;
  for (auto& [_, p] : params_) out.push_back(&p);
  return out;
}

std::vector<const Parameter*> ParameterStore::all() const {
  std::vector<const Parameter*> out;
  for (const auto& [_, p] : params_) out.push_back(&p);
  return out;
}

std::size_t ParameterStore::scalar_count() const {
  std::size_t n = 0;
  for (const auto& [_, p] : params_) n += p.tensor.size();
  return n;
}

void ParameterStore::clear_grads() {
  for (auto& [_, p] : params_) p.tensor.clear_grad();
}

nlohmann::json ParameterStore::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  for (const auto& [name, p] : params_) {
    nlohmann::json entry;
    entry["shape"] = p.tensor.shape();
    auto values = p.tensor.values();
    entry["values"] = std::vector<double>(values.begin(), values.end());
    j[name] = std::move(entry);
  }
  return j;
}

void ParameterStore::load_json(const nlohmann::json& j) {
  for (auto& [name, p] : params_) {
    if (!j.contains(name)) throw std::runtime_error("checkpoint is missing parameter " + name);
    const auto& entry = j.at(name);
    const auto shape = entry.at("shape").get<Shape>();
    if (shape != p.tensor.shape()) {
      throw std::runtime_error("parameter " + name + " has shape " + shape_string(shape) + " in checkpoint, expected " +
                               shape_string(p.tensor.shape()));
    }
    const auto values = entry.at("values").get<std::vector<double>>();
    auto dst = p.tensor.mutable_values();
    std::copy(values.begin(), values.end(), dst.begin());
    p.tensor.clear_grad();
  }
  for (const auto& [name, _] : j.items()) {
    if (!params_.count(name)) throw std::runtime_error("checkpoint has unexpected parameter " + name);
  }
}

}  // namespace gsc::nn
