#pragma once

#include <cstddef>
#include <map>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "gsc/nn/tensor.hpp"
#include "gsc/random.hpp"

namespace gsc::nn {

struct Parameter {
  std::string name;
  Tensor tensor;
  std::vector<double> adam_m;
  std::vector<double> adam_v;
  std::size_t step_count = 0;
};

enum class Init {
  kGlorot,      // U(-a, a), a = sqrt(6 / (fan_in + fan_out))
  kEmbedding,   // U(-0.05, 0.05)
  kZeros,
};

// Owns every learned tensor of a model under stable hierarchical names
// (e.g. "ggnn.edge.AST.weight"). Iteration order is lexicographic by name.
class ParameterStore {
 public:
  // fan_in/fan_out are used by kGlorot only.
  Tensor create(const std::string& name, Shape shape, Init init, Rng& rng, std::size_t fan_in = 0,
                std::size_t fan_out = 0);

  bool contains(const std::string& name) const { return params_.count(name) != 0; }
  Tensor get(const std::string& name) const;
  std::vector<Parameter*> all();
  std::vector<const Parameter*> all() const;
  std::size_t scalar_count() const;
  void clear_grads();

  // {name: {"shape": [...], "values": [...]}}. Doubles round-trip exactly.
  nlohmann::json to_json() const;
  // Overwrites values of existing parameters; names and shapes must match.
  void load_json(const nlohmann::json& j);

 private:
  std::map<std::string, Parameter> params_;
};

}  // namespace gsc::nn
