#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/code_graph.hpp"
#include "gsc/nn/layers.hpp"

namespace gsc {

enum class GnnVariant { kGgnn, kRgcn, kDtnn };

std::string_view gnn_variant_name(GnnVariant v);
GnnVariant parse_gnn_variant(std::string_view text);

struct GnnConfig {
  GnnVariant variant = GnnVariant::kGgnn;
  std::size_t hidden = 64;
  std::size_t rounds = 8;
  std::size_t dtnn_edge_dim = 16;
  std::vector<EdgeType> edge_types;  // defaults to every edge type when empty
};

// Hidden states of every round, rounds + 1 tensors of [nodes x hidden].
struct GnnState {
  std::vector<nn::Tensor> hidden;
  const nn::Tensor& initial() const { return hidden.front(); }
  const nn::Tensor& final() const { return hidden.back(); }
};

// Message passing along edge direction: a message on (w -> v) is delivered to
// v. Parameters are shared across rounds.
//   ggnn: m_v = sum A_t h_w + b_t, h_v' = GRU(m_v, h_v)
//   rgcn: h_v' = relu(W_0 h_v + sum_t sum_w W_t h_w / |N_t(v)|)
//   dtnn: m_v = sum tanh(W_fc((W_cf h_w + b_cf) * (W_df e_t + b_df))), h_v' = h_v + m_v
class GnnModel {
 public:
  GnnModel() = default;
  GnnModel(nn::ParameterStore& store, GnnConfig config, Rng& rng);

  GnnState message_pass(const CodeGraph& graph, const nn::Tensor& h0) const;
  GnnState message_pass(const CodeGraph& graph, const nn::Tensor& h0, std::size_t rounds) const;

  std::size_t count_parameters() const;
  const GnnConfig& config() const { return config_; }

 private:
  struct EdgeGroup {
    std::size_t type_slot;
    std::vector<std::size_t> src;
    std::vector<std::size_t> dst;
  };

  GnnConfig config_;
  std::vector<int> slot_of_type_;  // EdgeType -> parameter slot, -1 if absent
  std::size_t parameter_count_ = 0;
  std::vector<nn::Tensor> edge_weight_;
  std::vector<nn::Tensor> edge_bias_;
  nn::GruCell gru_;
  nn::Tensor self_weight_;
  nn::Tensor edge_features_;
  nn::Linear cf_, df_, fc_;

  std::vector<EdgeGroup> group_edges(const CodeGraph& graph) const;
  nn::Tensor round(const std::vector<EdgeGroup>& groups, const nn::Tensor& h) const;
};

}  // namespace gsc
