#include "gsc/gnn.hpp"

#include <stdexcept>

namespace gsc {

using nn::Tensor;

std::string_view gnn_variant_name(GnnVariant v) {
  switch (v) {
    case GnnVariant::kGgnn: return "ggnn";
    case GnnVariant::kRgcn: return "rgcn";
    case GnnVariant::kDtnn: return "dtnn";
  }
  return "ggnn";
}

GnnVariant parse_gnn_variant(std::string_view text) {
  for (GnnVariant v : {GnnVariant::kGgnn, GnnVariant::kRgcn, GnnVariant::kDtnn}) {
    if (gnn_variant_name(v) == text) return v;
  }
  throw std::invalid_argument("unknown gnn variant: " + std::string(text));
}

GnnModel::GnnModel(nn::ParameterStore& store, GnnConfig config, Rng& rng) : config_(std::move(config)) {
  if (config_.hidden == 0) throw std::invalid_argument("gnn hidden width must be positive");
  if (config_.edge_types.empty()) {
    config_.edge_types.assign(all_edge_types().begin(), all_edge_types().end());
  }
  slot_of_type_.assign(kEdgeTypeCount, -1);
  const std::size_t h = config_.hidden;
  const std::size_t before = store.scalar_count();
  for (std::size_t slot = 0; slot < config_.edge_types.size(); ++slot) {
    const EdgeType t = config_.edge_types[slot];
    if (slot_of_type_[static_cast<std::size_t>(t)] >= 0) throw std::invalid_argument("duplicate edge type in gnn config");
    slot_of_type_[static_cast<std::size_t>(t)] = static_cast<int>(slot);
  }
  const std::string prefix = "gnn." + std::string(gnn_variant_name(config_.variant));
  switch (config_.variant) {
    case GnnVariant::kGgnn:
      for (EdgeType t : config_.edge_types) {
        const std::string base = prefix + ".edge." + std::string(edge_type_name(t));
        edge_weight_.push_back(store.create(base + ".weight", {h, h}, nn::Init::kGlorot, rng, h, h));
        edge_bias_.push_back(store.create(base + ".bias", {1, h}, nn::Init::kZeros, rng));
      }
      gru_ = nn::GruCell(store, prefix + ".gru", h, h, rng);
      break;
    case GnnVariant::kRgcn:
      for (EdgeType t : config_.edge_types) {
        const std::string base = prefix + ".edge." + std::string(edge_type_name(t));
        edge_weight_.push_back(store.create(base + ".weight", {h, h}, nn::Init::kGlorot, rng, h, h));
      }
      self_weight_ = store.create(prefix + ".self.weight", {h, h}, nn::Init::kGlorot, rng, h, h);
      break;
    case GnnVariant::kDtnn:
      edge_features_ = store.create(prefix + ".edge_features", {config_.edge_types.size(), config_.dtnn_edge_dim},
                                    nn::Init::kEmbedding, rng);
      cf_ = nn::Linear(store, prefix + ".cf", h, h, rng);
      df_ = nn::Linear(store, prefix + ".df", config_.dtnn_edge_dim, h, rng);
      fc_ = nn::Linear(store, prefix + ".fc", h, h, rng, false);
      break;
  }
  parameter_count_ = store.scalar_count() - before;
}

std::size_t GnnModel::count_parameters() const { return parameter_count_; }

std::vector<GnnModel::EdgeGroup> GnnModel::group_edges(const CodeGraph& graph) const {
  std::vector<EdgeGroup> groups(config_.edge_types.size());
  for (std::size_t s = 0; s < groups.size(); ++s) groups[s].type_slot = s;
  for (const Edge& e : graph.edges) {
    const int slot = slot_of_type_[static_cast<std::size_t>(e.type)];
    if (slot < 0) throw std::invalid_argument("edge type not configured for this model: " + std::string(edge_type_name(e.type)));
    groups[static_cast<std::size_t>(slot)].src.push_back(e.src);
    groups[static_cast<std::size_t>(slot)].dst.push_back(e.dst);
  }
  std::vector<EdgeGroup> nonempty;
  for (auto& g : groups) {
    if (!g.src.empty()) nonempty.push_back(std::move(g));
  }
  return nonempty;
}

Tensor GnnModel::round(const std::vector<EdgeGroup>& groups, const Tensor& h) const {
  const std::size_t n = h.rows();
  std::vector<Tensor> messages;
  std::vector<std::size_t> targets;
  switch (config_.variant) {
    case GnnVariant::kGgnn: {
      for (const auto& g : groups) {
        messages.push_back(nn::linear(nn::gather_rows(h, g.src), edge_weight_[g.type_slot], edge_bias_[g.type_slot]));
        targets.insert(targets.end(), g.dst.begin(), g.dst.end());
      }
      Tensor m = messages.empty() ? Tensor(nn::Shape{n, config_.hidden}) : nn::scatter_add_rows(nn::concat_rows(messages), targets, n);
      return gru_(m, h);
    }
    case GnnVariant::kRgcn: {
      Tensor out = nn::linear(h, self_weight_);
      for (const auto& g : groups) {
        std::vector<double> degree(n, 0.0);
        for (std::size_t d : g.dst) degree[d] += 1.0;
        std::vector<double> weight(g.dst.size());
        for (std::size_t i = 0; i < g.dst.size(); ++i) weight[i] = 1.0 / degree[g.dst[i]];
        messages.push_back(nn::scale_rows(nn::linear(nn::gather_rows(h, g.src), edge_weight_[g.type_slot]), weight));
        targets.insert(targets.end(), g.dst.begin(), g.dst.end());
      }
      if (!messages.empty()) out = nn::add(out, nn::scatter_add_rows(nn::concat_rows(messages), targets, n));
      return nn::relu(out);
    }
    case GnnVariant::kDtnn: {
      if (groups.empty()) return h;
      std::vector<std::size_t> src, slot;
      for (const auto& g : groups) {
        src.insert(src.end(), g.src.begin(), g.src.end());
        targets.insert(targets.end(), g.dst.begin(), g.dst.end());
        slot.insert(slot.end(), g.src.size(), g.type_slot);
      }
      Tensor edge_factor = nn::gather_rows(df_(edge_features_), slot);
      Tensor node_factor = nn::gather_rows(cf_(h), src);
      Tensor m = nn::tanh(fc_(nn::mul(node_factor, edge_factor)));
      return nn::add(h, nn::scatter_add_rows(m, targets, n));
    }
  }
  return h;
}

GnnState GnnModel::message_pass(const CodeGraph& graph, const Tensor& h0) const {
  return message_pass(graph, h0, config_.rounds);
}

GnnState GnnModel::message_pass(const CodeGraph& graph, const Tensor& h0, std::size_t rounds) const {
  if (h0.rows() != graph.nodes.size() || h0.cols() != config_.hidden) {
    throw std::invalid_argument("initial states must cover every node with width " + std::to_string(config_.hidden) +
                                ", got " + nn::shape_string(h0.shape()) + " for " +
                                std::to_string(graph.nodes.size()) + " nodes");
  }
  const auto groups = group_edges(graph);
  GnnState state;
  state.hidden.reserve(rounds + 1);
  state.hidden.push_back(h0);
  for (std::size_t t = 0; t < rounds; ++t) state.hidden.push_back(round(groups, state.hidden.back()));
  return state;
}

}  // namespace gsc
