#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsc/cache.hpp"
#include "gsc/code_graph.hpp"
#include "gsc/embed.hpp"
#include "gsc/gnn.hpp"

namespace gsc {

enum class Representation { kAst, kAugAst };
std::string_view representation_name(Representation r);
Representation parse_representation(std::string_view text);

// ---------------------------------------------------------------------------
// Truncation

// Breadth-first order from the centers, ignoring edge direction. Centers come
// first in ascending id order; each frontier node's unvisited neighbours are
// appended in ascending id order. Only nodes reachable from a center appear.
std::vector<std::size_t> bfs_order(const CodeGraph& graph, std::span<const std::size_t> centers);

// Sorted ids of the first max_nodes entries of bfs_order. Throws if a center is
// out of range, the center list is empty, or there are more centers than
// max_nodes.
std::vector<std::size_t> truncation_set(const CodeGraph& graph, std::span<const std::size_t> centers,
                                        std::size_t max_nodes);

// Keeps `keep` (sorted, unique) in order and every edge between kept nodes.
// `new_id[old]` is filled for kept nodes. Declarations outside the kept set
// are dropped from node records.
CodeGraph induced_subgraph(const CodeGraph& graph, std::span<const std::size_t> keep,
                           std::vector<std::optional<std::size_t>>* new_id = nullptr);

CodeGraph truncate_graph(const CodeGraph& graph, std::span<const std::size_t> centers, std::size_t max_nodes);

// ---------------------------------------------------------------------------
// Instances

struct InstanceOptions {
  Representation representation = Representation::kAugAst;
  std::optional<CacheMode> cache = CacheMode::kFullGsc;
  std::size_t max_nodes = 500;
  std::size_t max_name_words = 8;
  std::size_t fitb_per_variable = 1;
  std::size_t varnaming_per_file = 0;  // 0 keeps every target
};

struct FitbInstance {
  std::string id;
  CodeGraph graph;
  std::size_t blank_node = 0;
  std::vector<std::size_t> correct_nodes;
  std::string variable;
};

struct VarNamingInstance {
  std::string id;
  CodeGraph graph;
  std::vector<std::size_t> name_me_nodes;
  std::vector<std::string> target_words;  // ends with <EOS>
  std::string original_name;
};

// Declaration node -> every variable node bound to it, the declaration first.
std::vector<std::vector<std::size_t>> usage_groups(const CodeGraph& graph);

// `base` is the un-augmented graph of one file. One usage (never the
// declaration) of each data variable with at least two usages is blanked.
std::vector<FitbInstance> make_fitb_instances(const CodeGraph& base, std::uint64_t seed,
                                              const InstanceOptions& options);

// One instance per declared class, method, field, parameter or local name.
// Constructor names count as usages of their class name.
std::vector<VarNamingInstance> make_varnaming_instances(const CodeGraph& base, std::uint64_t seed,
                                                        const InstanceOptions& options);

// Split words of `name` cut to max_words, followed by <EOS>.
std::vector<std::string> name_target(std::string_view name, std::size_t max_words);

nlohmann::json fitb_to_json(const FitbInstance& inst);
nlohmann::json varnaming_to_json(const VarNamingInstance& inst);
FitbInstance fitb_from_json(const nlohmann::json& j);
VarNamingInstance varnaming_from_json(const nlohmann::json& j);

// ---------------------------------------------------------------------------
// FITB readout

// ggnn: y_v = sigmoid(f1([h_v^T, h_v^0])) * sigmoid(f2(h_v^T)) with one-hidden-layer MLPs
// others: y_v = sigmoid(f(h_v^T))
class FitbReadout {
 public:
  FitbReadout() = default;
  FitbReadout(nn::ParameterStore& store, GnnVariant variant, std::size_t hidden, Rng& rng);

  // [nodes x 1] scores in (0, 1).
  nn::Tensor scores(const GnnState& state) const;

 private:
  GnnVariant variant_ = GnnVariant::kGgnn;
  nn::Mlp f1_, f2_;
};

// Mean binary cross-entropy over all nodes, label 1 on correct nodes.
nn::Tensor fitb_loss(const nn::Tensor& scores, std::span<const std::size_t> correct_nodes);

// Variable nodes by descending score, ties by smallest id; at most k.
std::vector<std::size_t> fitb_ranking(const nn::Tensor& scores, const CodeGraph& graph, std::size_t k);

// ---------------------------------------------------------------------------
// Name decoding

enum class DecoderKind { kClosedVocab, kCharCnnVocab, kPointerSentinel, kGsc };
std::string_view decoder_kind_name(DecoderKind k);
bool is_pointer_decoder(DecoderKind k);

enum class MixtureMode { kNormalized, kPaperLiteral };

// Output word space of one instance: the closed vocabulary followed by cache
// words absent from it.
struct WordSpace {
  std::vector<std::string> words;
  std::size_t vocab_size = 0;
  std::unordered_map<std::string, std::size_t> index;

  // Unknown words map to <UNK>.
  std::size_t id(std::string_view word) const;
};

// p_graph: [1 x (C + 1)], the last entry being the sentinel; p_vocab: [1 x V];
// cache_pos[c] is the word-space position of cache entry c. Returns
// [1 x space_size].
//   normalized:    P(w) = Pg(w) + Pg(s) Pv(w)
//   paper-literal: P(w) = Pg(s) Pg(w) + (1 - Pg(s)) Pv(w), renormalized
nn::Tensor mix_distributions(const nn::Tensor& p_graph, const nn::Tensor& p_vocab,
                             std::span<const std::size_t> cache_pos, std::size_t space_size, MixtureMode mode);

// keys: [(C + 1) x H] projected cache states with the projected sentinel last.
nn::Tensor pointer_sentinel_mix(const nn::Tensor& h, const nn::Tensor& keys, const nn::Tensor& vocab_logits,
                                std::span<const std::size_t> cache_pos, std::size_t space_size, MixtureMode mode);

struct DecoderConfig {
  DecoderKind kind = DecoderKind::kGsc;
  std::size_t hidden = 64;
  std::size_t steps = 8;  // emits steps + 1 tokens at most: up to `steps` words and <EOS>
  MixtureMode mixture = MixtureMode::kNormalized;
};

struct Hypothesis {
  std::vector<std::string> words;  // without <EOS>
  bool ended = false;              // emitted <EOS>
  double log_prob = 0.0;
};

// GRU decoder started from the mean <NAME-ME> state. Its input at each step
// is the name embedding of the previous word, or a learned start vector.
class NameDecoder {
 public:
  struct Context {
    nn::Tensor initial;  // [1 x H]
    nn::Tensor keys;     // pointer decoders only
    std::vector<std::size_t> cache_pos;
    WordSpace space;
  };

  NameDecoder() = default;
  NameDecoder(nn::ParameterStore& store, DecoderConfig config, std::size_t input_dim, std::size_t vocab_size,
              Rng& rng);

  Context prepare(const GnnState& state, const CodeGraph& graph, std::span<const std::size_t> name_me_nodes,
                  const Vocabulary& words) const;
  // One unroll step: returns the next GRU state and the word distribution.
  std::pair<nn::Tensor, nn::Tensor> step(const Context& ctx, const NodeEmbedder& embedder, const nn::Tensor& h,
                                         const std::optional<std::string>& previous) const;
  // Teacher-forced distributions, one per target token.
  std::vector<nn::Tensor> teacher_forced(const Context& ctx, const NodeEmbedder& embedder,
                                         std::span<const std::string> target) const;
  std::vector<Hypothesis> beam_search(const Context& ctx, const NodeEmbedder& embedder, std::size_t width) const;

  const DecoderConfig& config() const { return config_; }

 private:
  DecoderConfig config_;
  nn::GruCell gru_;
  nn::Linear out_;
  nn::Linear pointer_;
  nn::Tensor start_;
  nn::Tensor sentinel_;
};

// Sum over target tokens (through <EOS>) of -log P(token). Tokens missing from
// the word space score the <UNK> entry.
nn::Tensor varnaming_loss(std::span<const nn::Tensor> distributions, std::span<const std::string> target,
                          const WordSpace& space);

// ---------------------------------------------------------------------------
// Metrics

std::size_t levenshtein(std::string_view a, std::string_view b);

struct InstanceOutcome {
  bool top1 = false;
  bool top5 = false;
  double subword = 0.0;
  double edit = 0.0;
  double normalized_edit = 0.0;
};

InstanceOutcome score_fitb(std::span<const std::size_t> ranking, std::span<const std::size_t> correct_nodes);
// `target` ends with <EOS>; hypotheses sorted best first.
InstanceOutcome score_name(std::span<const Hypothesis> hypotheses, std::span<const std::string> target);

struct MetricsReport {
  std::string task;
  std::string split;
  std::size_t count = 0;
  double accuracy = 0.0;
  double top5_accuracy = 0.0;
  std::optional<double> subword_accuracy;
  std::optional<double> edit_distance;
  std::optional<double> normalized_edit_distance;
  double wall_seconds = 0.0;

  nlohmann::json to_json() const;
  static MetricsReport from_json(const nlohmann::json& j);
  bool same_metrics(const MetricsReport& other) const;
};

MetricsReport aggregate(std::string task, std::span<const InstanceOutcome> outcomes);

}  // namespace gsc
