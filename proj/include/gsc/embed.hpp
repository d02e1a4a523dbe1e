#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsc/code_graph.hpp"
#include "gsc/nn/layers.hpp"

namespace gsc {

// Index table with a fixed list of reserved entries at the front. Lookups of
// unknown entries return index 0, which is always the first reserved entry.
class Vocabulary {
 public:
  Vocabulary() = default;
  explicit Vocabulary(std::vector<std::string> reserved);

  // Most frequent entries first, ties broken alphabetically; at most
  // `max_size` non-reserved entries.
  static Vocabulary from_counts(std::vector<std::string> reserved, const std::map<std::string, std::size_t>& counts,
                                std::size_t max_size);

  std::size_t add(const std::string& entry);
  std::size_t index(std::string_view entry) const;
  bool contains(std::string_view entry) const;
  const std::string& entry(std::size_t i) const { return entries_.at(i); }
  std::size_t size() const { return entries_.size(); }
  std::size_t reserved_count() const { return reserved_; }

  nlohmann::json to_json() const;
  static Vocabulary from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> entries_;
  std::unordered_map<std::string, std::size_t> lookup_;
  std::size_t reserved_ = 0;
};

inline constexpr std::string_view kUnkToken = "<UNK>";
inline constexpr std::string_view kEosToken = "<EOS>";
inline constexpr std::size_t kUnkIndex = 0;
inline constexpr std::size_t kEosIndex = 1;

// Word vocabulary with <UNK> = 0 and <EOS> = 1.
Vocabulary make_word_vocab(const std::map<std::string, std::size_t>& counts, std::size_t max_size);
// Type vocabulary with <UNK> = 0 and CACHE_NODE = 1.
Vocabulary make_type_vocab(const std::map<std::string, std::size_t>& counts, std::size_t max_size);

struct CharCnnConfig {
  std::string charset;  // index i + 1 in the embedding table; 0 is the unknown character
  std::size_t max_name_chars = 32;
  std::size_t char_embed_dim = 16;
  std::size_t kernel = 3;
  std::size_t conv1_channels = 32;
  std::size_t conv2_channels = 64;

  static CharCnnConfig defaults();
  std::size_t table_size() const { return charset.size() + 1; }
  nlohmann::json to_json() const;
  static CharCnnConfig from_json(const nlohmann::json& j);
};

class CharCnn {
 public:
  CharCnn() = default;
  CharCnn(nn::ParameterStore& store, const std::string& name, CharCnnConfig config, Rng& rng);

  // Lowercases, truncates to max_name_chars and maps characters to indices.
  std::vector<std::size_t> encode(std::string_view name) const;
  // [1 x conv2_channels]
  nn::Tensor operator()(std::string_view name) const;
  const CharCnnConfig& config() const { return config_; }

 private:
  CharCnnConfig config_;
  nn::Tensor chars_;
  nn::Tensor w1_, b1_, w2_, b2_;
};

enum class NameEmbedding { kClosedVocab, kCharCnn };

struct EmbedConfig {
  std::size_t hidden = 64;
  std::size_t type_dim = 16;
  NameEmbedding names = NameEmbedding::kCharCnn;
  CharCnnConfig charcnn = CharCnnConfig::defaults();
};

// Initial node states: construct embeddings for syntax nodes, a linear map of
// [type embedding, name embedding] for variable and cache nodes, and learned
// rows for the two special tokens.
class NodeEmbedder {
 public:
  NodeEmbedder() = default;
  NodeEmbedder(nn::ParameterStore& store, EmbedConfig config, Vocabulary words, Vocabulary types, Rng& rng);

  // [nodes x hidden]. Throws std::invalid_argument on unknown constructs.
  nn::Tensor init_hidden_states(const CodeGraph& graph) const;
  // Name embedding of a single word or identifier: [1 x name_dim].
  nn::Tensor name_embedding(std::string_view name) const;
  // Mixed type/name projection for arbitrary (type, name) pairs: [k x hidden].
  nn::Tensor project(const std::vector<std::optional<std::string>>& types,
                     const std::vector<std::string>& names) const;
  const EmbedConfig& config() const { return config_; }
  const Vocabulary& words() const { return words_; }
  const Vocabulary& types() const { return types_; }
  std::size_t name_dim() const;

 private:
  EmbedConfig config_;
  Vocabulary words_;
  Vocabulary types_;
  std::unordered_map<std::string, std::size_t> construct_index_;
  nn::Tensor construct_table_;
  nn::Tensor type_table_;
  nn::Tensor special_table_;
  nn::Tensor words_table_;
  CharCnn charcnn_;
  nn::Linear proj_;

  nn::Tensor names_block(const std::vector<std::string>& names) const;
};

}  // namespace gsc
