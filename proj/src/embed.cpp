#include "gsc/embed.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

#include "gsc/cache.hpp"

namespace gsc {

using nn::Tensor;

Vocabulary::Vocabulary(std::vector<std::string> reserved) {
  for (auto& r : reserved) add(r);
  reserved_ = entries_.size();
}

Vocabulary Vocabulary::from_counts(std::vector<std::string> reserved, const std::map<std::string, std::size_t>& counts,
                                   std::size_t max_size) {
  Vocabulary v(std::move(reserved));
  std::vector<std::pair<std::string, std::size_t>> ranked(counts.begin(), counts.end());
  std::stable_sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) { return a.second > b.second; });
  for (const auto& [entry, count] : ranked) {
    if (v.size() - v.reserved_count() >= max_size) break;
    v.add(entry);
  }
  return v;
}

std::size_t Vocabulary::add(const std::string& entry) {
  auto it = lookup_.find(entry);
  if (it != lookup_.end()) return it->second;
  entries_.push_back(entry);
  lookup_.emplace(entry, entries_.size() - 1);
  return entries_.size() - 1;
}

std::size_t Vocabulary::index(std::string_view entry) const {
  auto it = lookup_.find(std::string(entry));
  return it == lookup_.end() ? 0 : it->second;
}

bool Vocabulary::contains(std::string_view entry) const { return lookup_.count(std::string(entry)) != 0; }

nlohmann::json Vocabulary::to_json() const { return {{"reserved", reserved_}, {"entries", entries_}}; }

Vocabulary Vocabulary::from_json(const nlohmann::json& j) {
  const auto entries = j.at("entries").get<std::vector<std::string>>();
  const auto reserved = j.at("reserved").get<std::size_t>();
  if (reserved > entries.size()) throw std::invalid_argument("vocabulary reserved count exceeds size");
  Vocabulary v(std::vector<std::string>(entries.begin(), entries.begin() + static_cast<std::ptrdiff_t>(reserved)));
  for (std::size_t i = reserved; i < entries.size(); ++i) v.add(entries[i]);
  return v;
}

Vocabulary make_word_vocab(const std::map<std::string, std::size_t>& counts, std::size_t max_size) {
  return Vocabulary::from_counts({std::string(kUnkToken), std::string(kEosToken)}, counts, max_size);
}

Vocabulary make_type_vocab(const std::map<std::string, std::size_t>& counts, std::size_t max_size) {
  return Vocabulary::from_counts({std::string(kUnkToken), std::string(kCacheNodeType)}, counts, max_size);
}

CharCnnConfig CharCnnConfig::defaults() {
  CharCnnConfig c;
  c.charset = "abcdefghijklmnopqrstuvwxyz0123456789 !\"#$%&'()*+,-./:;<=>?@[\\]^_`{|}~";
  return c;
}

nlohmann::json CharCnnConfig::to_json() const {
  return {{"charset", charset},       {"max_name_chars", max_name_chars}, {"char_embed_dim", char_embed_dim},
          {"kernel", kernel},         {"conv1_channels", conv1_channels}, {"conv2_channels", conv2_channels}};
}

CharCnnConfig CharCnnConfig::from_json(const nlohmann::json& j) {
  CharCnnConfig c;
  c.charset = j.at("charset").get<std::string>();
  c.max_name_chars = j.at("max_name_chars").get<std::size_t>();
  c.char_embed_dim = j.at("char_embed_dim").get<std::size_t>();
  c.kernel = j.at("kernel").get<std::size_t>();
  c.conv1_channels = j.at("conv1_channels").get<std::size_t>();
  c.conv2_channels = j.at("conv2_channels").get<std::size_t>();
  return c;
}

CharCnn::CharCnn(nn::ParameterStore& store, const std::string& name, CharCnnConfig config, Rng& rng)
    : config_(std::move(config)) {
  if (config_.max_name_chars == 0) throw std::invalid_argument("max_name_chars must be positive");
  if (config_.kernel % 2 == 0) throw std::invalid_argument("charcnn kernel width must be odd");
  const std::size_t k = config_.kernel, e = config_.char_embed_dim, c1 = config_.conv1_channels,
                    c2 = config_.conv2_channels;
  chars_ = store.create(name + ".chars", {config_.table_size(), e}, nn::Init::kEmbedding, rng);
  w1_ = store.create(name + ".conv1.weight", {c1, k * e}, nn::Init::kGlorot, rng, k * e, c1);
  b1_ = store.create(name + ".conv1.bias", {1, c1}, nn::Init::kZeros, rng);
  w2_ = store.create(name + ".conv2.weight", {c2, k * c1}, nn::Init::kGlorot, rng, k * c1, c2);
  b2_ = store.create(name + ".conv2.bias", {1, c2}, nn::Init::kZeros, rng);
}

std::vector<std::size_t> CharCnn::encode(std::string_view name) const {
  std::vector<std::size_t> out;
  for (char ch : name.substr(0, config_.max_name_chars)) {
    const char lower = static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    const auto pos = config_.charset.find(lower);
    out.push_back(pos == std::string::npos ? 0 : pos + 1);
  }
  if (out.empty()) out.push_back(0);
  return out;
}

Tensor CharCnn::operator()(std::string_view name) const {
  const auto idx = encode(name);
  const std::size_t pad = config_.kernel / 2;
  Tensor x = nn::gather_rows(chars_, idx);
  Tensor h = nn::relu(nn::conv1d(x, w1_, b1_, config_.kernel, pad));
  h = nn::relu(nn::conv1d(h, w2_, b2_, config_.kernel, pad));
  return nn::max_rows(h);
}

NodeEmbedder::NodeEmbedder(nn::ParameterStore& store, EmbedConfig config, Vocabulary words, Vocabulary types, Rng& rng)
    : config_(std::move(config)), words_(std::move(words)), types_(std::move(types)) {
  if (config_.hidden == 0 || config_.type_dim == 0) throw std::invalid_argument("embedding widths must be positive");
  const auto& constructs = construct_vocabulary();
  for (std::size_t i = 0; i < constructs.size(); ++i) construct_index_.emplace(constructs[i], i);
  construct_table_ = store.create("embed.construct", {constructs.size(), config_.hidden}, nn::Init::kEmbedding, rng);
  type_table_ = store.create("embed.type", {types_.size(), config_.type_dim}, nn::Init::kEmbedding, rng);
  special_table_ = store.create("embed.special", {2, config_.hidden}, nn::Init::kEmbedding, rng);
  if (config_.names == NameEmbedding::kCharCnn) {
    charcnn_ = CharCnn(store, "embed.charcnn", config_.charcnn, rng);
  } else {
    words_table_ = store.create("embed.words", {words_.size(), config_.hidden}, nn::Init::kEmbedding, rng);
  }
  proj_ = nn::Linear(store, "embed.proj", config_.type_dim + name_dim(), config_.hidden, rng);
}

std::size_t NodeEmbedder::name_dim() const {
  return config_.names == NameEmbedding::kCharCnn ? config_.charcnn.conv2_channels : config_.hidden;
}

Tensor NodeEmbedder::name_embedding(std::string_view name) const { return names_block({std::string(name)}); }

Tensor NodeEmbedder::names_block(const std::vector<std::string>& names) const {
  std::vector<std::string> unique = names;
  std::sort(unique.begin(), unique.end());
  unique.erase(std::unique(unique.begin(), unique.end()), unique.end());
  std::vector<std::size_t> row_of(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    row_of[i] = static_cast<std::size_t>(std::lower_bound(unique.begin(), unique.end(), names[i]) - unique.begin());
  }

  Tensor table;
  if (config_.names == NameEmbedding::kCharCnn) {
    std::vector<Tensor> rows;
    rows.reserve(unique.size());
    for (const auto& n : unique) rows.push_back(charcnn_(n));
    table = nn::concat_rows(rows);
  } else {
    std::vector<std::size_t> word_idx, owner;
    std::vector<double> weight;
    for (std::size_t u = 0; u < unique.size(); ++u) {
      auto words = split_name(unique[u]).words;
      if (words.empty()) words.emplace_back(kUnkToken);
      for (const auto& w : words) {
        word_idx.push_back(words_.index(w));
        owner.push_back(u);
        weight.push_back(1.0 / static_cast<double>(words.size()));
      }
    }
    table = nn::scatter_add_rows(nn::scale_rows(nn::gather_rows(words_table_, word_idx), weight), owner, unique.size());
  }
  return nn::gather_rows(table, row_of);
}

Tensor NodeEmbedder::project(const std::vector<std::optional<std::string>>& types,
                             const std::vector<std::string>& names) const {
  std::vector<std::size_t> type_idx;
  type_idx.reserve(types.size());
  for (const auto& t : types) type_idx.push_back(t ? types_.index(*t) : kUnkIndex);
  return proj_(nn::concat_cols({nn::gather_rows(type_table_, type_idx), names_block(names)}));
}

Tensor NodeEmbedder::init_hidden_states(const CodeGraph& graph) const {
  const std::size_t n = graph.nodes.size();
  std::vector<std::size_t> syntax_pos, syntax_idx, named_pos, special_pos, special_idx;
  std::vector<std::optional<std::string>> named_types;
  std::vector<std::string> named_names;
  for (std::size_t i = 0; i < n; ++i) {
    const GraphNode& node = graph.nodes[i];
    switch (node.kind) {
      case NodeKind::kSyntax: {
        auto it = construct_index_.find(node.construct);
        if (it == construct_index_.end()) throw std::invalid_argument("unknown construct label: " + node.construct);
        syntax_pos.push_back(i);
        syntax_idx.push_back(it->second);
        break;
      }
      case NodeKind::kVariable:
      case NodeKind::kCache:
        named_pos.push_back(i);
        named_types.push_back(node.kind == NodeKind::kCache ? std::optional<std::string>(kCacheNodeType) : node.type);
        named_names.push_back(node.name.value_or(""));
        break;
      case NodeKind::kSpecial:
        if (node.name == kFillInTheBlank) {
          special_idx.push_back(0);
        } else if (node.name == kNameMe) {
          special_idx.push_back(1);
        } else {
          throw std::invalid_argument("unknown special token: " + node.name.value_or(""));
        }
        special_pos.push_back(i);
        break;
    }
  }
  std::vector<Tensor> parts;
  if (!syntax_pos.empty()) {
    parts.push_back(nn::scatter_add_rows(nn::gather_rows(construct_table_, syntax_idx), syntax_pos, n));
  }
  if (!named_pos.empty()) {
    parts.push_back(nn::scatter_add_rows(project(named_types, named_names), named_pos, n));
  }
  if (!special_pos.empty()) {
    parts.push_back(nn::scatter_add_rows(nn::gather_rows(special_table_, special_idx), special_pos, n));
  }
  if (parts.empty()) return Tensor(nn::Shape{0, config_.hidden});
  Tensor h = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) h = nn::add(h, parts[i]);
  return h;
}

}  // namespace gsc
