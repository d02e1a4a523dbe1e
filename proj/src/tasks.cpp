#include "gsc/tasks.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "gsc/ast.hpp"
#include "gsc/augment.hpp"
#include "gsc/random.hpp"

namespace gsc {

using nn::Tensor;

std::string_view representation_name(Representation r) { return r == Representation::kAst ? "ast" : "augast"; }

Representation parse_representation(std::string_view text) {
  if (text == "ast") return Representation::kAst;
  if (text == "augast") return Representation::kAugAst;
  throw std::invalid_argument("unknown representation: " + std::string(text));
}

// ---------------------------------------------------------------------------
// Truncation

std::vector<std::size_t> bfs_order(const CodeGraph& graph, std::span<const std::size_t> centers) {
  const std::size_t n = graph.nodes.size();
  if (centers.empty()) throw std::invalid_argument("truncation needs at least one center");
  std::vector<std::vector<std::size_t>> adj(n);
  for (const Edge& e : graph.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  for (auto& a : adj) {
    std::sort(a.begin(), a.end());
    a.erase(std::unique(a.begin(), a.end()), a.end());
  }
  std::vector<std::size_t> start(centers.begin(), centers.end());
  std::sort(start.begin(), start.end());
  start.erase(std::unique(start.begin(), start.end()), start.end());
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> order;
  for (std::size_t c : start) {
    if (c >= n) throw std::out_of_range("truncation center " + std::to_string(c) + " not in graph");
    seen[c] = true;
    order.push_back(c);
  }
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (std::size_t w : adj[order[head]]) {
      if (seen[w]) continue;
      seen[w] = true;
      order.push_back(w);
    }
  }
  return order;
}

std::vector<std::size_t> truncation_set(const CodeGraph& graph, std::span<const std::size_t> centers,
                                        std::size_t max_nodes) {
  auto order = bfs_order(graph, centers);
  const std::set<std::size_t> distinct(centers.begin(), centers.end());
  if (distinct.size() > max_nodes) {
    throw std::invalid_argument(std::to_string(distinct.size()) + " centers exceed max_nodes " +
                                std::to_string(max_nodes));
  }
  if (order.size() > max_nodes) order.resize(max_nodes);
  std::sort(order.begin(), order.end());
  return order;
}

CodeGraph induced_subgraph(const CodeGraph& graph, std::span<const std::size_t> keep,
                           std::vector<std::optional<std::size_t>>* new_id) {
  std::vector<std::optional<std::size_t>> map(graph.nodes.size());
  CodeGraph out;
  out.file = graph.file;
  for (std::size_t old : keep) map[old] = out.add_node(graph.nodes.at(old));
  for (GraphNode& n : out.nodes) {
    if (n.decl) n.decl = *n.decl < map.size() ? map[*n.decl] : std::nullopt;
  }
  for (const Edge& e : graph.edges) {
    if (map[e.src] && map[e.dst]) out.add_edge(*map[e.src], *map[e.dst], e.type);
  }
  if (new_id) *new_id = std::move(map);
  return out;
}

CodeGraph truncate_graph(const CodeGraph& graph, std::span<const std::size_t> centers, std::size_t max_nodes) {
  return induced_subgraph(graph, truncation_set(graph, centers, max_nodes));
}

// ---------------------------------------------------------------------------
// Instances

namespace {

struct Finalized {
  CodeGraph graph;
  std::vector<std::optional<std::size_t>> new_id;
};

// Truncates around the centers, leaving room for the cache nodes the kept
// names will create, then augments, adds the cache and the reversed edges.
// Augmentation runs on the whole file so dataflow edges reflect the full
// control flow; only edges between kept nodes survive.
Finalized finalize(CodeGraph g, std::span<const std::size_t> centers, const InstanceOptions& options) {
  const auto order = bfs_order(g, centers);
  if (std::set<std::size_t>(centers.begin(), centers.end()).size() > options.max_nodes) {
    throw std::invalid_argument("more centers than max_nodes");
  }
  std::size_t keep_count = std::min(order.size(), options.max_nodes);
  if (options.cache) {
    std::set<std::string> words;
    keep_count = 0;
    for (std::size_t i = 0; i < order.size(); ++i) {
      const GraphNode& node = g.nodes[order[i]];
      std::set<std::string> next = words;
      if (node.kind == NodeKind::kVariable && node.name) {
        for (auto& w : split_name(*node.name).words) next.insert(std::move(w));
      }
      if (i + 1 + next.size() > options.max_nodes) break;
      words = std::move(next);
      keep_count = i + 1;
    }
  }
  std::vector<std::size_t> keep(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(keep_count));
  std::sort(keep.begin(), keep.end());

  if (options.representation == Representation::kAugAst) augment(g);
  Finalized out;
  out.graph = induced_subgraph(g, keep, &out.new_id);
  if (options.cache) build_cache(out.graph, *options.cache);
  add_reverse_edges(out.graph);
  return out;
}

void make_special(GraphNode& node, std::string_view token, bool keep_decl) {
  node.kind = NodeKind::kSpecial;
  node.name = std::string(token);
  node.type.reset();
  if (!keep_decl) node.decl.reset();
}

bool is_constructor_name(const CodeGraph& g, const SyntaxTree& tree, std::size_t node) {
  const auto parent = tree.parent[node];
  return g.nodes[node].construct == construct::kMethodName && parent &&
         g.nodes[*parent].construct == construct::kConstructorDecl;
}

}  // namespace

std::vector<std::vector<std::size_t>> usage_groups(const CodeGraph& graph) {
  std::map<std::size_t, std::vector<std::size_t>> by_decl;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& n = graph.nodes[i];
    if (n.kind != NodeKind::kVariable || !n.decl || *n.decl >= graph.nodes.size()) continue;
    if (i != *n.decl) by_decl[*n.decl].push_back(i);
  }
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t d = 0; d < graph.nodes.size(); ++d) {
    const GraphNode& n = graph.nodes[d];
    if (n.kind != NodeKind::kVariable || n.decl != d) continue;
    std::vector<std::size_t> group{d};
    auto it = by_decl.find(d);
    if (it != by_decl.end()) group.insert(group.end(), it->second.begin(), it->second.end());
    out.push_back(std::move(group));
  }
  return out;
}

std::vector<std::string> name_target(std::string_view name, std::size_t max_words) {
  auto words = split_name(name).words;
  if (words.size() > max_words) words.resize(max_words);
  words.emplace_back(kEosToken);
  return words;
}

std::vector<FitbInstance> make_fitb_instances(const CodeGraph& base, std::uint64_t seed,
                                              const InstanceOptions& options) {
  if (base.has_reverse_edges()) throw std::invalid_argument("instance input must be an un-augmented graph");
  Rng rng(derive_seed(seed, "fitb:" + base.file));
  std::vector<FitbInstance> out;
  for (const auto& group : usage_groups(base)) {
    if (group.size() < 2 || !is_data_declaration(base.nodes[group.front()].construct)) continue;
    std::vector<std::size_t> uses(group.begin() + 1, group.end());
    rng.shuffle(uses);
    if (uses.size() > options.fitb_per_variable) uses.resize(options.fitb_per_variable);
    std::sort(uses.begin(), uses.end());
    for (std::size_t blank : uses) {
      CodeGraph g = base;
      make_special(g.nodes[blank], kFillInTheBlank, false);
      const std::size_t centers[] = {blank};
      Finalized f = finalize(std::move(g), centers, options);
      FitbInstance inst;
      for (std::size_t u : group) {
        if (u != blank && f.new_id[u]) inst.correct_nodes.push_back(*f.new_id[u]);
      }
      if (inst.correct_nodes.empty()) continue;
      inst.id = base.file + "#fitb:" + std::to_string(blank);
      inst.blank_node = *f.new_id[blank];
      inst.variable = base.nodes[blank].name.value_or("");
      inst.graph = std::move(f.graph);
      out.push_back(std::move(inst));
    }
  }
  return out;
}

std::vector<VarNamingInstance> make_varnaming_instances(const CodeGraph& base, std::uint64_t seed,
                                                        const InstanceOptions& options) {
  if (base.has_reverse_edges()) throw std::invalid_argument("instance input must be an un-augmented graph");
  const SyntaxTree tree(base);
  std::vector<std::vector<std::size_t>> targets;
  for (auto& group : usage_groups(base)) {
    const GraphNode& decl = base.nodes[group.front()];
    const std::string& c = decl.construct;
    if (is_constructor_name(base, tree, group.front())) continue;
    if (!(c == construct::kClassName || c == construct::kMethodName || is_data_declaration(c))) continue;
    if (split_name(decl.name.value_or("")).words.empty()) continue;
    if (c == construct::kClassName) {
      for (std::size_t i = 0; i < base.nodes.size(); ++i) {
        if (is_constructor_name(base, tree, i) && base.nodes[i].name == decl.name) group.push_back(i);
      }
      std::sort(group.begin() + 1, group.end());
    }
    targets.push_back(std::move(group));
  }
  if (options.varnaming_per_file && targets.size() > options.varnaming_per_file) {
    Rng rng(derive_seed(seed, "varnaming:" + base.file));
    rng.shuffle(targets);
    targets.resize(options.varnaming_per_file);
    std::sort(targets.begin(), targets.end());
  }

  std::vector<VarNamingInstance> out;
  for (const auto& group : targets) {
    CodeGraph g = base;
    const std::string original = *base.nodes[group.front()].name;
    for (std::size_t u : group) make_special(g.nodes[u], kNameMe, true);
    Finalized f = finalize(std::move(g), group, options);
    VarNamingInstance inst;
    inst.id = base.file + "#varnaming:" + std::to_string(group.front());
    for (std::size_t u : group) inst.name_me_nodes.push_back(*f.new_id[u]);
    std::sort(inst.name_me_nodes.begin(), inst.name_me_nodes.end());
    inst.target_words = name_target(original, options.max_name_words);
    inst.original_name = original;
    inst.graph = std::move(f.graph);
    out.push_back(std::move(inst));
  }
  return out;
}

nlohmann::json fitb_to_json(const FitbInstance& inst) {
  nlohmann::json j = graph_to_json(inst.graph);
  j["task"] = "fitb";
  j["id"] = inst.id;
  j["blank_node"] = inst.blank_node;
  j["answer"] = inst.correct_nodes;
  j["variable"] = inst.variable;
  return j;
}

nlohmann::json varnaming_to_json(const VarNamingInstance& inst) {
  nlohmann::json j = graph_to_json(inst.graph);
  j["task"] = "varnaming";
  j["id"] = inst.id;
  j["name_me_nodes"] = inst.name_me_nodes;
  j["answer"] = inst.target_words;
  j["original_name"] = inst.original_name;
  return j;
}

FitbInstance fitb_from_json(const nlohmann::json& j) {
  if (j.at("task") != "fitb") throw std::invalid_argument("not a fitb record");
  FitbInstance inst;
  inst.graph = graph_from_json(j);
  inst.id = j.at("id").get<std::string>();
  inst.blank_node = j.at("blank_node").get<std::size_t>();
  inst.correct_nodes = j.at("answer").get<std::vector<std::size_t>>();
  inst.variable = j.value("variable", "");
  return inst;
}

VarNamingInstance varnaming_from_json(const nlohmann::json& j) {
  if (j.at("task") != "varnaming") throw std::invalid_argument("not a varnaming record");
  VarNamingInstance inst;
  inst.graph = graph_from_json(j);
  inst.id = j.at("id").get<std::string>();
  inst.name_me_nodes = j.at("name_me_nodes").get<std::vector<std::size_t>>();
  inst.target_words = j.at("answer").get<std::vector<std::string>>();
  inst.original_name = j.value("original_name", "");
  return inst;
}

// ---------------------------------------------------------------------------
// FITB readout

FitbReadout::FitbReadout(nn::ParameterStore& store, GnnVariant variant, std::size_t hidden, Rng& rng)
    : variant_(variant) {
  if (variant == GnnVariant::kGgnn) {
    f1_ = nn::Mlp(store, "readout.fitb.f1", {2 * hidden, hidden, 1}, rng);
    f2_ = nn::Mlp(store, "readout.fitb.f2", {hidden, hidden, 1}, rng);
  } else {
    f1_ = nn::Mlp(store, "readout.fitb.f", {hidden, hidden, 1}, rng);
  }
}

Tensor FitbReadout::scores(const GnnState& state) const {
  if (variant_ == GnnVariant::kGgnn) {
    return nn::mul(nn::sigmoid(f1_(nn::concat_cols({state.final(), state.initial()}))),
                   nn::sigmoid(f2_(state.final())));
  }
  return nn::sigmoid(f1_(state.final()));
}

Tensor fitb_loss(const Tensor& scores, std::span<const std::size_t> correct_nodes) {
  std::vector<double> labels(scores.size(), 0.0);
  for (std::size_t c : correct_nodes) labels.at(c) = 1.0;
  return nn::binary_cross_entropy(scores, labels);
}

std::vector<std::size_t> fitb_ranking(const Tensor& scores, const CodeGraph& graph, std::size_t k) {
  std::vector<std::size_t> cand;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    if (graph.nodes[i].kind == NodeKind::kVariable) cand.push_back(i);
  }
  const auto v = scores.values();
  std::stable_sort(cand.begin(), cand.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
  if (cand.size() > k) cand.resize(k);
  return cand;
}

// ---------------------------------------------------------------------------
// Name decoding

std::string_view decoder_kind_name(DecoderKind k) {
  switch (k) {
    case DecoderKind::kClosedVocab: return "closed";
    case DecoderKind::kCharCnnVocab: return "charcnn";
    case DecoderKind::kPointerSentinel: return "sentinel";
    case DecoderKind::kGsc: return "gsc";
  }
  return "gsc";
}

bool is_pointer_decoder(DecoderKind k) { return k == DecoderKind::kPointerSentinel || k == DecoderKind::kGsc; }

std::size_t WordSpace::id(std::string_view word) const {
  auto it = index.find(std::string(word));
  return it == index.end() ? kUnkIndex : it->second;
}

Tensor mix_distributions(const Tensor& p_graph, const Tensor& p_vocab, std::span<const std::size_t> cache_pos,
                         std::size_t space_size, MixtureMode mode) {
  const std::size_t c = p_graph.cols() - 1;
  const std::size_t v = p_vocab.cols();
  if (cache_pos.size() != c) throw std::invalid_argument("cache position count does not match graph distribution");
  if (space_size < v) throw std::invalid_argument("word space smaller than vocabulary");
  const Tensor pg = nn::transpose(p_graph);
  const Tensor sentinel = nn::slice_rows(pg, c, c + 1);
  Tensor vocab = nn::transpose(p_vocab);
  if (space_size > v) vocab = nn::concat_rows({vocab, Tensor(nn::Shape{space_size - v, 1})});
  std::optional<Tensor> graph;
  if (c > 0) graph = nn::scatter_add_rows(nn::slice_rows(pg, 0, c), cache_pos, space_size);
  Tensor mixed;
  if (!graph) {
    mixed = vocab;
  } else if (mode == MixtureMode::kNormalized) {
    mixed = nn::add(*graph, nn::scale_by(vocab, sentinel));
  } else {
    mixed = nn::add(nn::scale_by(*graph, sentinel), nn::scale_by(vocab, nn::one_minus(sentinel)));
    mixed = nn::scale_by(mixed, nn::exp(nn::scale(nn::log(nn::sum(mixed)), -1.0)));
  }
  return nn::transpose(mixed);
}

Tensor pointer_sentinel_mix(const Tensor& h, const Tensor& keys, const Tensor& vocab_logits,
                            std::span<const std::size_t> cache_pos, std::size_t space_size, MixtureMode mode) {
  const Tensor scores = nn::linear(h, keys);
  const std::size_t c = scores.cols() - 1;
  if (mode == MixtureMode::kNormalized || c == 0) {
    return mix_distributions(nn::softmax_rows(scores), nn::softmax_rows(vocab_logits), cache_pos, space_size, mode);
  }
  // Literal mode evaluated as Pg(s) exp(a_w - m) + sum_c exp(a_c - m) Pv(w), m the largest cache score. This is
  // proportional to the probability form but cannot underflow to 0/0 when the sentinel takes all the mass.
  if (cache_pos.size() != c) throw std::invalid_argument("cache position count does not match graph distribution");
  const std::size_t v = vocab_logits.cols();
  if (space_size < v) throw std::invalid_argument("word space smaller than vocabulary");
  const auto sv = scores.values();
  const double m = *std::max_element(sv.begin(), sv.begin() + static_cast<std::ptrdiff_t>(c));
  const Tensor shifted = nn::exp(nn::add_row(nn::slice_cols(scores, 0, c), Tensor::row(std::vector<double>(c, -m))));
  const Tensor sentinel = nn::slice_cols(nn::softmax_rows(scores), c, c + 1);
  const Tensor cache_mass = nn::reshape(nn::sum(shifted), {1, 1});
  Tensor vocab = nn::transpose(nn::softmax_rows(vocab_logits));
  if (space_size > v) vocab = nn::concat_rows({vocab, Tensor(nn::Shape{space_size - v, 1})});
  const Tensor graph = nn::scatter_add_rows(nn::transpose(shifted), cache_pos, space_size);
  Tensor mixed = nn::add(nn::scale_by(graph, sentinel), nn::scale_by(vocab, cache_mass));
  mixed = nn::scale_by(mixed, nn::exp(nn::scale(nn::log(nn::sum(mixed)), -1.0)));
  return nn::transpose(mixed);
}

NameDecoder::NameDecoder(nn::ParameterStore& store, DecoderConfig config, std::size_t input_dim,
                         std::size_t vocab_size, Rng& rng)
    : config_(config) {
  gru_ = nn::GruCell(store, "decoder.gru", input_dim, config_.hidden, rng);
  out_ = nn::Linear(store, "decoder.out", config_.hidden, vocab_size, rng);
  start_ = store.create("decoder.start", {1, input_dim}, nn::Init::kEmbedding, rng);
  if (is_pointer_decoder(config_.kind)) {
    pointer_ = nn::Linear(store, "decoder.pointer", config_.hidden, config_.hidden, rng);
    sentinel_ = store.create("decoder.sentinel", {1, config_.hidden}, nn::Init::kEmbedding, rng);
  }
}

NameDecoder::Context NameDecoder::prepare(const GnnState& state, const CodeGraph& graph,
                                          std::span<const std::size_t> name_me_nodes,
                                          const Vocabulary& words) const {
  if (name_me_nodes.empty()) throw std::invalid_argument("name decoding needs at least one <NAME-ME> node");
  Context ctx;
  ctx.initial = nn::mean_rows(nn::gather_rows(state.final(), name_me_nodes));
  for (std::size_t i = 0; i < words.size(); ++i) {
    ctx.space.words.push_back(words.entry(i));
    ctx.space.index.emplace(words.entry(i), i);
  }
  ctx.space.vocab_size = words.size();
  if (!is_pointer_decoder(config_.kind)) return ctx;

  std::vector<std::size_t> cache_nodes;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& n = graph.nodes[i];
    if (n.kind != NodeKind::kCache) continue;
    cache_nodes.push_back(i);
    const std::string& w = n.name.value();
    auto [it, added] = ctx.space.index.emplace(w, ctx.space.words.size());
    if (added) ctx.space.words.push_back(w);
    ctx.cache_pos.push_back(it->second);
  }
  Tensor rows = sentinel_;
  if (!cache_nodes.empty()) rows = nn::concat_rows({nn::gather_rows(state.final(), cache_nodes), sentinel_});
  ctx.keys = pointer_(rows);
  return ctx;
}

std::pair<Tensor, Tensor> NameDecoder::step(const Context& ctx, const NodeEmbedder& embedder, const Tensor& h,
                                            const std::optional<std::string>& previous) const {
  const Tensor x = previous ? embedder.name_embedding(*previous) : start_;
  Tensor next = gru_(x, h);
  const Tensor logits = out_(next);
  Tensor dist = is_pointer_decoder(config_.kind)
                    ? pointer_sentinel_mix(next, ctx.keys, logits, ctx.cache_pos, ctx.space.words.size(),
                                           config_.mixture)
                    : nn::softmax_rows(logits);
  return {std::move(next), std::move(dist)};
}

std::vector<Tensor> NameDecoder::teacher_forced(const Context& ctx, const NodeEmbedder& embedder,
                                                std::span<const std::string> target) const {
  if (target.size() > config_.steps + 1) {
    throw std::invalid_argument("target of " + std::to_string(target.size()) + " tokens exceeds " +
                                std::to_string(config_.steps + 1) + " decoder outputs");
  }
  std::vector<Tensor> out;
  Tensor h = ctx.initial;
  std::optional<std::string> previous;
  for (const std::string& token : target) {
    auto [next, dist] = step(ctx, embedder, h, previous);
    out.push_back(std::move(dist));
    h = std::move(next);
    previous = token;
  }
  return out;
}

std::vector<Hypothesis> NameDecoder::beam_search(const Context& ctx, const NodeEmbedder& embedder,
                                                 std::size_t width) const {
  if (width == 0) throw std::invalid_argument("beam width must be at least 1");
  nn::NoGradGuard no_grad;
  struct Live {
    Hypothesis hyp;
    Tensor h;
  };
  struct Candidate {
    std::size_t beam;
    std::size_t word;
    double log_prob;
  };
  auto better = [](const Hypothesis& a, const Hypothesis& b) {
    if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
    if (a.words != b.words) return a.words < b.words;
    return a.ended && !b.ended;
  };

  std::vector<Live> live{{Hypothesis{}, ctx.initial}};
  std::vector<Hypothesis> finished;
  for (std::size_t t = 0; t <= config_.steps && !live.empty(); ++t) {
    std::vector<Candidate> cands;
    std::vector<Tensor> states;
    for (std::size_t b = 0; b < live.size(); ++b) {
      const auto& words = live[b].hyp.words;
      std::optional<std::string> previous;
      if (!words.empty()) previous = words.back();
      auto [next, dist] = step(ctx, embedder, live[b].h, previous);
      states.push_back(next);
      const auto p = dist.values();
      for (std::size_t w = 0; w < p.size(); ++w) {
        if (p[w] > 0.0) cands.push_back({b, w, live[b].hyp.log_prob + std::log(p[w])});
      }
    }
    auto cand_hyp = [&](const Candidate& c) {
      Hypothesis h = live[c.beam].hyp;
      h.log_prob = c.log_prob;
      if (c.word == kEosIndex) {
        h.ended = true;
      } else {
        h.words.push_back(ctx.space.words[c.word]);
      }
      return h;
    };
    const std::size_t keep = std::min(width, cands.size());
    std::partial_sort(cands.begin(), cands.begin() + static_cast<std::ptrdiff_t>(keep), cands.end(),
                      [&](const Candidate& a, const Candidate& b) {
                        if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
                        return better(cand_hyp(a), cand_hyp(b));
                      });
    std::vector<Live> next_live;
    for (std::size_t i = 0; i < keep; ++i) {
      Hypothesis h = cand_hyp(cands[i]);
      if (h.ended) {
        finished.push_back(std::move(h));
      } else {
        next_live.push_back({std::move(h), states[cands[i].beam]});
      }
    }
    live = std::move(next_live);
  }
  for (auto& l : live) finished.push_back(std::move(l.hyp));
  std::sort(finished.begin(), finished.end(), better);
  if (finished.size() > width) finished.resize(width);
  return finished;
}

Tensor varnaming_loss(std::span<const Tensor> distributions, std::span<const std::string> target,
                      const WordSpace& space) {
  if (distributions.size() < target.size()) throw std::invalid_argument("fewer distributions than target tokens");
  if (target.empty()) throw std::invalid_argument("empty name target");
  Tensor total;
  for (std::size_t t = 0; t < target.size(); ++t) {
    const std::size_t idx[] = {space.id(target[t])};
    const Tensor nll = nn::scale(nn::log(nn::pick(distributions[t], idx)), -1.0);
    total = total.defined() ? nn::add(total, nll) : nll;
  }
  return nn::sum(total);
}

// ---------------------------------------------------------------------------
// Metrics

std::size_t levenshtein(std::string_view a, std::string_view b) {
  std::vector<std::size_t> prev(b.size() + 1), cur(b.size() + 1);
  std::iota(prev.begin(), prev.end(), std::size_t{0});
  for (std::size_t i = 1; i <= a.size(); ++i) {
    cur[0] = i;
    for (std::size_t j = 1; j <= b.size(); ++j) {
      cur[j] = std::min({prev[j] + 1, cur[j - 1] + 1, prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1)});
    }
    std::swap(prev, cur);
  }
  return prev[b.size()];
}

InstanceOutcome score_fitb(std::span<const std::size_t> ranking, std::span<const std::size_t> correct_nodes) {
  auto correct = [&](std::size_t v) { return std::find(correct_nodes.begin(), correct_nodes.end(), v) != correct_nodes.end(); };
  InstanceOutcome o;
  o.top1 = !ranking.empty() && correct(ranking.front());
  for (std::size_t i = 0; i < ranking.size() && i < 5; ++i) o.top5 |= correct(ranking[i]);
  return o;
}

InstanceOutcome score_name(std::span<const Hypothesis> hypotheses, std::span<const std::string> target) {
  if (target.empty() || target.back() != kEosToken) throw std::invalid_argument("name target must end with <EOS>");
  const std::vector<std::string> truth(target.begin(), target.end() - 1);
  auto join = [](const std::vector<std::string>& words) {
    std::string s;
    for (const auto& w : words) s += w;
    return s;
  };
  auto exact = [&](const Hypothesis& h) { return h.ended && h.words == truth; };
  InstanceOutcome o;
  const Hypothesis best = hypotheses.empty() ? Hypothesis{} : hypotheses.front();
  o.top1 = !hypotheses.empty() && exact(best);
  for (std::size_t i = 0; i < hypotheses.size() && i < 5; ++i) o.top5 |= exact(hypotheses[i]);
  std::size_t hits = 0;
  for (std::size_t i = 0; i < truth.size() && i < best.words.size(); ++i) hits += best.words[i] == truth[i];
  o.subword = truth.empty() ? 1.0 : static_cast<double>(hits) / static_cast<double>(truth.size());
  const std::string true_text = join(truth);
  o.edit = static_cast<double>(levenshtein(join(best.words), true_text));
  o.normalized_edit = o.edit / static_cast<double>(std::max<std::size_t>(1, true_text.size()));
  return o;
}

MetricsReport aggregate(std::string task, std::span<const InstanceOutcome> outcomes) {
  if (outcomes.empty()) throw std::invalid_argument("cannot compute metrics over zero instances");
  MetricsReport r;
  r.task = std::move(task);
  r.count = outcomes.size();
  double sub = 0, edit = 0, norm = 0;
  std::size_t top1 = 0, top5 = 0;
  for (const auto& o : outcomes) {
    top1 += o.top1;
    top5 += o.top5;
    sub += o.subword;
    edit += o.edit;
    norm += o.normalized_edit;
  }
  const double n = static_cast<double>(outcomes.size());
  r.accuracy = static_cast<double>(top1) / n;
  r.top5_accuracy = static_cast<double>(top5) / n;
  if (r.task == "varnaming") {
    r.subword_accuracy = sub / n;
    r.edit_distance = edit / n;
    r.normalized_edit_distance = norm / n;
  }
  return r;
}

nlohmann::json MetricsReport::to_json() const {
  auto opt = [](const std::optional<double>& v) { return v ? nlohmann::json(*v) : nlohmann::json(nullptr); };
  return {{"task", task},
          {"split", split},
          {"count", count},
          {"accuracy", accuracy},
          {"top5_accuracy", top5_accuracy},
          {"subword_accuracy", opt(subword_accuracy)},
          {"edit_distance", opt(edit_distance)},
          {"normalized_edit_distance", opt(normalized_edit_distance)},
          {"wall_seconds", wall_seconds}};
}

MetricsReport MetricsReport::from_json(const nlohmann::json& j) {
  auto opt = [&](const char* key) -> std::optional<double> {
    if (!j.contains(key) || j[key].is_null()) return std::nullopt;
    return j[key].get<double>();
  };
  MetricsReport r;
  r.task = j.at("task").get<std::string>();
  r.split = j.value("split", "");
  r.count = j.at("count").get<std::size_t>();
  r.accuracy = j.at("accuracy").get<double>();
  r.top5_accuracy = j.at("top5_accuracy").get<double>();
  r.subword_accuracy = opt("subword_accuracy");
  r.edit_distance = opt("edit_distance");
  r.normalized_edit_distance = opt("normalized_edit_distance");
  r.wall_seconds = j.value("wall_seconds", 0.0);
  return r;
}

bool MetricsReport::same_metrics(const MetricsReport& o) const {
  return task == o.task && split == o.split && count == o.count && accuracy == o.accuracy &&
         top5_accuracy == o.top5_accuracy && subword_accuracy == o.subword_accuracy &&
         edit_distance == o.edit_distance && normalized_edit_distance == o.normalized_edit_distance;
}

}  // namespace gsc
