// Acceptance suite. Prints one PASS/FAIL line per criterion and exits non-zero
// if any criterion fails. Criterion numbers given on the command line restrict
// the run; --corpus overrides the bundled corpus directory.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cctype>
#include <cstdio>
#include <cstring>
#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gsc/ast.hpp"
#include "gsc/augment.hpp"
#include "gsc/corpus.hpp"
#include "gsc/harness.hpp"
#include "oracles/dataflow_oracle.hpp"
#include "oracles/dense_gnn.hpp"
#include "oracles/gradcheck.hpp"
#include "oracles/program_generator.hpp"

using namespace gsc;

namespace {

// Pinned tolerances and budgets.
constexpr double kGradEps = 1e-5;
constexpr double kGradTol = 1e-4;
constexpr std::size_t kGradSeeds = 20;
constexpr double kOracleTol = 1e-10;
constexpr std::size_t kOracleGraphs = 100;
constexpr std::size_t kDataflowGenerated = 40;
constexpr std::size_t kDataflowMinFixtures = 30;
constexpr std::size_t kFuzzSteps = 1000;
constexpr double kSumTol = 1e-6;
constexpr double kFastLimitSeconds = 60.0;
constexpr double kOverfitFitbTarget = 0.95;
constexpr double kOverfitNamingTarget = 0.90;
constexpr std::size_t kOverfitMaxEpochs = 200;
constexpr double kOverfitLimitSeconds = 1800.0;
constexpr std::size_t kDirectionalMaxEpochs = 20;
constexpr std::size_t kDirectionalPatience = 5;
constexpr std::size_t kMinCorpusInstances = 2000;
constexpr std::size_t kBaselineRadius = 8;
constexpr std::size_t kBaselineTrials = 1000;
constexpr double kBaselineSigmas = 3.0;

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) { return std::chrono::duration<double>(Clock::now() - start).count(); }

std::string fmt(const char* format, auto... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, format, args...);
  return buf;
}

struct Outcome {
  bool pass = false;
  std::string detail;
};

// ---------------------------------------------------------------------------
// Shared corpus state

struct Corpus {
  std::filesystem::path root;
  std::vector<SourceUnit> units;
  std::vector<CodeGraph> graphs;  // parsed units only, in unit order
  std::vector<std::string> failures;

  static Corpus load(const std::filesystem::path& root) {
    Corpus c;
    c.root = root;
    c.units = scan_corpus(root).units;
    for (const SourceUnit& u : c.units) {
      try {
        c.graphs.push_back(ast_to_graph(parse_source(u.text), u.key()));
      } catch (const ParseError& e) {
        c.failures.push_back(u.key() + ": " + e.what());
      }
    }
    return c;
  }
};

nn::Tensor random_tensor(Rng& rng, std::size_t rows, std::size_t cols, double scale = 1.0) {
  std::vector<double> v(rows * cols);
  for (double& x : v) x = rng.uniform(-scale, scale);
  return nn::Tensor(nn::Shape{rows, cols}, std::move(v));
}

void randomize(nn::ParameterStore& store, Rng& rng, double scale) {
  for (nn::Parameter* p : store.all())
    for (double& v : p->tensor.mutable_values()) v = rng.uniform(-scale, scale);
}

std::vector<nn::Tensor> with_parameters(std::vector<nn::Tensor> inputs, const nn::ParameterStore& store) {
  for (const nn::Parameter* p : store.all()) inputs.push_back(p->tensor);
  return inputs;
}

nn::Tensor project(const nn::Tensor& y, const nn::Tensor& w) { return nn::sum(nn::mul(y, w)); }

Vocabulary word_vocab(std::initializer_list<const char*> words) {
  std::map<std::string, std::size_t> counts;
  for (const char* w : words) counts[w] = 1;
  return make_word_vocab(counts, 100);
}

EmbedConfig small_embed(NameEmbedding names, std::size_t hidden) {
  EmbedConfig cfg;
  cfg.hidden = hidden;
  cfg.type_dim = 3;
  cfg.names = names;
  cfg.charcnn.char_embed_dim = 3;
  cfg.charcnn.conv1_channels = 4;
  cfg.charcnn.conv2_channels = hidden;
  return cfg;
}

// ---------------------------------------------------------------------------
// 1. Gradient correctness

Outcome gradients() {
  std::map<std::string, testing::GradCheckResult> worst;
  auto record = [&](const std::string& layer, const testing::GradCheckResult& r) {
    auto& w = worst[layer];
    w.checked += r.checked;
    if (r.max_relative_error >= w.max_relative_error) {
      w.max_relative_error = r.max_relative_error;
      w.worst = r.worst;
    }
  };
  for (std::uint64_t seed = 0; seed < kGradSeeds; ++seed) {
    {
      Rng rng(seed);
      nn::ParameterStore store;
      CharCnnConfig cfg = CharCnnConfig::defaults();
      cfg.char_embed_dim = 3;
      cfg.conv1_channels = 4;
      cfg.conv2_channels = 5;
      CharCnn cnn(store, "cnn", cfg, rng);
      randomize(store, rng, 0.5);
      const nn::Tensor proj = random_tensor(rng, 1, 5);
      record("charcnn", testing::check_gradients(with_parameters({}, store),
                                                 [&] { return project(cnn("getValue"), proj); }, kGradEps));
    }
    {
      Rng rng(seed);
      nn::ParameterStore store;
      nn::GruCell gru(store, "gru", 3, 4, rng);
      randomize(store, rng, 0.6);
      nn::Tensor x = random_tensor(rng, 2, 3), h = random_tensor(rng, 2, 4), proj = random_tensor(rng, 2, 4);
      record("gru", testing::check_gradients(with_parameters({x, h}, store),
                                             [&] { return project(gru(x, gru(x, h)), proj); }, kGradEps));
    }
    {
      Rng rng(seed);
      nn::ParameterStore store;
      nn::Mlp mlp(store, "mlp", {5, 8, 6, 3}, rng);
      randomize(store, rng, 0.6);
      nn::Tensor x = random_tensor(rng, 4, 5), proj = random_tensor(rng, 4, 3);
      record("mlp", testing::check_gradients(with_parameters({x}, store), [&] { return project(mlp(x), proj); },
                                             kGradEps));
    }
    for (GnnVariant variant : {GnnVariant::kGgnn, GnnVariant::kRgcn, GnnVariant::kDtnn}) {
      Rng rng(seed);
      nn::ParameterStore store;
      GnnConfig cfg;
      cfg.variant = variant;
      cfg.hidden = 3;
      cfg.rounds = 2;
      cfg.dtnn_edge_dim = 3;
      cfg.edge_types.assign(all_edge_types().begin(), all_edge_types().begin() + 3);
      GnnModel model(store, cfg, rng);
      testing::randomize_parameters(store, rng);
      CodeGraph g = testing::random_typed_graph(rng, 4, 3);
      nn::Tensor h0 = random_tensor(rng, 4, 3), proj = random_tensor(rng, 4, 3);
      record("edge-typed message passing (" + std::string(gnn_variant_name(variant)) + ")",
             testing::check_gradients(with_parameters({h0}, store),
                                      [&] { return project(model.message_pass(g, h0).final(), proj); }, kGradEps));
    }
    for (NameEmbedding mode : {NameEmbedding::kClosedVocab, NameEmbedding::kCharCnn}) {
      Rng rng(seed);
      nn::ParameterStore store;
      std::map<std::string, std::size_t> types{{"int", 1}};
      NodeEmbedder emb(store, small_embed(mode, 4), word_vocab({"get", "value"}), make_type_vocab(types, 10), rng);
      randomize(store, rng, 0.5);
      CodeGraph g;
      g.add_node(GraphNode{NodeKind::kSyntax, "Block", std::nullopt, std::nullopt});
      g.add_node(GraphNode{NodeKind::kVariable, "LocalName", std::string("getValue"), std::string("int")});
      g.add_node(GraphNode{NodeKind::kCache, std::string(kCacheConstruct), std::string("value"), std::nullopt});
      const nn::Tensor proj = random_tensor(rng, 3, 4);
      record("embeddings", testing::check_gradients(with_parameters({}, store),
                                                    [&] { return project(emb.init_hidden_states(g), proj); }, kGradEps));
    }
    for (GnnVariant variant : {GnnVariant::kGgnn, GnnVariant::kRgcn}) {
      Rng rng(seed);
      nn::ParameterStore store;
      FitbReadout readout(store, variant, 3, rng);
      randomize(store, rng, 1.0);
      nn::Tensor h0 = random_tensor(rng, 4, 3), hT = random_tensor(rng, 4, 3);
      const std::size_t correct[] = {1, 3};
      record("fitb readout", testing::check_gradients(with_parameters({h0, hT}, store), [&] {
               return fitb_loss(readout.scores(GnnState{{h0, hT}}), correct);
             }, kGradEps));
    }
    for (MixtureMode mode : {MixtureMode::kNormalized, MixtureMode::kPaperLiteral}) {
      Rng rng(seed);
      nn::Tensor h = random_tensor(rng, 1, 4), keys = random_tensor(rng, 4, 4), logits = random_tensor(rng, 1, 5);
      const std::size_t pos[] = {1, 5, 6};
      const nn::Tensor proj = random_tensor(rng, 1, 7);
      record("sentinel attention", testing::check_gradients({h, keys, logits}, [&] {
               return project(nn::log(pointer_sentinel_mix(h, keys, logits, pos, 7, mode)), proj);
             }, kGradEps));
    }
    for (DecoderKind kind : {DecoderKind::kClosedVocab, DecoderKind::kPointerSentinel, DecoderKind::kGsc}) {
      Rng rng(seed);
      nn::ParameterStore store;
      Vocabulary words = word_vocab({"a", "b"});
      NodeEmbedder emb(store, small_embed(NameEmbedding::kCharCnn, 3), words, make_type_vocab({}, 4), rng);
      NameDecoder dec(store, DecoderConfig{kind, 3, 3, MixtureMode::kNormalized}, emb.name_dim(), words.size(), rng);
      randomize(store, rng, 1.0);
      CodeGraph g;
      g.add_node(GraphNode{NodeKind::kSpecial, "LocalName", std::string(kNameMe), std::nullopt});
      g.add_node(GraphNode{NodeKind::kCache, std::string(kCacheConstruct), std::string("a"), std::nullopt});
      g.add_node(GraphNode{NodeKind::kCache, std::string(kCacheConstruct), std::string("qq"), std::nullopt});
      nn::Tensor h = random_tensor(rng, 3, 3);
      const std::vector<std::string> target{"qq", "a", std::string(kEosToken)};
      const std::size_t name_me[] = {0};
      record("name decoder (" + std::string(decoder_kind_name(kind)) + ")",
             testing::check_gradients(with_parameters({h}, store), [&] {
               auto ctx = dec.prepare(GnnState{{h, h}}, g, name_me, words);
               return varnaming_loss(dec.teacher_forced(ctx, emb, target), target, ctx.space);
             }, kGradEps));
    }
  }
  Outcome out{true, ""};
  std::string failed;
  double overall = 0.0;
  std::string overall_layer;
  for (const auto& [layer, r] : worst) {
    if (r.max_relative_error >= overall) {
      overall = r.max_relative_error;
      overall_layer = layer;
    }
    if (!(r.max_relative_error < kGradTol)) {
      out.pass = false;
      failed += "; " + layer + " " + fmt("%.3g", r.max_relative_error) + " at " + r.worst;
    }
  }
  out.detail = fmt("%zu layer groups x %zu seeds, worst relative error %.3g in %s (tol %.0e)", worst.size(), kGradSeeds,
                   overall, overall_layer.c_str(), kGradTol) +
               failed;
  return out;
}

// ---------------------------------------------------------------------------
// 2. Sparse message passing vs dense adjacency

Outcome gnn_oracle() {
  Outcome out{true, ""};
  for (GnnVariant variant : {GnnVariant::kGgnn, GnnVariant::kRgcn, GnnVariant::kDtnn}) {
    double gap = 0.0;
    for (std::uint64_t seed = 0; seed < kOracleGraphs; ++seed) gap = std::max(gap, testing::sparse_dense_gap(variant, seed));
    if (!(gap <= kOracleTol)) out.pass = false;
    out.detail += fmt("%s%s max gap %.2e", out.detail.empty() ? "" : ", ", std::string(gnn_variant_name(variant)).c_str(), gap);
  }
  out.detail += fmt(" over %zu graphs each (tol %.0e)", kOracleGraphs, kOracleTol);
  return out;
}

// ---------------------------------------------------------------------------
// 3. Dataflow fixed point vs path enumeration

std::set<std::pair<std::size_t, std::size_t>> edges_of(const CodeGraph& g, EdgeType t) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const Edge& e : g.edges)
    if (e.type == t) out.insert({e.src, e.dst});
  return out;
}

Outcome dataflow_oracle() {
  const auto fixtures = testing::dataflow_fixtures(kDataflowGenerated);
  std::size_t agree = 0;
  std::string first_mismatch;
  for (const std::string& src : fixtures) {
    const Ast ast = parse_source(src);
    CodeGraph g = ast_to_graph(ast);
    compute_last_accesses(g);
    const auto expected = testing::DataflowOracle(ast).run();
    if (edges_of(g, EdgeType::kLastRead) == expected.last_read && edges_of(g, EdgeType::kLastWrite) == expected.last_write)
      ++agree;
    else if (first_mismatch.empty())
      first_mismatch = "; first mismatch: " + src;
  }
  return {agree == fixtures.size() && fixtures.size() >= kDataflowMinFixtures,
          fmt("%zu/%zu fixtures exact (need >= %zu)", agree, fixtures.size(), kDataflowMinFixtures) + first_mismatch};
}

// ---------------------------------------------------------------------------
// 4. Parser round-trip

// Source text without comments and without whitespace outside literals.
std::string strip_layout(std::string_view text) {
  std::string out;
  for (std::size_t i = 0; i < text.size(); ++i) {
    const char c = text[i];
    if (c == '/' && i + 1 < text.size() && text[i + 1] == '/') {
      while (i < text.size() && text[i] != '\n') ++i;
    } else if (c == '/' && i + 1 < text.size() && text[i + 1] == '*') {
      i += 2;
      while (i + 1 < text.size() && !(text[i] == '*' && text[i + 1] == '/')) ++i;
      ++i;
    } else if (c == '"' || c == '\'') {
      out += c;
      for (++i; i < text.size() && text[i] != c; ++i) {
        out += text[i];
        if (text[i] == '\\' && i + 1 < text.size()) out += text[++i];
      }
      if (i < text.size()) out += c;
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      out += c;
    }
  }
  return out;
}

Outcome parser_round_trip(const Corpus& corpus) {
  std::size_t parsed = 0, exact = 0;
  std::string first_bad;
  for (const SourceUnit& u : corpus.units) {
    Ast ast;
    try {
      ast = parse_source(u.text);
    } catch (const ParseError&) {
      continue;
    }
    ++parsed;
    const auto leaves = ast.leaves();
    bool ok = leaves.size() == ast.tokens.size();
    std::string joined;
    for (std::size_t i = 0; ok && i < leaves.size(); ++i) {
      const auto& leaf = ast.at(leaves[i]);
      ok = leaf.token && *leaf.token == i;
      joined += ast.tokens[i].text;
    }
    ok = ok && joined == strip_layout(u.text);
    if (ok) ++exact;
    else if (first_bad.empty()) first_bad = "; first mismatch " + u.key();
  }
  std::string detail = fmt("%zu files, %zu parsed, %zu round-trip exactly", corpus.units.size(), parsed, exact) + first_bad;
  for (const std::string& f : corpus.failures) detail += "; parse failure " + f;
  return {!corpus.units.empty() && corpus.failures.empty() && exact == parsed, detail};
}

// ---------------------------------------------------------------------------
// 5. Normalization fuzz

Outcome normalization_fuzz() {
  Rng rng(5);
  double worst = 0.0;
  std::size_t distributions = 0, zero_cache = 0;
  auto check_rows = [&](const nn::Tensor& p) {
    for (std::size_t r = 0; r < p.rows(); ++r) {
      double total = 0.0;
      for (std::size_t c = 0; c < p.cols(); ++c) {
        const double v = p.at(r, c);
        if (!(v >= 0.0)) worst = std::max(worst, 1.0);
        total += v;
      }
      worst = std::max(worst, std::isfinite(total) ? std::abs(total - 1.0) : 1.0);
      ++distributions;
    }
  };
  nn::NoGradGuard guard;
  for (std::size_t step = 0; step < kFuzzSteps; ++step) {
    const double magnitude = std::pow(10.0, rng.uniform(-2.0, 3.0));
    const std::size_t rows = 1 + rng.below(4), cols = 1 + rng.below(12);
    const nn::Tensor logits = random_tensor(rng, rows, cols, magnitude);
    check_rows(nn::softmax_rows(logits));
    check_rows(nn::exp(nn::log_softmax_rows(logits)));

    const std::size_t vocab = 2 + rng.below(9);
    const std::size_t cache = step % 5 == 0 ? 0 : rng.below(7);
    if (cache == 0) ++zero_cache;
    std::vector<std::size_t> pos;
    std::set<std::size_t> used;
    std::size_t space = vocab;
    for (std::size_t c = 0; c < cache; ++c) {
      std::size_t p = rng.below(2) ? rng.below(vocab) : space;
      if (used.count(p)) p = space;
      if (p == space) ++space;
      used.insert(p);
      pos.push_back(p);
    }
    const std::size_t hidden = 1 + rng.below(8);
    const nn::Tensor h = random_tensor(rng, 1, hidden, magnitude);
    const nn::Tensor keys = random_tensor(rng, cache + 1, hidden);
    const nn::Tensor vocab_logits = random_tensor(rng, 1, vocab, magnitude);
    for (MixtureMode mode : {MixtureMode::kNormalized, MixtureMode::kPaperLiteral})
      check_rows(pointer_sentinel_mix(h, keys, vocab_logits, pos, space, mode));

    if (step % 20 == 0) {
      for (DecoderKind kind : {DecoderKind::kClosedVocab, DecoderKind::kGsc}) {
        nn::ParameterStore store;
        Vocabulary words = word_vocab({"a", "b", "c"});
        NodeEmbedder emb(store, small_embed(NameEmbedding::kCharCnn, 4), words, make_type_vocab({}, 4), rng);
        NameDecoder dec(store, DecoderConfig{kind, 4, 3, MixtureMode::kNormalized}, emb.name_dim(), words.size(), rng);
        randomize(store, rng, 2.0);
        CodeGraph g;
        g.add_node(GraphNode{NodeKind::kSpecial, "LocalName", std::string(kNameMe), std::nullopt});
        if (step % 40 == 0) g.add_node(GraphNode{NodeKind::kCache, std::string(kCacheConstruct), std::string("zz"), std::nullopt});
        const nn::Tensor states = random_tensor(rng, g.nodes.size(), 4, 3.0);
        const std::size_t name_me[] = {0};
        auto ctx = dec.prepare(GnnState{{states, states}}, g, name_me, words);
        nn::Tensor state = ctx.initial;
        std::optional<std::string> previous;
        for (std::size_t t = 0; t < 3; ++t) {
          auto [next, dist] = dec.step(ctx, emb, state, previous);
          check_rows(dist);
          state = next;
          previous = "a";
        }
      }
    }
  }
  return {worst <= kSumTol, fmt("%zu distributions over %zu steps (%zu zero-cache mixtures), max |sum - 1| %.2e (tol %.0e)",
                                distributions, kFuzzSteps, zero_cache, worst, kSumTol)};
}

// ---------------------------------------------------------------------------
// 6. Overfitting small training sets

Outcome overfit(const Corpus& corpus) {
  Outcome out{true, ""};
  for (Task task : {Task::kFitb, Task::kVarNaming}) {
    ExperimentConfig c;
    c.task = task;
    c.lr = 1e-3;
    c.batch = 20;
    c.max_epochs = kOverfitMaxEpochs;
    c.patience = kOverfitMaxEpochs;
    const std::size_t count = task == Task::kFitb ? 50 : 20;
    const double target = task == Task::kFitb ? kOverfitFitbTarget : kOverfitNamingTarget;
    const InstanceSet set = make_instances(c, corpus.graphs).prefix(count);
    const auto start = Clock::now();
    const Checkpoint ckpt = train(c, set, set);
    const double seconds = seconds_since(start);
    const MetricsReport report = evaluate(ckpt, set, "train");
    const bool ok = set.size() == count && report.accuracy >= target && ckpt.curve.size() <= kOverfitMaxEpochs &&
                    (task != Task::kFitb || seconds < kOverfitLimitSeconds);
    out.pass = out.pass && ok;
    out.detail += fmt("%s%s %zu instances: accuracy %.3f (need %.2f) at epoch %zu/%zu, %.0f s",
                      out.detail.empty() ? "" : "; ", std::string(task_name(task)).c_str(), set.size(), report.accuracy,
                      target, ckpt.best_epoch, ckpt.curve.size(), seconds);
  }
  return out;
}

// ---------------------------------------------------------------------------
// 7. Directional comparison

struct SplitGraphs {
  std::vector<CodeGraph> train, validation, test;
};

SplitGraphs split_graphs(const Corpus& corpus) {
  const DatasetSplit split = split_dataset(corpus.units, 2, 0.15, 0.15, 11);
  const std::set<std::string> tr(split.train.begin(), split.train.end());
  const std::set<std::string> va(split.validation.begin(), split.validation.end());
  SplitGraphs out;
  for (const CodeGraph& g : corpus.graphs) {
    if (tr.count(g.file)) out.train.push_back(g);
    else if (va.count(g.file)) out.validation.push_back(g);
    else out.test.push_back(g);
  }
  return out;
}

double directional_run(const SplitGraphs& s, Task task, VocabStrategy vocab, Representation repr, std::uint64_t seed) {
  ExperimentConfig c;
  c.task = task;
  c.vocab = vocab;
  c.representation = repr;
  c.seed = seed;
  c.hidden = 32;
  c.rounds = 4;
  c.lr = 0.005;
  c.max_epochs = kDirectionalMaxEpochs;
  c.patience = kDirectionalPatience;
  const InstanceSet train_all = make_instances(c, s.train);
  std::vector<std::size_t> idx(train_all.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  Rng rng(seed);
  rng.shuffle(idx);
  const Checkpoint ckpt = train(c, train_all.subset(idx), make_instances(c, s.validation));
  return evaluate(ckpt, make_instances(c, s.test), "test").accuracy;
}

Outcome directional(const Corpus& corpus) {
  ExperimentConfig probe;
  probe.task = Task::kFitb;
  const std::size_t fitb_count = make_instances(probe, corpus.graphs).size();
  probe.task = Task::kVarNaming;
  const std::size_t naming_count = make_instances(probe, corpus.graphs).size();

  const SplitGraphs s = split_graphs(corpus);
  int fitb_gsc_wins = 0, naming_gsc_wins = 0, augast_wins = 0;
  std::string runs;
  for (std::uint64_t seed : {1, 2, 3}) {
    const double f_gsc = directional_run(s, Task::kFitb, VocabStrategy::kGsc, Representation::kAugAst, seed);
    const double f_closed = directional_run(s, Task::kFitb, VocabStrategy::kClosedVocab, Representation::kAugAst, seed);
    const double f_ast = directional_run(s, Task::kFitb, VocabStrategy::kGsc, Representation::kAst, seed);
    const double n_gsc = directional_run(s, Task::kVarNaming, VocabStrategy::kGsc, Representation::kAugAst, seed);
    const double n_closed = directional_run(s, Task::kVarNaming, VocabStrategy::kClosedVocab, Representation::kAugAst, seed);
    fitb_gsc_wins += f_gsc > f_closed;
    naming_gsc_wins += n_gsc > n_closed;
    augast_wins += f_gsc >= f_ast;
    runs += fmt("; seed %llu fitb gsc %.3f closed %.3f ast-gsc %.3f, varnaming gsc %.3f closed %.3f",
                static_cast<unsigned long long>(seed), f_gsc, f_closed, f_ast, n_gsc, n_closed);
  }
  const bool ok = fitb_count >= kMinCorpusInstances && naming_count >= kMinCorpusInstances && fitb_gsc_wins >= 2 &&
                  naming_gsc_wins >= 2 && augast_wins >= 2;
  return {ok, fmt("corpus %zu fitb / %zu varnaming instances; seeds won: fitb gsc>closed %d/3, varnaming gsc>closed %d/3, "
                  "fitb augast>=ast %d/3",
                  fitb_count, naming_count, fitb_gsc_wins, naming_gsc_wins, augast_wins) +
                  runs};
}

// ---------------------------------------------------------------------------
// 8. Random baseline

Outcome random_baseline(const Corpus& corpus) {
  ExperimentConfig c;
  c.task = Task::kFitb;
  c.vocab = VocabStrategy::kClosedVocab;
  const InstanceSet set = make_instances(c, corpus.graphs);
  const BaselineReport r = random_baseline_fitb(set.fitb, kBaselineRadius, kBaselineTrials, 17);
  const double gap = std::abs(r.estimate - r.exact);
  return {r.standard_error > 0.0 && gap <= kBaselineSigmas * r.standard_error,
          fmt("%zu instances, radius %zu, %zu trials: estimate %.5f, exact %.5f, |gap| %.2e, SE %.2e (%.2f SE)", r.count,
              r.radius, r.trials, r.estimate, r.exact, gap, r.standard_error,
              r.standard_error > 0 ? gap / r.standard_error : 0.0)};
}

// ---------------------------------------------------------------------------
// 9. Instance invariants

Outcome instance_invariants(const Corpus& corpus) {
  std::map<std::string, const CodeGraph*> files;
  for (const CodeGraph& g : corpus.graphs) files[g.file] = &g;
  auto original_node = [&](const std::string& id) -> std::pair<const CodeGraph*, std::size_t> {
    const auto hash = id.find('#'), colon = id.rfind(':');
    return {files.at(id.substr(0, hash)), std::stoul(id.substr(colon + 1))};
  };

  std::size_t checked = 0, violations = 0;
  std::string first;
  auto fail = [&](const std::string& what) {
    ++violations;
    if (first.empty()) first = "; first violation: " + what;
  };

  struct Setting {
    Task task;
    Representation repr;
    VocabStrategy vocab;
  };
  const Setting settings[] = {
      {Task::kFitb, Representation::kAugAst, VocabStrategy::kGsc},
      {Task::kFitb, Representation::kAst, VocabStrategy::kClosedVocab},
      {Task::kVarNaming, Representation::kAugAst, VocabStrategy::kGsc},
      {Task::kVarNaming, Representation::kAugAst, VocabStrategy::kPointerSentinel},
      {Task::kVarNaming, Representation::kAst, VocabStrategy::kClosedVocab},
  };
  for (const Setting& st : settings) {
    ExperimentConfig c;
    c.task = st.task;
    c.representation = st.repr;
    c.vocab = st.vocab;
    const InstanceSet set = make_instances(c, corpus.graphs);
    for (std::size_t i = 0; i < set.size(); ++i) {
      ++checked;
      const CodeGraph& g = set.graph(i);
      const std::string& id = set.id(i);
      if (g.nodes.size() > c.max_nodes) fail(id + " has " + std::to_string(g.nodes.size()) + " nodes");
      const auto [file, orig] = original_node(id);
      if (st.task == Task::kFitb) {
        const FitbInstance& inst = set.fitb[i];
        if (inst.blank_node >= g.nodes.size() || g.nodes[inst.blank_node].name != kFillInTheBlank) fail(id + " lost its blank");
        if (inst.correct_nodes.empty()) fail(id + " has no answer");
        for (std::size_t v : inst.correct_nodes)
          if (v >= g.nodes.size() || g.nodes[v].name != inst.variable) fail(id + " answer is not the variable");
        const auto decl = file->nodes.at(orig).decl;
        std::size_t usages = 0;
        for (const GraphNode& n : file->nodes) usages += n.kind == NodeKind::kVariable && decl && n.decl == decl;
        if (!decl || usages < 2 || *decl == orig) fail(id + " blanks an ineligible variable");
      } else {
        const VarNamingInstance& inst = set.varnaming[i];
        std::size_t marked = 0;
        for (const GraphNode& n : g.nodes) marked += n.name == kNameMe;
        if (inst.name_me_nodes.empty() || marked != inst.name_me_nodes.size()) fail(id + " lost a name site");
        for (std::size_t v : inst.name_me_nodes)
          if (v >= g.nodes.size() || g.nodes[v].name != kNameMe) fail(id + " name site is not marked");
        std::size_t sites = 0;
        for (const GraphNode& n : file->nodes)
          sites += n.kind == NodeKind::kVariable && n.decl == orig;
        if (file->nodes.at(orig).construct != "ClassName" && sites != inst.name_me_nodes.size())
          fail(id + " marks " + std::to_string(inst.name_me_nodes.size()) + " of " + std::to_string(sites) + " sites");
        const auto& t = inst.target_words;
        if (t.empty() || t.size() > 9 || t.back() != kEosToken ||
            std::count(t.begin(), t.end(), std::string(kEosToken)) != 1)
          fail(id + " target has bad length or EOS placement");
      }
    }
  }
  return {checked > 0 && violations == 0,
          fmt("%zu instances over 5 settings, %zu violations", checked, violations) + first};
}

// ---------------------------------------------------------------------------
// 10. Checkpoint round-trip

bool bitwise_equal(const MetricsReport& a, const MetricsReport& b) {
  auto same = [](double x, double y) { return std::memcmp(&x, &y, sizeof x) == 0; };
  auto same_opt = [&](const std::optional<double>& x, const std::optional<double>& y) {
    return x.has_value() == y.has_value() && (!x || same(*x, *y));
  };
  return a.task == b.task && a.split == b.split && a.count == b.count && same(a.accuracy, b.accuracy) &&
         same(a.top5_accuracy, b.top5_accuracy) && same_opt(a.subword_accuracy, b.subword_accuracy) &&
         same_opt(a.edit_distance, b.edit_distance) && same_opt(a.normalized_edit_distance, b.normalized_edit_distance);
}

Outcome checkpoint_round_trip(const Corpus& corpus) {
  Outcome out{true, ""};
  const auto dir = std::filesystem::temp_directory_path() / "gsc_acceptance";
  std::filesystem::create_directories(dir);
  for (Task task : {Task::kFitb, Task::kVarNaming}) {
    ExperimentConfig c;
    c.task = task;
    c.hidden = 8;
    c.rounds = 2;
    c.batch = 8;
    c.max_epochs = 2;
    c.patience = 2;
    c.seed = 4;
    const InstanceSet set = make_instances(c, corpus.graphs);
    const InstanceSet train_set = set.prefix(40);
    const InstanceSet eval_set = set.subset(std::vector<std::size_t>{40, 41, 42, 43, 44, 45, 46, 47, 48, 49, 50, 51});
    const Checkpoint ckpt = train(c, train_set, train_set.prefix(10));
    const MetricsReport before = evaluate(ckpt, eval_set, "round-trip");
    const auto path = dir / (std::string(task_name(task)) + ".json");
    ckpt.save(path);
    const Checkpoint loaded = Checkpoint::load(path);
    const MetricsReport after = evaluate(loaded, eval_set, "round-trip");
    const bool ok = bitwise_equal(before, after) && loaded.parameters.dump() == ckpt.parameters.dump();
    out.pass = out.pass && ok;
    out.detail += fmt("%s%s accuracy %.6f -> %.6f %s", out.detail.empty() ? "" : "; ", std::string(task_name(task)).c_str(),
                      before.accuracy, after.accuracy, ok ? "(bitwise identical)" : "(differs)");
  }
  std::filesystem::remove_all(dir);
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  std::filesystem::path corpus_dir = GSC_FIXTURE_DIR "/corpus";
  std::set<int> only;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--corpus" && i + 1 < argc) corpus_dir = argv[++i];
    else only.insert(std::stoi(a));
  }
  const auto wanted = [&](int n) { return only.empty() || only.count(n); };

  std::optional<Corpus> corpus;
  auto need_corpus = [&]() -> const Corpus& {
    if (!corpus) corpus = Corpus::load(corpus_dir);
    return *corpus;
  };

  struct Criterion {
    int number;
    const char* name;
    std::function<Outcome()> run;
    double limit_seconds;
  };
  const std::vector<Criterion> criteria{
      {1, "gradient correctness", gradients, kFastLimitSeconds},
      {2, "gnn dense oracle", gnn_oracle, kFastLimitSeconds},
      {3, "dataflow oracle", dataflow_oracle, kFastLimitSeconds},
      {4, "parser round-trip", [&] { return parser_round_trip(need_corpus()); }, 0.0},
      {5, "distribution normalization", normalization_fuzz, 0.0},
      {6, "overfit capability", [&] { return overfit(need_corpus()); }, 0.0},
      {7, "directional gsc claim", [&] { return directional(need_corpus()); }, 0.0},
      {8, "random baseline", [&] { return random_baseline(need_corpus()); }, 0.0},
      {9, "instance invariants", [&] { return instance_invariants(need_corpus()); }, 0.0},
      {10, "checkpoint round-trip", [&] { return checkpoint_round_trip(need_corpus()); }, 0.0},
  };

  int failures = 0;
  for (const Criterion& c : criteria) {
    if (!wanted(c.number)) continue;
    const auto start = Clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = seconds_since(start);
    if (c.limit_seconds > 0.0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += fmt("; exceeded %.0f s", c.limit_seconds);
    }
    failures += !o.pass;
    std::printf("%s [%d] %s: %s (%.1f s)\n", o.pass ? "PASS" : "FAIL", c.number, c.name, o.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
