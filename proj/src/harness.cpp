#include "gsc/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <deque>
#include <exception>
#include <fstream>
#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "gsc/cache.hpp"
#include "gsc/nn/optim.hpp"

namespace gsc {

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::size_t parse_size(std::string_view key, std::string_view value) {
  const std::string v(value);
  std::size_t pos = 0;
  unsigned long long out = 0;
  try {
    if (!v.empty() && v[0] == '-') throw std::invalid_argument("negative");
    out = std::stoull(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw std::invalid_argument("bad value for " + std::string(key) + ": " + v);
  return static_cast<std::size_t>(out);
}

double parse_double(std::string_view key, std::string_view value) {
  const std::string v(value);
  std::size_t pos = 0;
  double out = 0;
  try {
    out = std::stod(v, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != v.size()) throw std::invalid_argument("bad value for " + std::string(key) + ": " + v);
  return out;
}

std::string_view mixture_name(MixtureMode m) { return m == MixtureMode::kNormalized ? "normalized" : "literal"; }

MixtureMode parse_mixture(std::string_view text) {
  if (text == "normalized") return MixtureMode::kNormalized;
  if (text == "literal") return MixtureMode::kPaperLiteral;
  throw std::invalid_argument("unknown mixture mode: " + std::string(text));
}

// Runs fn(i) for i in [0, n) on up to `workers` threads, item i going to
// thread i % workers. The first failing item (by index) is rethrown.
template <typename Fn>
void parallel_for(std::size_t n, std::size_t workers, Fn fn) {
  workers = std::max<std::size_t>(1, std::min(workers, n));
  std::vector<std::exception_ptr> errors(n);
  auto run = [&](std::size_t w) {
    for (std::size_t i = w; i < n; i += workers) {
      try {
        fn(w, i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

std::string_view task_name(Task t) { return t == Task::kFitb ? "fitb" : "varnaming"; }

Task parse_task(std::string_view text) {
  if (text == "fitb") return Task::kFitb;
  if (text == "varnaming") return Task::kVarNaming;
  throw std::invalid_argument("unknown task: " + std::string(text));
}

std::string_view vocab_strategy_name(VocabStrategy v) {
  switch (v) {
    case VocabStrategy::kClosedVocab: return "closed";
    case VocabStrategy::kCharCnn: return "charcnn";
    case VocabStrategy::kPointerSentinel: return "sentinel";
    case VocabStrategy::kGsc: return "gsc";
  }
  return "?";
}

VocabStrategy parse_vocab_strategy(std::string_view text) {
  if (text == "closed" || text == "closed_vocab") return VocabStrategy::kClosedVocab;
  if (text == "charcnn") return VocabStrategy::kCharCnn;
  if (text == "sentinel" || text == "pointer_sentinel") return VocabStrategy::kPointerSentinel;
  if (text == "gsc") return VocabStrategy::kGsc;
  throw std::invalid_argument("unknown vocab strategy: " + std::string(text));
}

// ---------------------------------------------------------------------------
// ExperimentConfig

void ExperimentConfig::validate() const {
  if (task == Task::kFitb && vocab == VocabStrategy::kPointerSentinel)
    throw std::invalid_argument("the sentinel strategy only applies to varnaming");
  if (hidden == 0) throw std::invalid_argument("hidden must be positive");
  if (max_nodes < 2) throw std::invalid_argument("max_nodes must be at least 2");
  if (unroll == 0) throw std::invalid_argument("unroll must be positive");
  if (batch == 0) throw std::invalid_argument("batch must be positive");
  if (max_epochs == 0) throw std::invalid_argument("max_epochs must be positive");
  if (beam_width == 0) throw std::invalid_argument("beam_width must be positive");
  if (fitb_per_variable == 0) throw std::invalid_argument("fitb_per_variable must be positive");
  if (!(lr > 0.0) || !std::isfinite(lr)) throw std::invalid_argument("lr must be positive");
}

std::optional<CacheMode> ExperimentConfig::cache_mode() const {
  switch (vocab) {
    case VocabStrategy::kGsc: return CacheMode::kFullGsc;
    case VocabStrategy::kPointerSentinel: return CacheMode::kPointerSentinelNoEdges;
    default: return std::nullopt;
  }
}

NameEmbedding ExperimentConfig::name_embedding() const {
  return vocab == VocabStrategy::kClosedVocab ? NameEmbedding::kClosedVocab : NameEmbedding::kCharCnn;
}

DecoderKind ExperimentConfig::decoder_kind() const {
  switch (vocab) {
    case VocabStrategy::kClosedVocab: return DecoderKind::kClosedVocab;
    case VocabStrategy::kCharCnn: return DecoderKind::kCharCnnVocab;
    case VocabStrategy::kPointerSentinel: return DecoderKind::kPointerSentinel;
    case VocabStrategy::kGsc: return DecoderKind::kGsc;
  }
  return DecoderKind::kGsc;
}

InstanceOptions ExperimentConfig::instance_options() const {
  InstanceOptions o;
  o.representation = representation;
  o.cache = cache_mode();
  o.max_nodes = max_nodes;
  o.max_name_words = unroll;
  o.fitb_per_variable = fitb_per_variable;
  o.varnaming_per_file = varnaming_per_file;
  return o;
}

std::vector<EdgeType> ExperimentConfig::edge_types() const {
  std::vector<EdgeType> base;
  if (representation == Representation::kAst) {
    base = {EdgeType::kAst, EdgeType::kNextToken};
  } else {
    for (EdgeType t : all_edge_types())
      if (!is_reverse(t) && t != EdgeType::kWordUse) base.push_back(t);
  }
  if (vocab == VocabStrategy::kGsc) base.push_back(EdgeType::kWordUse);
  std::vector<EdgeType> out = base;
  for (EdgeType t : base) out.push_back(reverse_of(t));
  return out;
}

void ExperimentConfig::set(std::string_view key, std::string_view value) {
  if (key == "task") task = parse_task(value);
  else if (key == "representation") representation = parse_representation(value);
  else if (key == "vocab_strategy" || key == "vocab") vocab = parse_vocab_strategy(value);
  else if (key == "gnn") gnn = parse_gnn_variant(value);
  else if (key == "hidden") hidden = parse_size(key, value);
  else if (key == "rounds") rounds = parse_size(key, value);
  else if (key == "max_nodes") max_nodes = parse_size(key, value);
  else if (key == "unroll") unroll = parse_size(key, value);
  else if (key == "lr") lr = parse_double(key, value);
  else if (key == "batch") batch = parse_size(key, value);
  else if (key == "patience") patience = parse_size(key, value);
  else if (key == "max_epochs") max_epochs = parse_size(key, value);
  else if (key == "seed") seed = parse_size(key, value);
  else if (key == "mixture") mixture = parse_mixture(value);
  else if (key == "word_vocab_size") word_vocab_size = parse_size(key, value);
  else if (key == "type_vocab_size") type_vocab_size = parse_size(key, value);
  else if (key == "beam_width") beam_width = parse_size(key, value);
  else if (key == "fitb_per_variable") fitb_per_variable = parse_size(key, value);
  else if (key == "varnaming_per_file") varnaming_per_file = parse_size(key, value);
  else throw std::invalid_argument("unknown config key: " + std::string(key));
}

std::string ExperimentConfig::to_text() const {
  char lr_text[40];
  std::snprintf(lr_text, sizeof lr_text, "%.17g", lr);
  std::ostringstream out;
  out << "task = " << task_name(task) << "\n"
      << "representation = " << representation_name(representation) << "\n"
      << "vocab_strategy = " << vocab_strategy_name(vocab) << "\n"
      << "gnn = " << gnn_variant_name(gnn) << "\n"
      << "hidden = " << hidden << "\n"
      << "rounds = " << rounds << "\n"
      << "max_nodes = " << max_nodes << "\n"
      << "unroll = " << unroll << "\n"
      << "lr = " << lr_text << "\n"
      << "batch = " << batch << "\n"
      << "patience = " << patience << "\n"
      << "max_epochs = " << max_epochs << "\n"
      << "seed = " << seed << "\n"
      << "mixture = " << mixture_name(mixture) << "\n"
      << "word_vocab_size = " << word_vocab_size << "\n"
      << "type_vocab_size = " << type_vocab_size << "\n"
      << "beam_width = " << beam_width << "\n"
      << "fitb_per_variable = " << fitb_per_variable << "\n"
      << "varnaming_per_file = " << varnaming_per_file << "\n";
  return out.str();
}

ExperimentConfig ExperimentConfig::from_text(std::string_view text, ExperimentConfig base) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(number) + ": expected key = value");
    try {
      base.set(trim(std::string_view(stripped).substr(0, eq)), trim(std::string_view(stripped).substr(eq + 1)));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument("config line " + std::to_string(number) + ": " + e.what());
    }
  }
  return base;
}

ExperimentConfig ExperimentConfig::from_text(std::string_view text) { return from_text(text, ExperimentConfig{}); }

ExperimentConfig ExperimentConfig::from_file(const std::filesystem::path& path, ExperimentConfig base) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read config " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return from_text(ss.str(), std::move(base));
}

nlohmann::json ExperimentConfig::to_json() const {
  nlohmann::json j = nlohmann::json::object();
  j["task"] = task_name(task);
  j["representation"] = representation_name(representation);
  j["vocab_strategy"] = vocab_strategy_name(vocab);
  j["gnn"] = gnn_variant_name(gnn);
  j["hidden"] = hidden;
  j["rounds"] = rounds;
  j["max_nodes"] = max_nodes;
  j["unroll"] = unroll;
  j["lr"] = lr;
  j["batch"] = batch;
  j["patience"] = patience;
  j["max_epochs"] = max_epochs;
  j["seed"] = seed;
  j["mixture"] = mixture_name(mixture);
  j["word_vocab_size"] = word_vocab_size;
  j["type_vocab_size"] = type_vocab_size;
  j["beam_width"] = beam_width;
  j["fitb_per_variable"] = fitb_per_variable;
  j["varnaming_per_file"] = varnaming_per_file;
  return j;
}

ExperimentConfig ExperimentConfig::from_json(const nlohmann::json& j) {
  ExperimentConfig c;
  c.task = parse_task(j.at("task").get<std::string>());
  c.representation = parse_representation(j.at("representation").get<std::string>());
  c.vocab = parse_vocab_strategy(j.at("vocab_strategy").get<std::string>());
  c.gnn = parse_gnn_variant(j.at("gnn").get<std::string>());
  c.hidden = j.at("hidden");
  c.rounds = j.at("rounds");
  c.max_nodes = j.at("max_nodes");
  c.unroll = j.at("unroll");
  c.lr = j.at("lr");
  c.batch = j.at("batch");
  c.patience = j.at("patience");
  c.max_epochs = j.at("max_epochs");
  c.seed = j.at("seed");
  c.mixture = parse_mixture(j.at("mixture").get<std::string>());
  c.word_vocab_size = j.at("word_vocab_size");
  c.type_vocab_size = j.at("type_vocab_size");
  c.beam_width = j.at("beam_width");
  c.fitb_per_variable = j.at("fitb_per_variable");
  c.varnaming_per_file = j.at("varnaming_per_file");
  return c;
}

std::string ExperimentConfig::hash() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(to_text())));
  return buf;
}

// ---------------------------------------------------------------------------
// Instances

const CodeGraph& InstanceSet::graph(std::size_t i) const {
  return task == Task::kFitb ? fitb.at(i).graph : varnaming.at(i).graph;
}

const std::string& InstanceSet::id(std::size_t i) const {
  return task == Task::kFitb ? fitb.at(i).id : varnaming.at(i).id;
}

InstanceSet InstanceSet::subset(std::span<const std::size_t> indices) const {
  InstanceSet out;
  out.task = task;
  for (std::size_t i : indices) {
    if (task == Task::kFitb) out.fitb.push_back(fitb.at(i));
    else out.varnaming.push_back(varnaming.at(i));
  }
  return out;
}

InstanceSet InstanceSet::prefix(std::size_t count) const {
  std::vector<std::size_t> idx(std::min(count, size()));
  std::iota(idx.begin(), idx.end(), 0);
  return subset(idx);
}

void InstanceSet::write_jsonl(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  for (std::size_t i = 0; i < size(); ++i) {
    out << (task == Task::kFitb ? fitb_to_json(fitb[i]) : varnaming_to_json(varnaming[i])).dump() << "\n";
  }
}

InstanceSet InstanceSet::read_jsonl(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  InstanceSet set;
  std::string line;
  std::size_t number = 0;
  bool first = true;
  while (std::getline(in, line)) {
    ++number;
    if (trim(line).empty()) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
      const Task t = parse_task(j.at("task").get<std::string>());
      if (first) set.task = t;
      if (t != set.task) throw std::invalid_argument("mixed tasks in one file");
      first = false;
      if (t == Task::kFitb) set.fitb.push_back(fitb_from_json(j));
      else set.varnaming.push_back(varnaming_from_json(j));
    } catch (const std::exception& e) {
      throw std::runtime_error(path.string() + ":" + std::to_string(number) + ": " + e.what());
    }
  }
  return set;
}

InstanceSet make_instances(const ExperimentConfig& config, std::span<const CodeGraph> files) {
  InstanceSet set;
  set.task = config.task;
  const InstanceOptions opts = config.instance_options();
  for (const CodeGraph& g : files) {
    const std::uint64_t seed = derive_seed(config.seed, g.file);
    if (config.task == Task::kFitb) {
      for (auto& inst : make_fitb_instances(g, seed, opts)) set.fitb.push_back(std::move(inst));
    } else {
      for (auto& inst : make_varnaming_instances(g, seed, opts)) set.varnaming.push_back(std::move(inst));
    }
  }
  return set;
}

Vocabularies build_vocabularies(const ExperimentConfig& config, const InstanceSet& train) {
  std::map<std::string, std::size_t> words, types;
  for (std::size_t i = 0; i < train.size(); ++i) {
    for (const GraphNode& n : train.graph(i).nodes) {
      if (n.type) ++types[*n.type];
      if (n.kind != NodeKind::kVariable && n.kind != NodeKind::kCache) continue;
      if (!n.name) continue;
      for (const std::string& w : split_name(*n.name).words) ++words[w];
    }
    if (train.task == Task::kVarNaming) {
      for (const std::string& w : train.varnaming[i].target_words)
        if (w != kEosToken) ++words[w];
    }
  }
  return Vocabularies{make_word_vocab(words, config.word_vocab_size), make_type_vocab(types, config.type_vocab_size)};
}

// ---------------------------------------------------------------------------
// Model

Model::Model(const ExperimentConfig& config, Vocabularies vocabs)
    : config_(config), vocabs_(std::move(vocabs)), store_(std::make_unique<nn::ParameterStore>()) {
  config_.validate();
  Rng rng(derive_seed(config_.seed, "model"));
  EmbedConfig ec;
  ec.hidden = config_.hidden;
  ec.names = config_.name_embedding();
  embedder_ = NodeEmbedder(*store_, ec, vocabs_.words, vocabs_.types, rng);
  GnnConfig gc;
  gc.variant = config_.gnn;
  gc.hidden = config_.hidden;
  gc.rounds = config_.rounds;
  gc.edge_types = config_.edge_types();
  gnn_ = GnnModel(*store_, gc, rng);
  if (config_.task == Task::kFitb) {
    fitb_ = FitbReadout(*store_, config_.gnn, config_.hidden, rng);
  } else {
    DecoderConfig dc;
    dc.kind = config_.decoder_kind();
    dc.hidden = config_.hidden;
    dc.steps = config_.unroll;
    dc.mixture = config_.mixture;
    decoder_ = NameDecoder(*store_, dc, embedder_.name_dim(), vocabs_.words.size(), rng);
  }
}

GnnState Model::encode(const CodeGraph& graph) const {
  return gnn_.message_pass(graph, embedder_.init_hidden_states(graph));
}

nn::Tensor Model::fitb_scores(const FitbInstance& inst) const { return fitb_.scores(encode(inst.graph)); }

std::vector<Hypothesis> Model::decode(const VarNamingInstance& inst, std::size_t width) const {
  const auto ctx = decoder_.prepare(encode(inst.graph), inst.graph, inst.name_me_nodes, vocabs_.words);
  return decoder_.beam_search(ctx, embedder_, width);
}

nn::Tensor Model::loss(const InstanceSet& set, std::size_t i) const {
  if (set.task != config_.task) throw std::invalid_argument("instance task does not match the model");
  if (set.task == Task::kFitb) {
    const FitbInstance& inst = set.fitb.at(i);
    return fitb_loss(fitb_scores(inst), inst.correct_nodes);
  }
  const VarNamingInstance& inst = set.varnaming.at(i);
  const auto ctx = decoder_.prepare(encode(inst.graph), inst.graph, inst.name_me_nodes, vocabs_.words);
  const auto dists = decoder_.teacher_forced(ctx, embedder_, inst.target_words);
  return varnaming_loss(dists, inst.target_words, ctx.space);
}

InstanceOutcome Model::score(const InstanceSet& set, std::size_t i) const {
  if (set.task != config_.task) throw std::invalid_argument("instance task does not match the model");
  if (set.task == Task::kFitb) {
    const FitbInstance& inst = set.fitb.at(i);
    return score_fitb(fitb_ranking(fitb_scores(inst), inst.graph, 5), inst.correct_nodes);
  }
  const VarNamingInstance& inst = set.varnaming.at(i);
  return score_name(decode(inst, config_.beam_width), inst.target_words);
}

void copy_parameters(const nn::ParameterStore& from, nn::ParameterStore& to) {
  const auto src = from.all();
  const auto dst = to.all();
  if (src.size() != dst.size()) throw std::invalid_argument("parameter stores differ in layout");
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (src[i]->name != dst[i]->name || src[i]->tensor.shape() != dst[i]->tensor.shape())
      throw std::invalid_argument("parameter stores differ at " + src[i]->name);
    const auto v = src[i]->tensor.values();
    std::copy(v.begin(), v.end(), dst[i]->tensor.mutable_values().begin());
  }
}

// ---------------------------------------------------------------------------
// Checkpoint

Model Checkpoint::model() const {
  Model m(config, vocabs);
  m.store().load_json(parameters);
  return m;
}

nlohmann::json Checkpoint::to_json() const {
  nlohmann::json curve_json = nlohmann::json::array();
  for (const EpochRecord& r : curve) {
    curve_json.push_back({{"epoch", r.epoch},
                          {"train_loss", r.train_loss},
                          {"validation_metric", r.validation_metric},
                          {"seconds", r.seconds}});
  }
  return {{"config", config.to_json()},
          {"config_hash", config.hash()},
          {"words", vocabs.words.to_json()},
          {"types", vocabs.types.to_json()},
          {"parameters", parameters},
          {"curve", curve_json},
          {"best_validation", best_validation},
          {"best_epoch", best_epoch}};
}

Checkpoint Checkpoint::from_json(const nlohmann::json& j) {
  Checkpoint c;
  c.config = ExperimentConfig::from_json(j.at("config"));
  c.vocabs.words = Vocabulary::from_json(j.at("words"));
  c.vocabs.types = Vocabulary::from_json(j.at("types"));
  c.parameters = j.at("parameters");
  for (const auto& r : j.at("curve")) {
    c.curve.push_back(EpochRecord{r.at("epoch"), r.at("train_loss"), r.at("validation_metric"), r.at("seconds")});
  }
  c.best_validation = j.at("best_validation");
  c.best_epoch = j.at("best_epoch");
  return c;
}

void Checkpoint::save(const std::filesystem::path& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write checkpoint " + path.string());
  out << to_json().dump();
  if (!out) throw std::runtime_error("failed writing checkpoint " + path.string());
}

Checkpoint Checkpoint::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read checkpoint " + path.string());
  try {
    return from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw std::runtime_error("malformed checkpoint " + path.string() + ": " + e.what());
  }
}

// ---------------------------------------------------------------------------
// Training and evaluation

std::size_t worker_count() {
  if (const char* env = std::getenv("GSC_NUM_THREADS")) {
    try {
      const std::size_t n = parse_size("GSC_NUM_THREADS", env);
      if (n > 0) return n;
    } catch (const std::invalid_argument&) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

MetricsReport evaluate(const Model& model, const InstanceSet& instances, std::string split) {
  if (instances.empty()) throw std::invalid_argument("no instances to evaluate");
  const auto start = std::chrono::steady_clock::now();
  std::vector<InstanceOutcome> outcomes(instances.size());
  parallel_for(instances.size(), worker_count(), [&](std::size_t, std::size_t i) {
    nn::NoGradGuard no_grad;
    outcomes[i] = model.score(instances, i);
  });
  MetricsReport r = aggregate(std::string(task_name(instances.task)), outcomes);
  r.split = std::move(split);
  r.wall_seconds = seconds_since(start);
  return r;
}

MetricsReport evaluate(const Checkpoint& checkpoint, const InstanceSet& instances, std::string split) {
  return evaluate(checkpoint.model(), instances, std::move(split));
}

Checkpoint train(const ExperimentConfig& config, const InstanceSet& train_set, const InstanceSet& validation,
                 const nlohmann::json* initial) {
  config.validate();
  if (train_set.empty()) throw std::invalid_argument("empty training set");
  if (validation.empty()) throw std::invalid_argument("empty validation set");
  if (train_set.task != config.task || validation.task != config.task)
    throw std::invalid_argument("instance task does not match the config");

  Checkpoint ckpt;
  ckpt.config = config;
  ckpt.vocabs = build_vocabularies(config, train_set);
  Model master(config, ckpt.vocabs);
  if (initial) master.store().load_json(*initial);
  const std::size_t workers = std::min(worker_count(), config.batch);
  std::vector<std::unique_ptr<Model>> replicas;
  for (std::size_t w = 0; w < workers; ++w) replicas.push_back(std::make_unique<Model>(config, ckpt.vocabs));

  const auto params = master.store().all();
  std::vector<std::size_t> offsets{0};
  for (const nn::Parameter* p : params) offsets.push_back(offsets.back() + p->tensor.size());
  const nn::AdamConfig adam{config.lr};

  std::vector<std::size_t> order(train_set.size());
  std::iota(order.begin(), order.end(), 0);
  double best = -1.0;
  std::size_t since_best = 0;
  for (std::size_t epoch = 1; epoch <= config.max_epochs; ++epoch) {
    const auto start = std::chrono::steady_clock::now();
    Rng rng(derive_seed(config.seed, "epoch/" + std::to_string(epoch)));
    rng.shuffle(order);
    double loss_sum = 0.0;
    for (std::size_t b0 = 0; b0 < order.size(); b0 += config.batch) {
      const std::size_t count = std::min(config.batch, order.size() - b0);
      for (auto& r : replicas) copy_parameters(master.store(), r->store());
      std::vector<std::vector<double>> grads(count);
      std::vector<double> losses(count);
      parallel_for(count, workers, [&](std::size_t w, std::size_t j) {
        Model& replica = *replicas[w];
        const std::size_t idx = order[b0 + j];
        nn::Tensor loss;
        try {
          loss = replica.loss(train_set, idx);
        } catch (...) {
          nn::clear_tape();
          throw;
        }
        if (!std::isfinite(loss.item())) {
          nn::clear_tape();
          throw std::runtime_error("non-finite loss on instance " + train_set.id(idx));
        }
        losses[j] = loss.item();
        nn::backward(loss);
        auto& g = grads[j];
        g.assign(offsets.back(), 0.0);
        const auto rp = replica.store().all();
        for (std::size_t k = 0; k < rp.size(); ++k) {
          if (!rp[k]->tensor.has_grad()) continue;
          const auto pg = rp[k]->tensor.grad();
          std::copy(pg.begin(), pg.end(), g.begin() + static_cast<std::ptrdiff_t>(offsets[k]));
        }
        replica.store().clear_grads();
      });
      std::vector<double> total(offsets.back(), 0.0);
      for (std::size_t j = 0; j < count; ++j) {
        loss_sum += losses[j];
        for (std::size_t k = 0; k < total.size(); ++k) total[k] += grads[j][k];
      }
      const double inv = 1.0 / static_cast<double>(count);
      for (std::size_t k = 0; k < params.size(); ++k) {
        auto buf = params[k]->tensor.node()->grad_buffer();
        for (std::size_t e = 0; e < buf.size(); ++e) buf[e] = total[offsets[k] + e] * inv;
      }
      nn::adam_update(params, adam);
    }
    const double metric = evaluate(master, validation, "validation").accuracy;
    ckpt.curve.push_back(
        EpochRecord{epoch, loss_sum / static_cast<double>(order.size()), metric, seconds_since(start)});
    if (metric > best) {
      best = metric;
      ckpt.best_validation = metric;
      ckpt.best_epoch = epoch;
      ckpt.parameters = master.store().to_json();
      since_best = 0;
    } else {
      ++since_best;
    }
    if (since_best >= config.patience || best >= 1.0) break;
  }
  return ckpt;
}

// ---------------------------------------------------------------------------
// Random baseline

nlohmann::json BaselineReport::to_json() const {
  return {{"count", count}, {"radius", radius},         {"trials", trials},
          {"estimate", estimate}, {"standard_error", standard_error}, {"exact", exact}};
}

std::vector<std::size_t> baseline_candidates(const FitbInstance& inst, std::size_t radius) {
  const CodeGraph& g = inst.graph;
  std::vector<std::vector<std::size_t>> adj(g.nodes.size());
  for (const Edge& e : g.edges) {
    adj[e.src].push_back(e.dst);
    adj[e.dst].push_back(e.src);
  }
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  std::vector<std::size_t> dist(g.nodes.size(), kUnseen);
  std::deque<std::size_t> queue{inst.blank_node};
  dist[inst.blank_node] = 0;
  while (!queue.empty()) {
    const std::size_t v = queue.front();
    queue.pop_front();
    if (dist[v] == radius) continue;
    for (std::size_t w : adj[v]) {
      if (dist[w] != kUnseen) continue;
      dist[w] = dist[v] + 1;
      queue.push_back(w);
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t v = 0; v < g.nodes.size(); ++v)
    if (dist[v] != kUnseen && v != inst.blank_node && g.nodes[v].kind == NodeKind::kVariable) out.push_back(v);
  return out;
}

BaselineReport random_baseline_fitb(std::span<const FitbInstance> instances, std::size_t radius, std::size_t trials,
                                    std::uint64_t seed) {
  if (radius == 0) throw std::invalid_argument("radius must be at least 1");
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  if (instances.empty()) throw std::invalid_argument("no instances for the baseline");
  BaselineReport r;
  r.count = instances.size();
  r.radius = radius;
  r.trials = trials;
  std::vector<std::vector<std::size_t>> candidates;
  std::vector<std::vector<bool>> hit;
  for (const FitbInstance& inst : instances) {
    candidates.push_back(baseline_candidates(inst, radius));
    std::vector<bool> h;
    std::size_t c = 0;
    for (std::size_t v : candidates.back()) {
      const bool ok = std::find(inst.correct_nodes.begin(), inst.correct_nodes.end(), v) != inst.correct_nodes.end();
      h.push_back(ok);
      c += ok;
    }
    hit.push_back(std::move(h));
    if (!candidates.back().empty()) r.exact += static_cast<double>(c) / static_cast<double>(candidates.back().size());
  }
  r.exact /= static_cast<double>(instances.size());

  Rng rng(seed);
  std::vector<double> per_trial;
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t hits = 0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      if (candidates[i].empty()) continue;
      hits += hit[i][rng.below(candidates[i].size())];
    }
    per_trial.push_back(static_cast<double>(hits) / static_cast<double>(instances.size()));
  }
  const double mean = std::accumulate(per_trial.begin(), per_trial.end(), 0.0) / static_cast<double>(trials);
  double var = 0.0;
  for (double a : per_trial) var += (a - mean) * (a - mean);
  var = trials > 1 ? var / static_cast<double>(trials - 1) : 0.0;
  r.estimate = mean;
  r.standard_error = std::sqrt(var / static_cast<double>(trials));
  return r;
}

}  // namespace gsc
