#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsc/tasks.hpp"

namespace gsc {

enum class Task { kFitb, kVarNaming };
std::string_view task_name(Task t);
Task parse_task(std::string_view text);

enum class VocabStrategy { kClosedVocab, kCharCnn, kPointerSentinel, kGsc };
std::string_view vocab_strategy_name(VocabStrategy v);
VocabStrategy parse_vocab_strategy(std::string_view text);

struct ExperimentConfig {
  Task task = Task::kFitb;
  Representation representation = Representation::kAugAst;
  VocabStrategy vocab = VocabStrategy::kGsc;
  GnnVariant gnn = GnnVariant::kGgnn;
  std::size_t hidden = 64;
  std::size_t rounds = 8;
  std::size_t max_nodes = 500;
  std::size_t unroll = 8;
  double lr = 1e-3;
  std::size_t batch = 20;
  std::size_t patience = 10;
  std::size_t max_epochs = 100;
  std::uint64_t seed = 0;
  MixtureMode mixture = MixtureMode::kNormalized;
  std::size_t word_vocab_size = 5000;
  std::size_t type_vocab_size = 1000;
  std::size_t beam_width = 5;
  std::size_t fitb_per_variable = 1;
  std::size_t varnaming_per_file = 0;

  // Throws std::invalid_argument for unusable combinations.
  void validate() const;

  std::optional<CacheMode> cache_mode() const;
  NameEmbedding name_embedding() const;
  DecoderKind decoder_kind() const;
  InstanceOptions instance_options() const;
  std::vector<EdgeType> edge_types() const;

  // One `key = value` line per field; '#' starts a comment.
  std::string to_text() const;
  // Unknown keys and malformed values throw std::invalid_argument. Missing
  // keys keep the current value of `base`.
  static ExperimentConfig from_text(std::string_view text, ExperimentConfig base);
  static ExperimentConfig from_text(std::string_view text);
  static ExperimentConfig from_file(const std::filesystem::path& path, ExperimentConfig base);
  void set(std::string_view key, std::string_view value);

  nlohmann::json to_json() const;
  static ExperimentConfig from_json(const nlohmann::json& j);
  // 16 hex digits of the FNV-1a hash of to_text().
  std::string hash() const;
};

// Instances of one task, in a fixed order.
struct InstanceSet {
  Task task = Task::kFitb;
  std::vector<FitbInstance> fitb;
  std::vector<VarNamingInstance> varnaming;

  std::size_t size() const { return task == Task::kFitb ? fitb.size() : varnaming.size(); }
  bool empty() const { return size() == 0; }
  const CodeGraph& graph(std::size_t i) const;
  const std::string& id(std::size_t i) const;
  InstanceSet subset(std::span<const std::size_t> indices) const;
  InstanceSet prefix(std::size_t count) const;

  void write_jsonl(const std::filesystem::path& path) const;
  static InstanceSet read_jsonl(const std::filesystem::path& path);
};

// Instances for the task of `config` from un-augmented file graphs. The
// per-file seed is derived from the config seed and the file name.
InstanceSet make_instances(const ExperimentConfig& config, std::span<const CodeGraph> files);

// Word counts over the names of variable and cache nodes plus name targets;
// type counts over node types.
struct Vocabularies {
  Vocabulary words;
  Vocabulary types;
};
Vocabularies build_vocabularies(const ExperimentConfig& config, const InstanceSet& train);

// Embedder, GNN and task readout sharing one parameter store.
class Model {
 public:
  Model(const ExperimentConfig& config, Vocabularies vocabs);

  nn::ParameterStore& store() { return *store_; }
  const nn::ParameterStore& store() const { return *store_; }
  const ExperimentConfig& config() const { return config_; }
  const Vocabularies& vocabs() const { return vocabs_; }

  GnnState encode(const CodeGraph& graph) const;
  nn::Tensor loss(const InstanceSet& set, std::size_t i) const;
  InstanceOutcome score(const InstanceSet& set, std::size_t i) const;

  nn::Tensor fitb_scores(const FitbInstance& inst) const;
  std::vector<Hypothesis> decode(const VarNamingInstance& inst, std::size_t width) const;

 private:
  ExperimentConfig config_;
  Vocabularies vocabs_;
  std::unique_ptr<nn::ParameterStore> store_;
  NodeEmbedder embedder_;
  GnnModel gnn_;
  FitbReadout fitb_;
  NameDecoder decoder_;
};

// Copies parameter values between stores with identical layouts.
void copy_parameters(const nn::ParameterStore& from, nn::ParameterStore& to);

struct EpochRecord {
  std::size_t epoch = 0;
  double train_loss = 0.0;
  double validation_metric = 0.0;
  double seconds = 0.0;
};

struct Checkpoint {
  ExperimentConfig config;
  Vocabularies vocabs;
  nlohmann::json parameters;
  std::vector<EpochRecord> curve;
  double best_validation = 0.0;
  std::size_t best_epoch = 0;

  Model model() const;
  nlohmann::json to_json() const;
  static Checkpoint from_json(const nlohmann::json& j);
  void save(const std::filesystem::path& path) const;
  static Checkpoint load(const std::filesystem::path& path);
};

// Worker count from GSC_NUM_THREADS, else the hardware concurrency.
std::size_t worker_count();

// Adam with gradient accumulation over `batch` instances per step. After each
// epoch the validation metric (FITB accuracy, VarNaming exact match) is
// computed; training stops after `patience` epochs without a strict
// improvement, at max_epochs, or once the metric reaches 1. The returned
// parameters are those of the best epoch. A non-finite loss throws
// std::runtime_error naming the instance. `initial` warm-starts from stored
// parameter values.
Checkpoint train(const ExperimentConfig& config, const InstanceSet& train_set, const InstanceSet& validation,
                 const nlohmann::json* initial = nullptr);

// Throws std::invalid_argument on an empty set or a task mismatch.
MetricsReport evaluate(const Model& model, const InstanceSet& instances, std::string split);
MetricsReport evaluate(const Checkpoint& checkpoint, const InstanceSet& instances, std::string split);

struct BaselineReport {
  std::size_t count = 0;
  std::size_t radius = 0;
  std::size_t trials = 0;
  double estimate = 0.0;
  double standard_error = 0.0;
  double exact = 0.0;  // mean over instances of c / k

  nlohmann::json to_json() const;
};

// Variable nodes within `radius` undirected hops of the blank.
std::vector<std::size_t> baseline_candidates(const FitbInstance& inst, std::size_t radius);

// Uniform guessing among the candidates; an instance with no candidate counts
// as a miss. The estimate averages `trials` passes over the instances and the
// standard error is that of the per-pass accuracies.
BaselineReport random_baseline_fitb(std::span<const FitbInstance> instances, std::size_t radius, std::size_t trials,
                                    std::uint64_t seed);

}  // namespace gsc
