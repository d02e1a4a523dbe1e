#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include <nlohmann/json.hpp>

#include "gsc/ast.hpp"
#include "gsc/corpus.hpp"
#include "gsc/harness.hpp"

namespace fs = std::filesystem;
using namespace gsc;

namespace {

// Errors that should exit with the usage status rather than a runtime failure.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
}

fs::path prepare_out(const std::string& dir) {
  fs::path p(dir);
  fs::create_directories(p);
  return p;
}

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << "\n"; }

std::string format_metric(const std::optional<double>& v) {
  if (!v) return "n/a";
  std::ostringstream s;
  s << std::fixed << std::setprecision(4) << *v;
  return s.str();
}

void print_report(const MetricsReport& r) {
  std::cout << r.task << " on " << r.split << ": " << r.count << " instances\n"
            << "  accuracy        " << format_metric(r.accuracy) << "\n"
            << "  top5_accuracy   " << format_metric(r.top5_accuracy) << "\n";
  if (r.subword_accuracy) {
    std::cout << "  subword_accuracy " << format_metric(r.subword_accuracy) << "\n"
              << "  edit_distance    " << format_metric(r.edit_distance) << "\n"
              << "  normalized_edit_distance " << format_metric(r.normalized_edit_distance) << "\n";
  }
  std::cout << "  wall_seconds    " << format_metric(r.wall_seconds) << "\n";
}

// Options shared by instances and train: config file first, flags override.
struct ConfigFlags {
  std::string config_file;
  std::string task, repr, vocab, gnn;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> max_nodes, epochs;

  void add(CLI::App* cmd, bool with_gnn, bool required) {
    cmd->add_option("--config", config_file, "key = value experiment config")->check(CLI::ExistingFile);
    auto* t = cmd->add_option("--task", task, "fitb | varnaming")->check(CLI::IsMember({"fitb", "varnaming"}));
    auto* r = cmd->add_option("--repr", repr, "ast | augast")->check(CLI::IsMember({"ast", "augast"}));
    auto* v = cmd->add_option("--vocab", vocab, "closed | charcnn | sentinel | gsc")
                  ->check(CLI::IsMember({"closed", "charcnn", "sentinel", "gsc"}));
    if (required) {
      t->required();
      r->required();
      v->required();
    }
    if (with_gnn) {
      auto* g = cmd->add_option("--gnn", gnn, "ggnn | dtnn | rgcn")->check(CLI::IsMember({"ggnn", "dtnn", "rgcn"}));
      if (required) g->required();
      cmd->add_option("--epochs", epochs, "maximum epochs");
    }
    cmd->add_option("--seed", seed, "random seed");
    cmd->add_option("--max-nodes", max_nodes, "instance size limit");
  }

  ExperimentConfig resolve() const {
    try {
      return resolve_unchecked();
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }

  ExperimentConfig resolve_unchecked() const {
    ExperimentConfig c;
    if (!config_file.empty()) c = ExperimentConfig::from_file(config_file, c);
    if (!task.empty()) c.task = parse_task(task);
    if (!repr.empty()) c.representation = parse_representation(repr);
    if (!vocab.empty()) c.vocab = parse_vocab_strategy(vocab);
    if (!gnn.empty()) c.gnn = parse_gnn_variant(gnn);
    if (seed) c.seed = *seed;
    if (max_nodes) c.max_nodes = *max_nodes;
    if (epochs) c.max_epochs = *epochs;
    c.validate();
    return c;
  }
};

const std::map<std::string, std::string>& split_files() {
  static const std::map<std::string, std::string> m{
      {"train", "train.jsonl"}, {"validation", "validation.jsonl"}, {"seen", "seen.jsonl"}, {"unseen", "unseen.jsonl"}};
  return m;
}

InstanceSet load_split(const std::string& data_dir, const std::string& split) {
  const fs::path p = fs::path(data_dir) / split_files().at(split);
  if (!fs::exists(p)) throw std::runtime_error("missing " + p.string());
  return InstanceSet::read_jsonl(p);
}

// ---------------------------------------------------------------------------

int run_extract(const std::string& corpus, const std::string& out_dir, std::size_t unseen, double seen_frac,
                double val_frac, std::uint64_t seed, bool json) {
  const ScanResult scan = scan_corpus(corpus);
  const fs::path out = prepare_out(out_dir);
  std::ofstream graphs(out / "graphs.jsonl");
  nlohmann::json failures = nlohmann::json::array();
  std::vector<SourceUnit> parsed;
  for (const SourceUnit& u : scan.units) {
    try {
      const CodeGraph g = ast_to_graph(parse_source(u.text), u.key());
      graphs << graph_to_json(g).dump() << "\n";
      parsed.push_back(u);
    } catch (const ParseError& e) {
      failures.push_back({{"file", u.key()}, {"line", e.line()}, {"column", e.column()}, {"message", e.what()}});
      std::cerr << u.key() << ":" << e.what() << "\n";
    }
  }
  for (const ScanWarning& w : scan.warnings) std::cerr << "warning: " << w.path << ": " << w.message << "\n";
  if (parsed.empty()) throw std::runtime_error("no file parsed");
  const DatasetSplit split = split_dataset(parsed, unseen, seen_frac, val_frac, seed);
  write_file(out / "split.json", split.to_json().dump(2) + "\n");
  const DuplicationReport dup = detect_duplication(scan.units);
  write_file(out / "duplication.json", dup.to_json().dump(2) + "\n");
  nlohmann::json summary{{"files", scan.units.size()},
                         {"parsed", parsed.size()},
                         {"failed", failures},
                         {"warnings", scan.warnings.size()},
                         {"duplicated_line_fraction", dup.fraction},
                         {"train", split.train.size()},
                         {"validation", split.validation.size()},
                         {"seen", split.seen_test.size()},
                         {"unseen", split.unseen_test.size()}};
  write_file(out / "summary.json", summary.dump(2) + "\n");
  if (json) {
    print_json(summary);
  } else {
    std::cout << "parsed " << parsed.size() << " of " << scan.units.size() << " files; " << failures.size()
              << " failed\n"
              << "split: train " << split.train.size() << ", validation " << split.validation.size() << ", seen "
              << split.seen_test.size() << ", unseen " << split.unseen_test.size() << "\n"
              << "duplicated line fraction " << dup.fraction << "\n";
  }
  return 0;
}

int run_instances(const std::string& graphs_dir, const ExperimentConfig& config, const std::string& out_dir,
                  bool json) {
  const DatasetSplit split = DatasetSplit::from_json(nlohmann::json::parse(read_file(fs::path(graphs_dir) / "split.json")));
  std::map<std::string, std::string> split_of;
  for (const auto& k : split.train) split_of[k] = "train";
  for (const auto& k : split.validation) split_of[k] = "validation";
  for (const auto& k : split.seen_test) split_of[k] = "seen";
  for (const auto& k : split.unseen_test) split_of[k] = "unseen";
  std::map<std::string, std::vector<CodeGraph>> graphs;
  std::ifstream in(fs::path(graphs_dir) / "graphs.jsonl");
  if (!in) throw std::runtime_error("cannot read graphs.jsonl in " + graphs_dir);
  for (std::string line; std::getline(in, line);) {
    if (line.empty()) continue;
    CodeGraph g = graph_from_json(nlohmann::json::parse(line));
    const auto it = split_of.find(g.file);
    if (it != split_of.end()) graphs[it->second].push_back(std::move(g));
  }
  const fs::path out = prepare_out(out_dir);
  nlohmann::json counts = nlohmann::json::object();
  for (const auto& [split_name, file] : split_files()) {
    const InstanceSet set = make_instances(config, graphs[split_name]);
    set.write_jsonl(out / file);
    counts[split_name] = set.size();
  }
  write_file(out / "config.txt", config.to_text());
  nlohmann::json summary{{"config_hash", config.hash()}, {"instances", counts}};
  if (json) {
    print_json(summary);
  } else {
    std::cout << "config " << config.hash() << "\n";
    for (const auto& [k, v] : counts.items()) std::cout << k << ": " << v << " instances\n";
  }
  return 0;
}

void check_data_matches(const std::string& data_dir, const ExperimentConfig& config) {
  const fs::path p = fs::path(data_dir) / "config.txt";
  if (!fs::exists(p)) return;
  const ExperimentConfig made = ExperimentConfig::from_file(p, ExperimentConfig{});
  if (made.task != config.task || made.representation != config.representation ||
      made.cache_mode() != config.cache_mode())
    throw UsageError("instances in " + data_dir + " were built for task " + std::string(task_name(made.task)) +
                     ", repr " + std::string(representation_name(made.representation)) + ", vocab " +
                     std::string(vocab_strategy_name(made.vocab)));
}

int run_train(const std::string& data_dir, const ExperimentConfig& config, const std::string& out_dir, bool json) {
  check_data_matches(data_dir, config);
  const fs::path out = prepare_out(out_dir);
  std::cerr << "config " << config.hash() << "\n";
  write_file(out / "config.txt", config.to_text());
  const InstanceSet train_set = load_split(data_dir, "train");
  const InstanceSet validation = load_split(data_dir, "validation");
  const Checkpoint ckpt = train(config, train_set, validation);
  ckpt.save(out / "checkpoint.json");
  nlohmann::json curve = ckpt.to_json().at("curve");
  std::ofstream log(out / "log.txt");
  log << "config_hash " << config.hash() << "\n";
  for (const EpochRecord& r : ckpt.curve)
    log << "epoch " << r.epoch << " train_loss " << r.train_loss << " validation " << r.validation_metric << " seconds "
        << r.seconds << "\n";
  log << "best_epoch " << ckpt.best_epoch << " best_validation " << ckpt.best_validation << "\n";
  if (json) {
    print_json({{"checkpoint", (out / "checkpoint.json").string()},
                {"config_hash", config.hash()},
                {"best_epoch", ckpt.best_epoch},
                {"best_validation", ckpt.best_validation},
                {"curve", curve}});
  } else {
    for (const EpochRecord& r : ckpt.curve)
      std::cout << "epoch " << r.epoch << "  loss " << r.train_loss << "  validation " << r.validation_metric << "\n";
    std::cout << "best epoch " << ckpt.best_epoch << " (" << ckpt.best_validation << "), saved "
              << (out / "checkpoint.json").string() << "\n";
  }
  return 0;
}

int run_eval(const std::string& checkpoint, const std::string& data_dir, const std::string& split,
             const std::string& out_dir, bool json) {
  const Checkpoint ckpt = Checkpoint::load(checkpoint);
  const InstanceSet set = load_split(data_dir, split);
  const MetricsReport r = evaluate(ckpt, set, split);
  if (!out_dir.empty()) write_file(prepare_out(out_dir) / ("metrics_" + split + ".json"), r.to_json().dump(2) + "\n");
  if (json) print_json(r.to_json());
  else print_report(r);
  return 0;
}

int run_baseline(const std::string& data_dir, const std::string& split, std::size_t radius, std::size_t trials,
                 std::uint64_t seed, bool json) {
  const InstanceSet set = load_split(data_dir, split);
  if (set.task != Task::kFitb) throw UsageError("the random baseline needs fitb instances");
  const BaselineReport r = random_baseline_fitb(set.fitb, radius, trials, seed);
  if (json) {
    print_json(r.to_json());
  } else {
    std::cout << "random guess within radius " << r.radius << " over " << r.count << " instances: " << r.estimate
              << " +/- " << r.standard_error << " (exact " << r.exact << ", " << r.trials << " trials)\n";
  }
  return 0;
}

int run_predict(const std::string& checkpoint, const std::string& file, const std::string& target,
                const std::string& task, bool json) {
  const Checkpoint ckpt = Checkpoint::load(checkpoint);
  const ExperimentConfig& config = ckpt.config;
  if (!task.empty() && parse_task(task) != config.task)
    throw UsageError("checkpoint was trained for " + std::string(task_name(config.task)));
  const std::string text = read_file(file);
  CodeGraph base;
  try {
    base = ast_to_graph(parse_source(text), fs::path(file).filename().string());
  } catch (const ParseError& e) {
    std::cerr << file << ":" << e.what() << "\n";
    return 1;
  }
  const Model model = ckpt.model();
  nn::NoGradGuard no_grad;
  nlohmann::json out{{"task", task_name(config.task)}, {"target", target}, {"predictions", nlohmann::json::array()}};
  if (config.task == Task::kFitb) {
    InstanceOptions opts = config.instance_options();
    opts.fitb_per_variable = static_cast<std::size_t>(-1);
    const auto insts = make_fitb_instances(base, config.seed, opts);
    const FitbInstance* inst = nullptr;
    for (const auto& i : insts)
      if (i.variable == target && (!inst || i.graph.nodes[i.blank_node].line < inst->graph.nodes[inst->blank_node].line))
        inst = &i;
    if (!inst) throw UsageError("no fill-in-the-blank usage of '" + target + "' in " + file);
    const nn::Tensor scores = model.fitb_scores(*inst);
    out["blank_line"] = inst->graph.nodes[inst->blank_node].line;
    for (std::size_t v : fitb_ranking(scores, inst->graph, 5)) {
      const GraphNode& n = inst->graph.nodes[v];
      out["predictions"].push_back({{"node", v}, {"name", n.name.value_or("")}, {"line", n.line},
                                    {"score", scores.at(v, 0)}});
    }
  } else {
    InstanceOptions opts = config.instance_options();
    opts.varnaming_per_file = 0;
    const auto insts = make_varnaming_instances(base, config.seed, opts);
    const VarNamingInstance* inst = nullptr;
    for (const auto& i : insts)
      if (i.original_name == target && !inst) inst = &i;
    if (!inst) throw UsageError("no declaration named '" + target + "' in " + file);
    for (const Hypothesis& h : model.decode(*inst, 5)) {
      std::string name;
      for (std::size_t k = 0; k < h.words.size(); ++k)
        name += k == 0 || h.words[k].empty() ? h.words[k]
                                             : static_cast<char>(std::toupper(static_cast<unsigned char>(h.words[k][0]))) +
                                                   h.words[k].substr(1);
      out["predictions"].push_back({{"name", name}, {"words", h.words}, {"ended", h.ended}, {"log_prob", h.log_prob}});
    }
  }
  if (json) {
    print_json(out);
  } else {
    if (config.task == Task::kFitb) {
      std::cout << "blank at line " << out["blank_line"] << "\n";
      for (const auto& p : out["predictions"])
        std::cout << "  " << p["name"].get<std::string>() << "  line " << p["line"] << "  score " << p["score"] << "\n";
    } else {
      for (const auto& p : out["predictions"])
        std::cout << "  " << p["name"].get<std::string>() << "  log-prob " << p["log_prob"] << "\n";
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph-structured cache models for source code"};
  app.require_subcommand(1);
  app.fallthrough();
  bool json = false;
  app.add_flag("--json", json, "machine-readable output");

  auto* extract = app.add_subcommand("extract", "parse a corpus into graphs and a dataset split");
  std::string corpus, extract_out;
  std::size_t unseen_repos = 2;
  double seen_fraction = 0.15, val_fraction = 0.15;
  std::uint64_t split_seed = 0;
  extract->add_option("--corpus", corpus, "corpus root, one directory per repo")->required()->check(CLI::ExistingDirectory);
  extract->add_option("--out", extract_out, "output directory")->required();
  extract->add_option("--unseen-repos", unseen_repos, "whole repos held out")->capture_default_str();
  extract->add_option("--seen-fraction", seen_fraction, "file fraction for the seen test split")->capture_default_str();
  extract->add_option("--val-fraction", val_fraction, "file fraction for validation")->capture_default_str();
  extract->add_option("--seed", split_seed, "split seed")->capture_default_str();

  auto* instances = app.add_subcommand("instances", "build task instances from extracted graphs");
  ConfigFlags inst_flags;
  std::string graphs_dir, inst_out;
  instances->add_option("--graphs", graphs_dir, "output directory of extract")->required()->check(CLI::ExistingDirectory);
  instances->add_option("--out", inst_out, "output directory")->required();
  inst_flags.add(instances, false, false);

  auto* train_cmd = app.add_subcommand("train", "train a model");
  ConfigFlags train_flags;
  std::string train_data, train_out;
  train_cmd->add_option("--data", train_data, "output directory of instances")->required()->check(CLI::ExistingDirectory);
  train_cmd->add_option("--out", train_out, "output directory")->required();
  train_flags.add(train_cmd, true, true);

  auto* eval_cmd = app.add_subcommand("eval", "evaluate a checkpoint");
  std::string eval_ckpt, eval_data, eval_split, eval_out;
  eval_cmd->add_option("--checkpoint", eval_ckpt, "checkpoint file")->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--data", eval_data, "output directory of instances")->required()->check(CLI::ExistingDirectory);
  eval_cmd->add_option("--split", eval_split, "seen | unseen | validation | train")
      ->required()
      ->check(CLI::IsMember({"seen", "unseen", "validation", "train"}));
  eval_cmd->add_option("--out", eval_out, "directory for the metrics file");

  auto* base_cmd = app.add_subcommand("baseline", "random-guess fill-in-the-blank baseline");
  std::string base_data, base_split = "seen";
  std::size_t radius = 8, trials = 1000;
  std::uint64_t base_seed = 0;
  base_cmd->add_option("--data", base_data, "output directory of fitb instances")->required()->check(CLI::ExistingDirectory);
  base_cmd->add_option("--split", base_split, "seen | unseen | validation | train")
      ->check(CLI::IsMember({"seen", "unseen", "validation", "train"}))
      ->capture_default_str();
  base_cmd->add_option("--radius", radius, "undirected edge radius")->check(CLI::PositiveNumber)->capture_default_str();
  base_cmd->add_option("--trials", trials, "Monte-Carlo passes")->check(CLI::PositiveNumber)->capture_default_str();
  base_cmd->add_option("--seed", base_seed, "random seed")->capture_default_str();

  auto* predict_cmd = app.add_subcommand("predict", "run a checkpoint on one source file");
  std::string pred_ckpt, pred_file, pred_target, pred_task;
  predict_cmd->add_option("--checkpoint", pred_ckpt, "checkpoint file")->required()->check(CLI::ExistingFile);
  predict_cmd->add_option("--file", pred_file, "source file")->required()->check(CLI::ExistingFile);
  predict_cmd->add_option("--target", pred_target, "variable to blank or name to predict")->required();
  predict_cmd->add_option("--task", pred_task, "fitb | varnaming")->check(CLI::IsMember({"fitb", "varnaming"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*extract) return run_extract(corpus, extract_out, unseen_repos, seen_fraction, val_fraction, split_seed, json);
    if (*instances) return run_instances(graphs_dir, inst_flags.resolve(), inst_out, json);
    if (*train_cmd) return run_train(train_data, train_flags.resolve(), train_out, json);
    if (*eval_cmd) return run_eval(eval_ckpt, eval_data, eval_split, eval_out, json);
    if (*base_cmd) return run_baseline(base_data, base_split, radius, trials, base_seed, json);
    if (*predict_cmd) return run_predict(pred_ckpt, pred_file, pred_target, pred_task, json);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
