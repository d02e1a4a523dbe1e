#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <limits>
#include <numeric>

#include "gsc/ast.hpp"
#include "gsc/harness.hpp"

using namespace gsc;

namespace {

const char* const kSources[] = {
    "class Counter { int total; int step;\n"
    "  void addStep(int times) { for (int i = 0; i < times; i++) { total = total + step; } }\n"
    "  int getTotal() { return total; }\n"
    "  void setStep(int step) { this.step = step; } }",
    "class Account { double balance; double fee;\n"
    "  double chargeFee(double rate) { double charged = balance * rate; balance = balance - charged; return charged; }\n"
    "  boolean isEmpty(double limit) { boolean empty = balance < limit; return empty; } }",
    "class Sensor { int reading; int offset;\n"
    "  int calibrate(int target) { int delta = target - reading; offset = offset + delta; return offset; }\n"
    "  int getReading() { return reading + offset; } }",
};

std::vector<CodeGraph> graphs() {
  std::vector<CodeGraph> out;
  int i = 0;
  for (const char* s : kSources) out.push_back(ast_to_graph(parse_source(s), "repo/F" + std::to_string(i++) + ".java"));
  return out;
}

ExperimentConfig small(Task task, VocabStrategy vocab = VocabStrategy::kGsc) {
  ExperimentConfig c;
  c.task = task;
  c.vocab = vocab;
  c.hidden = 4;
  c.rounds = 2;
  c.unroll = 3;
  c.batch = 3;
  c.lr = 0.01;
  c.max_epochs = 3;
  c.patience = 3;
  c.beam_width = 3;
  return c;
}

struct ThreadsEnv {
  explicit ThreadsEnv(const char* n) { setenv("GSC_NUM_THREADS", n, 1); }
  ~ThreadsEnv() { unsetenv("GSC_NUM_THREADS"); }
};

FitbInstance hand_instance(std::size_t variables, std::vector<std::size_t> correct) {
  // blank (0) connected to a chain of variable nodes 1..variables
  FitbInstance inst;
  inst.id = "hand";
  GraphNode blank;
  blank.kind = NodeKind::kSpecial;
  blank.construct = "NameUse";
  blank.name = std::string(kFillInTheBlank);
  inst.graph.add_node(blank);
  for (std::size_t v = 0; v < variables; ++v) {
    GraphNode n;
    n.kind = NodeKind::kVariable;
    n.construct = "NameUse";
    n.name = "v" + std::to_string(v);
    inst.graph.add_node(n);
    inst.graph.add_edge(v, v + 1, EdgeType::kNextToken);
  }
  inst.correct_nodes = std::move(correct);
  return inst;
}

}  // namespace

TEST_CASE("experiment config text") {
  ExperimentConfig c;
  c.task = Task::kVarNaming;
  c.vocab = VocabStrategy::kPointerSentinel;
  c.gnn = GnnVariant::kDtnn;
  c.lr = 0.1 + 0.2;
  c.seed = 42;
  c.mixture = MixtureMode::kPaperLiteral;
  const ExperimentConfig back = ExperimentConfig::from_text(c.to_text());
  CHECK(back.to_text() == c.to_text());
  CHECK(back.lr == c.lr);
  CHECK(back.hash() == c.hash());
  CHECK(ExperimentConfig::from_json(c.to_json()).to_text() == c.to_text());
  ExperimentConfig d = c;
  d.seed = 43;
  CHECK(d.hash() != c.hash());

  const auto parsed = ExperimentConfig::from_text("# comment\n task = fitb \n\nvocab_strategy = closed # trailing\nhidden=16\n");
  CHECK(parsed.task == Task::kFitb);
  CHECK(parsed.vocab == VocabStrategy::kClosedVocab);
  CHECK(parsed.hidden == 16);
  CHECK(parsed.rounds == 8);
  CHECK_THROWS_AS(ExperimentConfig::from_text("colour = red"), std::invalid_argument);
  CHECK_THROWS_AS(ExperimentConfig::from_text("hidden = -3"), std::invalid_argument);
  CHECK_THROWS_AS(ExperimentConfig::from_text("hidden = 3x"), std::invalid_argument);
  CHECK_THROWS_AS(ExperimentConfig::from_text("hidden"), std::invalid_argument);

  ExperimentConfig bad;
  bad.task = Task::kFitb;
  bad.vocab = VocabStrategy::kPointerSentinel;
  CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}

TEST_CASE("strategy wiring") {
  ExperimentConfig c;
  c.vocab = VocabStrategy::kClosedVocab;
  CHECK_FALSE(c.cache_mode());
  CHECK(c.name_embedding() == NameEmbedding::kClosedVocab);
  c.vocab = VocabStrategy::kPointerSentinel;
  CHECK(c.cache_mode() == CacheMode::kPointerSentinelNoEdges);
  CHECK(c.decoder_kind() == DecoderKind::kPointerSentinel);
  c.vocab = VocabStrategy::kGsc;
  CHECK(c.cache_mode() == CacheMode::kFullGsc);
  auto types = c.edge_types();
  CHECK(types.size() == kEdgeTypeCount);
  c.representation = Representation::kAst;
  types = c.edge_types();
  CHECK(types.size() == 6);
  CHECK(std::find(types.begin(), types.end(), EdgeType::kLastRead) == types.end());
  CHECK(std::find(types.begin(), types.end(), EdgeType::kReverseWordUse) != types.end());
}

TEST_CASE("instance sets and vocabularies") {
  const auto files = graphs();
  const ExperimentConfig c = small(Task::kVarNaming);
  const InstanceSet set = make_instances(c, files);
  REQUIRE(set.size() > 10);
  const auto path = std::filesystem::temp_directory_path() / "gsc_test_instances.jsonl";
  set.write_jsonl(path);
  const InstanceSet back = InstanceSet::read_jsonl(path);
  std::filesystem::remove(path);
  REQUIRE(back.size() == set.size());
  CHECK(back.task == Task::kVarNaming);
  for (std::size_t i = 0; i < set.size(); ++i) {
    CHECK(back.varnaming[i].target_words == set.varnaming[i].target_words);
    CHECK(back.varnaming[i].graph.edges == set.varnaming[i].graph.edges);
  }
  const Vocabularies v = build_vocabularies(c, set);
  for (const auto& inst : set.varnaming)
    for (const auto& w : inst.target_words) CHECK(v.words.contains(w));
  CHECK(v.types.contains("int"));
}

TEST_CASE("evaluation contract") {
  const auto files = graphs();
  const ExperimentConfig c = small(Task::kFitb);
  const InstanceSet set = make_instances(c, files);
  const Model model(c, build_vocabularies(c, set));
  const MetricsReport a = evaluate(model, set, "seen");
  const MetricsReport b = evaluate(model, set, "seen");
  CHECK(a.same_metrics(b));
  CHECK(a.count == set.size());
  CHECK(a.split == "seen");
  CHECK(a.wall_seconds >= 0.0);
  CHECK_THROWS_AS(evaluate(model, InstanceSet{}, "seen"), std::invalid_argument);

  // A model without dataflow edge types rejects augmented graphs.
  ExperimentConfig ast = c;
  ast.representation = Representation::kAst;
  const Model ast_model(ast, build_vocabularies(ast, set));
  CHECK_THROWS_AS(evaluate(ast_model, set, "seen"), std::invalid_argument);

  // And a varnaming model rejects fitb instances.
  const ExperimentConfig vn = small(Task::kVarNaming);
  const Model vn_model(vn, build_vocabularies(vn, set));
  CHECK_THROWS_AS(evaluate(vn_model, set, "seen"), std::invalid_argument);
}

TEST_CASE("training") {
  const auto files = graphs();
  for (Task task : {Task::kFitb, Task::kVarNaming}) {
    CAPTURE(task_name(task));
    ExperimentConfig c = small(task);
    const InstanceSet set = make_instances(c, files);

    SUBCASE("patience zero runs one epoch") {
      c.patience = 0;
      const Checkpoint ck = train(c, set, set);
      CHECK(ck.curve.size() == 1);
      CHECK(ck.best_epoch == 1);
    }
    SUBCASE("deterministic for any worker count") {
      Checkpoint a, b;
      {
        ThreadsEnv env("1");
        a = train(c, set, set);
      }
      {
        ThreadsEnv env("3");
        b = train(c, set, set);
      }
      REQUIRE(a.curve.size() == b.curve.size());
      for (std::size_t i = 0; i < a.curve.size(); ++i) {
        CHECK(a.curve[i].train_loss == b.curve[i].train_loss);
        CHECK(a.curve[i].validation_metric == b.curve[i].validation_metric);
      }
      CHECK(a.parameters == b.parameters);
    }
    SUBCASE("best checkpoint is never worse than any epoch") {
      c.max_epochs = 6;
      c.patience = 2;
      const Checkpoint ck = train(c, set, set);
      double best = 0.0;
      for (const auto& r : ck.curve) best = std::max(best, r.validation_metric);
      CHECK(ck.best_validation == best);
      CHECK(ck.curve.at(ck.best_epoch - 1).validation_metric == best);
      const MetricsReport r = evaluate(ck, set, "validation");
      CHECK(r.accuracy == ck.best_validation);
    }
    SUBCASE("non-finite loss aborts with the instance id") {
      const Model m(c, build_vocabularies(c, set));
      nlohmann::json params = m.store().to_json();
      for (auto& [name, entry] : params.items()) {
        if (name.rfind("embed.", 0) == 0) {
          for (auto& v : entry["values"]) v = std::numeric_limits<double>::quiet_NaN();
        }
      }
      c.batch = 1;
      try {
        train(c, set, set, &params);
        FAIL("expected an exception");
      } catch (const std::runtime_error& e) {
        const std::string msg = e.what();
        CHECK(msg.find("non-finite loss") != std::string::npos);
        bool named = false;
        for (std::size_t i = 0; i < set.size(); ++i) named = named || msg.find(set.id(i)) != std::string::npos;
        CHECK(named);
      }
    }
    SUBCASE("checkpoint round trip reproduces metrics") {
      const Checkpoint ck = train(c, set, set);
      const auto path = std::filesystem::temp_directory_path() / "gsc_test_checkpoint.json";
      ck.save(path);
      const Checkpoint back = Checkpoint::load(path);
      std::filesystem::remove(path);
      CHECK(back.config.to_text() == ck.config.to_text());
      CHECK(back.parameters == ck.parameters);
      CHECK(evaluate(back, set, "seen").same_metrics(evaluate(ck, set, "seen")));
    }
  }
  SUBCASE("empty inputs") {
    const ExperimentConfig c = small(Task::kFitb);
    const InstanceSet set = make_instances(c, files);
    CHECK_THROWS_AS(train(c, InstanceSet{}, set), std::invalid_argument);
    CHECK_THROWS_AS(train(c, set, InstanceSet{}), std::invalid_argument);
  }
}

TEST_CASE("parameter copies need matching layouts") {
  const auto files = graphs();
  const ExperimentConfig c = small(Task::kFitb);
  const InstanceSet set = make_instances(c, files);
  const auto vocabs = build_vocabularies(c, set);
  Model a(c, vocabs);
  ExperimentConfig d = c;
  d.seed = 9;
  Model b(d, vocabs);
  CHECK(a.store().to_json() != b.store().to_json());
  copy_parameters(a.store(), b.store());
  CHECK(a.store().to_json() == b.store().to_json());
  ExperimentConfig wide = c;
  wide.hidden = 5;
  Model w(wide, vocabs);
  CHECK_THROWS_AS(copy_parameters(a.store(), w.store()), std::invalid_argument);
}

TEST_CASE("random baseline") {
  SUBCASE("single correct candidate") {
    const FitbInstance inst = hand_instance(1, {1});
    const std::vector<FitbInstance> v{inst};
    const BaselineReport r = random_baseline_fitb(v, 8, 50, 1);
    CHECK(r.exact == 1.0);
    CHECK(r.estimate == 1.0);
    CHECK(r.standard_error == 0.0);
  }
  SUBCASE("radius limits the candidates") {
    const FitbInstance inst = hand_instance(6, {1, 5});
    CHECK(baseline_candidates(inst, 2) == std::vector<std::size_t>{1, 2});
    CHECK(baseline_candidates(inst, 8).size() == 6);
    const std::vector<FitbInstance> v{inst};
    CHECK(random_baseline_fitb(v, 8, 10, 1).exact == doctest::Approx(2.0 / 6.0));
    CHECK(random_baseline_fitb(v, 2, 10, 1).exact == doctest::Approx(0.5));
    CHECK_THROWS(random_baseline_fitb(v, 0, 10, 1));
  }
  SUBCASE("Monte-Carlo estimate agrees with c/k") {
    std::vector<FitbInstance> v;
    Rng rng(4);
    for (int i = 0; i < 40; ++i) {
      const std::size_t k = 1 + rng.below(7);
      std::vector<std::size_t> correct;
      for (std::size_t n = 1; n <= k; ++n)
        if (rng.uniform() < 0.4) correct.push_back(n);
      v.push_back(hand_instance(k, correct));
    }
    double exact = 0.0;
    for (const auto& inst : v) exact += static_cast<double>(inst.correct_nodes.size()) / static_cast<double>(inst.graph.nodes.size() - 1);
    exact /= static_cast<double>(v.size());
    const BaselineReport r = random_baseline_fitb(v, 8, 2000, 11);
    CHECK(r.exact == doctest::Approx(exact).epsilon(1e-12));
    CHECK(std::abs(r.estimate - r.exact) <= 3 * r.standard_error);
    CHECK(r.standard_error > 0.0);
  }
}
