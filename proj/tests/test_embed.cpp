#include <doctest.h>

#include <cmath>

#include "gsc/ast.hpp"
#include "gsc/cache.hpp"
#include "gsc/embed.hpp"
#include "oracles/gradcheck.hpp"

using namespace gsc;

namespace {

bool bitwise_equal(const nn::Tensor& a, const nn::Tensor& b) {
  return a.shape() == b.shape() && std::equal(a.values().begin(), a.values().end(), b.values().begin());
}

Vocabulary words_of(std::initializer_list<const char*> words) {
  std::map<std::string, std::size_t> counts;
  for (const char* w : words) counts[w] = 1;
  return make_word_vocab(counts, 100);
}

Vocabulary types_of(std::initializer_list<const char*> types) {
  std::map<std::string, std::size_t> counts;
  for (const char* t : types) counts[t] = 1;
  return make_type_vocab(counts, 100);
}

GraphNode variable(std::string name, std::optional<std::string> type) {
  GraphNode n;
  n.kind = NodeKind::kVariable;
  n.construct = "LocalName";
  n.name = std::move(name);
  n.type = std::move(type);
  return n;
}

GraphNode syntax(std::string construct) {
  GraphNode n;
  n.construct = std::move(construct);
  return n;
}

}  // namespace

TEST_CASE("vocabulary") {
  std::map<std::string, std::size_t> counts{{"b", 3}, {"a", 3}, {"c", 5}, {"d", 1}};
  Vocabulary v = make_word_vocab(counts, 3);
  REQUIRE(v.size() == 5);
  CHECK(v.entry(0) == "<UNK>");
  CHECK(v.entry(1) == "<EOS>");
  CHECK(v.entry(2) == "c");
  CHECK(v.entry(3) == "a");
  CHECK(v.entry(4) == "b");
  CHECK(v.index("d") == kUnkIndex);
  CHECK(v.index("<EOS>") == kEosIndex);
  Vocabulary back = Vocabulary::from_json(v.to_json());
  CHECK(back.size() == v.size());
  for (std::size_t i = 0; i < v.size(); ++i) CHECK(back.entry(i) == v.entry(i));
  CHECK(back.reserved_count() == 2);
  CHECK(make_type_vocab({}, 10).entry(1) == "CACHE_NODE");
}

TEST_CASE("charcnn") {
  const CharCnnConfig cfg = CharCnnConfig::defaults();
  CHECK(cfg.table_size() == 70);
  SUBCASE("equal names give equal embeddings") {
    Rng rng(1);
    nn::ParameterStore store;
    CharCnn cnn(store, "cnn", cfg, rng);
    CHECK(bitwise_equal(cnn("counter"), cnn("counter")));
    CHECK(cnn("counter").shape() == nn::Shape{1, 64});
  }
  SUBCASE("abc and abd differ for every seed") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      Rng rng(seed);
      nn::ParameterStore store;
      CharCnn cnn(store, "cnn", cfg, rng);
      // Zero-initialised biases plus relu can leave both maps at zero; use
      // random biases so the comparison exercises the full network.
      for (nn::Parameter* p : store.all())
        for (double& v : p->tensor.mutable_values()) v = rng.uniform(-0.5, 0.5);
      CHECK_FALSE(bitwise_equal(cnn("abc"), cnn("abd")));
    }
  }
  SUBCASE("long names are truncated") {
    Rng rng(2);
    nn::ParameterStore store;
    CharCnn cnn(store, "cnn", cfg, rng);
    const std::string longer(40, 'q');
    CHECK(cnn.encode(longer).size() == 32);
    CHECK(bitwise_equal(cnn(longer + "xyz"), cnn(std::string(32, 'q'))));
  }
  SUBCASE("encoding lowercases and maps unknown characters to 0") {
    Rng rng(3);
    nn::ParameterStore store;
    CharCnn cnn(store, "cnn", cfg, rng);
    CHECK(cnn.encode("aB") == std::vector<std::size_t>{1, 2});
    CHECK(cnn.encode("\xc3\xa9") == std::vector<std::size_t>{0, 0});
    CHECK(cnn.encode("") == std::vector<std::size_t>{0});
  }
}

TEST_CASE("charcnn gradients") {
  CharCnnConfig cfg = CharCnnConfig::defaults();
  cfg.char_embed_dim = 3;
  cfg.conv1_channels = 4;
  cfg.conv2_channels = 5;
  double worst = 0.0;
  std::string worst_info;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    Rng rng(seed);
    nn::ParameterStore store;
    CharCnn cnn(store, "cnn", cfg, rng);
    for (nn::Parameter* p : store.all())
      for (double& v : p->tensor.mutable_values()) v = rng.uniform(-0.5, 0.5);
    std::vector<nn::Tensor> params;
    for (nn::Parameter* p : store.all()) params.push_back(p->tensor);
    std::vector<double> w(5);
    for (double& x : w) x = rng.uniform(-1.0, 1.0);
    const nn::Tensor proj = nn::Tensor::row(w);
    auto r = testing::check_gradients(params, [&] { return nn::sum(nn::mul(cnn("getValue"), proj)); });
    if (r.max_relative_error > worst) {
      worst = r.max_relative_error;
      worst_info = r.worst;
    }
  }
  INFO(worst_info);
  CHECK(worst < 1e-4);
}

TEST_CASE("node embedder") {
  SUBCASE("closed vocab name is the mean of word rows") {
    Rng rng(5);
    nn::ParameterStore store;
    EmbedConfig cfg;
    cfg.names = NameEmbedding::kClosedVocab;
    NodeEmbedder emb(store, cfg, words_of({"foo", "bar"}), types_of({"int"}), rng);
    const nn::Tensor table = store.get("embed.words");
    const nn::Tensor e = emb.name_embedding("foo bar");
    const std::size_t foo = emb.words().index("foo"), bar = emb.words().index("bar");
    for (std::size_t c = 0; c < 64; ++c) {
      CHECK(e.at(0, c) == doctest::Approx((table.at(foo, c) + table.at(bar, c)) / 2.0).epsilon(1e-15));
    }
    const nn::Tensor oov = emb.name_embedding("quux zork");
    for (std::size_t c = 0; c < 64; ++c) CHECK(oov.at(0, c) == doctest::Approx(table.at(kUnkIndex, c)).epsilon(1e-15));
  }
  SUBCASE("variable state is the projection of type and name") {
    Rng rng(6);
    nn::ParameterStore store;
    EmbedConfig cfg;
    cfg.names = NameEmbedding::kClosedVocab;
    NodeEmbedder emb(store, cfg, words_of({"count"}), types_of({"int"}), rng);
    for (nn::Parameter* p : store.all())
      for (double& v : p->tensor.mutable_values()) v = rng.uniform(-0.5, 0.5);
    CodeGraph g;
    g.add_node(variable("count", "int"));
    const nn::Tensor h = emb.init_hidden_states(g);
    const nn::Tensor types = store.get("embed.type"), words = store.get("embed.words");
    const nn::Tensor w = store.get("embed.proj.weight"), b = store.get("embed.proj.bias");
    const std::size_t ti = emb.types().index("int"), wi = emb.words().index("count");
    std::vector<double> x;
    for (std::size_t c = 0; c < 16; ++c) x.push_back(types.at(ti, c));
    for (std::size_t c = 0; c < 64; ++c) x.push_back(words.at(wi, c));
    for (std::size_t o = 0; o < 64; ++o) {
      double y = b.at(0, o);
      for (std::size_t k = 0; k < 80; ++k) y += w.at(o, k) * x[k];
      CHECK(h.at(0, o) == doctest::Approx(y).epsilon(1e-12));
    }
  }
  SUBCASE("identical name and type give identical states") {
    for (NameEmbedding mode : {NameEmbedding::kClosedVocab, NameEmbedding::kCharCnn}) {
      Rng rng(7);
      nn::ParameterStore store;
      EmbedConfig cfg;
      cfg.names = mode;
      NodeEmbedder emb(store, cfg, words_of({"x"}), types_of({"int"}), rng);
      CodeGraph g;
      g.add_node(syntax("Block"));
      g.add_node(variable("x", "int"));
      g.add_node(variable("x", "int"));
      g.add_node(variable("x", "Foo"));
      GraphNode cache;
      cache.kind = NodeKind::kCache;
      cache.construct = std::string(kCacheConstruct);
      cache.name = "x";
      g.add_node(cache);
      GraphNode special = variable(std::string(kFillInTheBlank), std::nullopt);
      special.kind = NodeKind::kSpecial;
      g.add_node(special);
      const nn::Tensor h = emb.init_hidden_states(g);
      REQUIRE(h.shape() == nn::Shape{6, 64});
      auto row = [&](std::size_t i) { return std::vector<double>(h.values().begin() + i * 64, h.values().begin() + (i + 1) * 64); };
      CHECK(row(1) == row(2));
      // Foo is not in the type vocabulary and shares <UNK> with nothing else here.
      CHECK(row(1) != row(3));
      CHECK(row(1) != row(4));
      const nn::Tensor special_table = store.get("embed.special");
      for (std::size_t c = 0; c < 64; ++c) CHECK(h.at(5, c) == special_table.at(0, c));
      const nn::Tensor constructs = store.get("embed.construct");
      const auto& vocab = construct_vocabulary();
      const auto block = static_cast<std::size_t>(std::find(vocab.begin(), vocab.end(), "Block") - vocab.begin());
      for (std::size_t c = 0; c < 64; ++c) CHECK(h.at(0, c) == constructs.at(block, c));
    }
  }
  SUBCASE("unknown construct is rejected") {
    Rng rng(8);
    nn::ParameterStore store;
    NodeEmbedder emb(store, EmbedConfig{}, words_of({}), types_of({}), rng);
    CodeGraph g;
    g.add_node(syntax("Lambda"));
    CHECK_THROWS_AS(emb.init_hidden_states(g), std::invalid_argument);
  }
  SUBCASE("embedding is pure") {
    Rng rng(9);
    nn::ParameterStore store;
    NodeEmbedder emb(store, EmbedConfig{}, words_of({}), types_of({"int"}), rng);
    Ast ast = parse_source("class A { int f; int g(int x) { return x + f; } }");
    CodeGraph g = ast_to_graph(ast, "A.java");
    build_cache(g, CacheMode::kFullGsc);
    CHECK(bitwise_equal(emb.init_hidden_states(g), emb.init_hidden_states(g)));
    CHECK(emb.init_hidden_states(g).shape() == nn::Shape{g.nodes.size(), 64});
  }
}

TEST_CASE("embedding gradients") {
  double worst = 0.0;
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (NameEmbedding mode : {NameEmbedding::kClosedVocab, NameEmbedding::kCharCnn}) {
      Rng rng(seed);
      nn::ParameterStore store;
      EmbedConfig cfg;
      cfg.hidden = 4;
      cfg.type_dim = 3;
      cfg.names = mode;
      cfg.charcnn.char_embed_dim = 3;
      cfg.charcnn.conv1_channels = 4;
      cfg.charcnn.conv2_channels = 4;
      NodeEmbedder emb(store, cfg, words_of({"get", "value"}), types_of({"int"}), rng);
      for (nn::Parameter* p : store.all())
        for (double& v : p->tensor.mutable_values()) v = rng.uniform(-0.5, 0.5);
      CodeGraph g;
      g.add_node(syntax("Block"));
      g.add_node(variable("getValue", "int"));
      g.add_node(variable("value", std::nullopt));
      std::vector<double> w(12);
      for (double& x : w) x = rng.uniform(-1.0, 1.0);
      const nn::Tensor proj = nn::Tensor::matrix(3, 4, w);
      std::vector<nn::Tensor> params;
      for (nn::Parameter* p : store.all()) params.push_back(p->tensor);
      auto r = testing::check_gradients(params, [&] { return nn::sum(nn::mul(emb.init_hidden_states(g), proj)); });
      worst = std::max(worst, r.max_relative_error);
    }
  }
  CHECK(worst < 1e-4);
}
