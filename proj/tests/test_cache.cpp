#include <doctest.h>

#include <map>
#include <set>

#include "gsc/cache.hpp"
#include "gsc/random.hpp"

using namespace gsc;

namespace {

CodeGraph variables_graph(const std::vector<std::string>& names) {
  CodeGraph g;
  g.add_node({NodeKind::kSyntax, "CompilationUnit", {}, {}, {}, 0});
  for (const auto& n : names) {
    const std::size_t id = g.add_node({NodeKind::kVariable, "NameUse", n, {}, {}, 0});
    g.add_edge(0, id, EdgeType::kAst);
  }
  return g;
}

std::map<std::string, std::set<std::string>> word_users(const CodeGraph& g) {
  std::map<std::string, std::set<std::string>> out;
  for (const auto& n : g.nodes) {
    if (n.kind == NodeKind::kCache) out[*n.name];
  }
  for (const Edge& e : g.edges) {
    if (e.type == EdgeType::kWordUse) out[*g.nodes[e.src].name].insert(*g.nodes[e.dst].name);
  }
  return out;
}

}  // namespace

TEST_CASE("split_name examples") {
  CHECK(split_name("addItemToList").words == std::vector<std::string>{"add", "item", "to", "list"});
  CHECK(split_name("guava_dict").words == std::vector<std::string>{"guava", "dict"});
  CHECK(split_name("x").words == std::vector<std::string>{"x"});
  CHECK(split_name("XMLParser").words == std::vector<std::string>{"xml", "parser"});
  CHECK(split_name("parseHTTP2Response").words == std::vector<std::string>{"parse", "http2", "response"});
  CHECK(split_name("MAX_VALUE").words == std::vector<std::string>{"max", "value"});
  CHECK(split_name("utf8String").words == std::vector<std::string>{"utf8", "string"});
  CHECK(split_name("").words.empty());
}

TEST_CASE("split_name reconstructs the letters and digits of random identifiers") {
  Rng rng(3);
  const std::string alphabet = "abcXYZ_019";
  for (int trial = 0; trial < 500; ++trial) {
    std::string name(1, "abcXYZ_"[rng.below(7)]);
    const auto len = rng.below(12);
    for (std::size_t i = 0; i < len; ++i) name += alphabet[rng.below(alphabet.size())];
    std::string expected;
    for (char ch : name) {
      if (ch != '_') expected += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    }
    std::string joined;
    for (const auto& w : split_name(name).words) {
      CHECK(!w.empty());
      joined += w;
    }
    CHECK(joined == expected);
    CHECK(split_name(name).words.empty() == expected.empty());
  }
}

TEST_CASE("shared words get one cache node linked to every user") {
  CodeGraph g = variables_graph({"getGuavaDictionary", "guava_dict"});
  CHECK(build_cache(g, CacheMode::kFullGsc) == 4);
  auto users = word_users(g);
  CHECK(users.size() == 4);
  CHECK(users["guava"] == std::set<std::string>{"getGuavaDictionary", "guava_dict"});
  CHECK(users["dict"] == std::set<std::string>{"guava_dict"});
  for (const auto& n : g.nodes) {
    if (n.kind == NodeKind::kCache) CHECK(n.type == "CACHE_NODE");
  }
}

TEST_CASE("no variables means no cache nodes") {
  CodeGraph g;
  g.add_node({NodeKind::kSyntax, "CompilationUnit", {}, {}, {}, 0});
  CHECK(build_cache(g, CacheMode::kFullGsc) == 0);
  CHECK(g.nodes.size() == 1);
}

TEST_CASE("cache for a, ab, a_b matches a brute-force set construction") {
  CodeGraph g = variables_graph({"a", "ab", "a_b"});
  build_cache(g, CacheMode::kFullGsc);
  std::map<std::string, std::set<std::size_t>> expected;
  for (std::size_t id = 1; id <= 3; ++id) {
    for (const auto& w : split_name(*g.nodes[id].name).words) expected[w].insert(id);
  }
  std::map<std::string, std::set<std::size_t>> got;
  for (const auto& n : g.nodes) {
    if (n.kind == NodeKind::kCache) got[*n.name];
  }
  for (const Edge& e : g.edges) {
    if (e.type == EdgeType::kWordUse) got[*g.nodes[e.src].name].insert(e.dst);
  }
  CHECK(got == expected);
  CHECK(got["a"] == std::set<std::size_t>{1, 3});
}

TEST_CASE("pointer-sentinel mode adds cache nodes without edges") {
  CodeGraph g = variables_graph({"fooBar", "bar"});
  const auto before = g.edges.size();
  CHECK(build_cache(g, CacheMode::kPointerSentinelNoEdges) == 2);
  CHECK(g.edges.size() == before);
}

TEST_CASE("special and syntax nodes contribute no words") {
  CodeGraph g = variables_graph({"count"});
  g.add_node({NodeKind::kSpecial, "NameUse", std::string(kNameMe), {}, {}, 0});
  g.add_node({NodeKind::kSyntax, "Keyword:class", {}, {}, {}, 0});
  build_cache(g, CacheMode::kFullGsc);
  CHECK(word_users(g).size() == 1);
  CHECK_THROWS_AS(build_cache(g, CacheMode::kFullGsc), std::logic_error);
}

TEST_CASE("cache construction is invariant to node relabeling") {
  Rng rng(8);
  const std::vector<std::string> pool{"itemCount", "count", "item_list", "listSize", "XMLNode", "node", "size2"};
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<std::string> names;
    for (int i = 0; i < 6; ++i) names.push_back(pool[rng.below(pool.size())]);
    CodeGraph a = variables_graph(names);
    std::vector<std::string> shuffled = names;
    rng.shuffle(shuffled);
    CodeGraph b = variables_graph(shuffled);
    build_cache(a, CacheMode::kFullGsc);
    build_cache(b, CacheMode::kFullGsc);
    CHECK(word_users(a) == word_users(b));
    CHECK(a.count_edges(EdgeType::kWordUse) == b.count_edges(EdgeType::kWordUse));
  }
}

TEST_CASE("word-use edge exists iff the word is in the split name") {
  CodeGraph g = variables_graph({"readBuffer", "bufferSize", "size", "read_all_bytes"});
  build_cache(g, CacheMode::kFullGsc);
  for (std::size_t c = 0; c < g.nodes.size(); ++c) {
    if (g.nodes[c].kind != NodeKind::kCache) continue;
    for (std::size_t v = 1; v <= 4; ++v) {
      const auto words = split_name(*g.nodes[v].name).words;
      const bool contains = std::find(words.begin(), words.end(), *g.nodes[c].name) != words.end();
      CHECK(g.has_edge(c, v, EdgeType::kWordUse) == contains);
    }
  }
}
