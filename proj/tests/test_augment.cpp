#include <doctest.h>

#include <algorithm>
#include <map>

#include "gsc/augment.hpp"
#include "gsc/random.hpp"
#include "oracles/dataflow_oracle.hpp"
#include "oracles/program_generator.hpp"

using namespace gsc;

namespace {

struct Fixture {
  Ast ast;
  CodeGraph graph;
};

Fixture build(const std::string& src) {
  Fixture f{parse_source(src), {}};
  f.graph = ast_to_graph(f.ast);
  return f;
}

// Node ids of identifier leaves with the given text, in source order.
std::vector<std::size_t> named(const CodeGraph& g, const std::string& name) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) {
    if (g.nodes[i].kind == NodeKind::kVariable && g.nodes[i].name == name) out.push_back(i);
  }
  return out;
}

std::set<std::pair<std::size_t, std::size_t>> edges_of(const CodeGraph& g, EdgeType t) {
  std::set<std::pair<std::size_t, std::size_t>> out;
  for (const Edge& e : g.edges) {
    if (e.type == t) out.insert({e.src, e.dst});
  }
  return out;
}

std::string wrap(const std::string& body, const std::string& params = "int c") {
  return "class T { int f; int g(" + params + ") { " + body + " } }";
}

}  // namespace

TEST_CASE("computed-from edges run from the assigned variable to each right-hand occurrence") {
  {
    auto f = build(wrap("int x; int y = 1; int z = 2; x = y + z;"));
    add_computed_from(f.graph);
    auto x = named(f.graph, "x"), y = named(f.graph, "y"), z = named(f.graph, "z");
    CHECK(f.graph.has_edge(x[1], y[1], EdgeType::kComputedFrom));
    CHECK(f.graph.has_edge(x[1], z[1], EdgeType::kComputedFrom));
    CHECK(f.graph.count_edges(EdgeType::kComputedFrom) == 2);
  }
  {
    auto f = build(wrap("int x; x = 5;"));
    add_computed_from(f.graph);
    CHECK(f.graph.count_edges(EdgeType::kComputedFrom) == 0);
  }
  {
    auto f = build("class T { int f(int a, int b) { return a; } void m(int a, int b) { int x; x = f(a, b) + a; } }");
    add_computed_from(f.graph);
    auto x = named(f.graph, "x"), a = named(f.graph, "a"), b = named(f.graph, "b");
    // a: decl f, use f, decl m, arg, trailing use
    REQUIRE(a.size() == 5);
    CHECK(f.graph.count_edges(EdgeType::kComputedFrom) == 3);
    CHECK(f.graph.has_edge(x[1], a[3], EdgeType::kComputedFrom));
    CHECK(f.graph.has_edge(x[1], a[4], EdgeType::kComputedFrom));
    CHECK(f.graph.has_edge(x[1], b[3], EdgeType::kComputedFrom));
  }
}

TEST_CASE("computed-from out-degree equals right-hand variable occurrences") {
  auto f = build(wrap("int a = c; int b = a * a + c; this.f = b + this.f - a;"));
  add_computed_from(f.graph);
  auto a = named(f.graph, "a"), b = named(f.graph, "b"), fld = named(f.graph, "f");
  std::map<std::size_t, int> out;
  for (const Edge& e : f.graph.edges) {
    if (e.type == EdgeType::kComputedFrom) ++out[e.src];
  }
  CHECK(out[a[0]] == 1);
  CHECK(out[b[0]] == 3);
  CHECK(out[fld[1]] == 3);
}

TEST_CASE("straight-line reads link to the previous read only") {
  auto f = build(wrap("int y = c; int z = c;"));
  compute_last_accesses(f.graph);
  auto cs = named(f.graph, "c");
  // decl, first read, second read
  REQUIRE(cs.size() == 3);
  CHECK(f.graph.has_edge(cs[2], cs[1], EdgeType::kLastRead));
  CHECK(edges_of(f.graph, EdgeType::kLastRead).count({cs[2], cs[0]}) == 0);
  CHECK(f.graph.has_edge(cs[1], cs[0], EdgeType::kLastWrite));
  CHECK(f.graph.has_edge(cs[2], cs[0], EdgeType::kLastWrite));
}

TEST_CASE("both branch writes reach a later use") {
  auto f = build(wrap("int x; if (c > 0) { x = 1; } else { x = 2; } int y = x;"));
  compute_last_accesses(f.graph);
  auto x = named(f.graph, "x");
  REQUIRE(x.size() == 4);
  CHECK(f.graph.has_edge(x[3], x[1], EdgeType::kLastWrite));
  CHECK(f.graph.has_edge(x[3], x[2], EdgeType::kLastWrite));
}

TEST_CASE("loop write and pre-loop write both reach a post-loop use") {
  auto f = build(wrap("int x = 0; while (c > 0) { x = c; c--; } int y = x;"));
  compute_last_accesses(f.graph);
  auto x = named(f.graph, "x");
  REQUIRE(x.size() == 3);
  std::set<std::pair<std::size_t, std::size_t>> expect{{x[2], x[0]}, {x[2], x[1]}, {x[1], x[0]}};
  auto got = edges_of(f.graph, EdgeType::kLastWrite);
  for (auto e : expect) CHECK(got.count(e) == 1);
}

TEST_CASE("returns-to edges") {
  {
    auto f = build("class T { int x; int getX() { return x; } }");
    add_returns_to(f.graph);
    auto x = named(f.graph, "x");
    REQUIRE(f.graph.count_edges(EdgeType::kReturnsTo) == 1);
    const Edge& e = *std::find_if(f.graph.edges.begin(), f.graph.edges.end(),
                                  [](const Edge& e) { return e.type == EdgeType::kReturnsTo; });
    CHECK(e.src == x[1]);
    CHECK(f.graph.nodes[e.dst].construct == "TypeRef:int");
  }
  {
    auto f = build("class T { void m() { return; } }");
    add_returns_to(f.graph);
    CHECK(f.graph.count_edges(EdgeType::kReturnsTo) == 0);
  }
  {
    auto f = build("class T { Node pick(int c, Node a, Node b) { if (c > 0) return a; return b; } }");
    add_returns_to(f.graph);
    auto dst = edges_of(f.graph, EdgeType::kReturnsTo);
    REQUIRE(dst.size() == 2);
    CHECK(dst.begin()->second == std::next(dst.begin())->second);
    CHECK(f.graph.nodes[dst.begin()->second].construct == "TypeName");
  }
}

TEST_CASE("lexical edges") {
  SUBCASE("two uses of a local") {
    auto f = build(wrap("int n = 1; c = n; c = n;"));
    add_lexical_edges(f.graph);
    auto n = named(f.graph, "n");
    CHECK(f.graph.has_edge(n[2], n[1], EdgeType::kLastScopeUse));
    CHECK(f.graph.has_edge(n[1], n[0], EdgeType::kLastScopeUse));
  }
  SUBCASE("field uses link across methods") {
    auto f = build("class T { int w; void a() { this.w = 1; } void b() { int k = this.w; } }");
    add_lexical_edges(f.graph);
    auto w = named(f.graph, "w");
    REQUIRE(w.size() == 3);
    CHECK(f.graph.has_edge(w[2], w[1], EdgeType::kLastFieldLex));
    CHECK(f.graph.has_edge(w[1], w[0], EdgeType::kLastFieldLex));
    CHECK(f.graph.has_edge(w[1], w[0], EdgeType::kField));
    CHECK(f.graph.has_edge(w[2], w[0], EdgeType::kField));
    // Scope uses stay inside each method.
    CHECK(f.graph.count_edges(EdgeType::kLastScopeUse) == 0);
  }
  SUBCASE("shadowed names link within their own scope") {
    auto f = build("class T { void m() { int x = 1; x = x; { int x = 2; x = x; } x = 3; } }");
    add_lexical_edges(f.graph);
    auto x = named(f.graph, "x");
    REQUIRE(x.size() == 7);
    // outer: x0 decl, x1, x2, x6. inner: x3 decl, x4, x5.
    std::set<std::pair<std::size_t, std::size_t>> expect{{x[1], x[0]}, {x[2], x[1]}, {x[6], x[2]},
                                                         {x[4], x[3]}, {x[5], x[4]}};
    CHECK(edges_of(f.graph, EdgeType::kLastScopeUse) == expect);
  }
}

TEST_CASE("semantic edges stay within methods except field edges") {
  auto f = build("class T { int w; int a(int p) { int q = p + w; this.w = q; return q; }\n"
                 " int b(int p) { int q = this.w; while (q > p) { q = q - 1; } return q + p; } }");
  augment(f.graph);
  SyntaxTree tree(f.graph);
  auto owner = [&](std::size_t id) -> std::optional<std::size_t> {
    std::optional<std::size_t> cur = id;
    while (cur) {
      const auto& c = f.graph.nodes[*cur].construct;
      if (c == "MethodDecl" || c == "ConstructorDecl") return cur;
      cur = tree.parent[*cur];
    }
    return std::nullopt;
  };
  for (const Edge& e : f.graph.edges) {
    if (e.type == EdgeType::kAst || e.type == EdgeType::kNextToken || e.type == EdgeType::kField ||
        e.type == EdgeType::kLastFieldLex) {
      continue;
    }
    CHECK(owner(e.src) == owner(e.dst));
  }
}

TEST_CASE("reverse edges") {
  CodeGraph one;
  one.add_node({});
  one.add_node({});
  one.add_edge(0, 1, EdgeType::kAst);
  add_reverse_edges(one);
  REQUIRE(one.edges.size() == 2);
  CHECK(one.has_edge(1, 0, EdgeType::kReverseAst));
  CHECK_THROWS_AS(add_reverse_edges(one), std::logic_error);

  CodeGraph empty;
  add_reverse_edges(empty);
  CHECK(empty.edges.empty());

  CodeGraph mixed;
  for (int i = 0; i < 6; ++i) mixed.add_node({});
  Rng rng(17);
  std::map<EdgeType, int> before;
  for (int i = 0; i < 17; ++i) {
    const auto t = static_cast<EdgeType>(rng.below(kForwardEdgeTypes));
    mixed.add_edge(rng.below(6), rng.below(6), t);
    ++before[t];
  }
  add_reverse_edges(mixed);
  CHECK(mixed.edges.size() == 34);
  std::map<EdgeType, int> after;
  for (const Edge& e : mixed.edges) ++after[e.type];
  for (auto [t, n] : before) {
    CHECK(after[t] == n);
    CHECK(after[reverse_of(t)] == n);
  }
}

TEST_CASE("reversal is a bijection on an augmented graph") {
  auto f = build("class T { int w; int a(int p) { int q = p; if (q > w) { q = w; } return q; } }");
  augment(f.graph);
  std::multiset<Edge> forward(f.graph.edges.begin(), f.graph.edges.end());
  add_reverse_edges(f.graph);
  CHECK(f.graph.edges.size() == 2 * forward.size());
  std::multiset<Edge> mapped;
  for (const Edge& e : f.graph.edges) {
    if (is_reverse(e.type)) mapped.insert({e.dst, e.src, reverse_of(e.type)});
  }
  CHECK(mapped == forward);
}

namespace {

void compare_with_oracle(const std::string& src) {
  INFO(src);
  auto f = build(src);
  compute_last_accesses(f.graph);
  const auto expected = testing::DataflowOracle(f.ast).run();
  CHECK(!expected.last_write.empty());
  CHECK(edges_of(f.graph, EdgeType::kLastRead) == expected.last_read);
  CHECK(edges_of(f.graph, EdgeType::kLastWrite) == expected.last_write);
}

}  // namespace

TEST_CASE("dataflow fixed point matches bounded path enumeration") {
  for (const auto& src : testing::dataflow_fixtures(40)) compare_with_oracle(src);
}
