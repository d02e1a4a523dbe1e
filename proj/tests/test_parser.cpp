#include <doctest.h>

#include <fstream>
#include <regex>
#include <sstream>

#include "gsc/code_graph.hpp"

using namespace gsc;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Independent token counter: strip comments, then count regex matches.
std::size_t regex_token_count(const std::string& source) {
  const std::regex comments(R"(//[^\n]*|/\*[\s\S]*?\*/)");
  const std::string stripped = std::regex_replace(source, comments, " ");
  const std::regex token(
      R"("(?:[^"\\]|\\.)*"|'(?:[^'\\]|\\.)*'|[A-Za-z_$][A-Za-z0-9_$]*|[0-9]+(?:\.[0-9]+)?[lLdf]?|==|!=|<=|>=|&&|\|\||\+=|-=|\*=|/=|%=|\+\+|--|[-+*/%<>=!(){};,.])");
  return static_cast<std::size_t>(
      std::distance(std::sregex_iterator(stripped.begin(), stripped.end(), token), std::sregex_iterator()));
}

const AstNode* find_named(const Ast& ast, std::string_view construct, std::string_view name, int nth = 0) {
  for (const auto& n : ast.nodes) {
    if (n.construct == construct && n.name && *n.name == name && nth-- == 0) return &n;
  }
  return nullptr;
}

}  // namespace

TEST_CASE("tokenize a minimal statement") {
  auto toks = tokenize("int x = 1;");
  REQUIRE(toks.size() == 5);
  CHECK(toks[0].kind == TokenKind::kKeyword);
  CHECK(toks[0].text == "int");
  CHECK(toks[1].kind == TokenKind::kIdentifier);
  CHECK(toks[2].kind == TokenKind::kOperator);
  CHECK(toks[3].kind == TokenKind::kLiteral);
  CHECK(toks[4].kind == TokenKind::kPunctuation);
  CHECK(toks[4].column == 10);
}

TEST_CASE("line comments are dropped") {
  auto toks = tokenize("x = y + z; // c");
  CHECK(toks.size() == 6);
}

TEST_CASE("lexical errors carry a location") {
  try {
    tokenize("int a;\n  String s = \"open");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 14);
  }
  CHECK_THROWS_AS(tokenize("a /* never closed"), ParseError);
  try {
    tokenize("a = b # c;");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 7);
  }
}

TEST_CASE("positions are 1-based and non-decreasing") {
  auto toks = tokenize(read_file(GSC_FIXTURE_DIR "/parser/hundred_lines.java"));
  CHECK(toks.front().line >= 1);
  for (std::size_t i = 1; i < toks.size(); ++i) {
    const bool ordered =
        toks[i].line > toks[i - 1].line || (toks[i].line == toks[i - 1].line && toks[i].column > toks[i - 1].column);
    CHECK(ordered);
  }
}

TEST_CASE("token count of the hundred-line fixture matches a regex counter") {
  const std::string src = read_file(GSC_FIXTURE_DIR "/parser/hundred_lines.java");
  CHECK(std::count(src.begin(), src.end(), '\n') == 100);
  CHECK(tokenize(src).size() == regex_token_count(src));
}

TEST_CASE("minimal program resolves a parameter") {
  Ast ast = parse_source("class A { int f(int n){ return n; } }");
  const AstNode& root = ast.at(ast.root);
  CHECK(root.construct == "CompilationUnit");
  REQUIRE(root.children.size() == 1);
  const AstNode& cls = ast.at(root.children[0]);
  CHECK(cls.construct == "ClassDecl");
  bool has_method = false;
  for (auto ch : cls.children) has_method |= ast.at(ch).construct == "MethodDecl";
  CHECK(has_method);
  const AstNode* use = find_named(ast, "NameUse", "n");
  const AstNode* param = find_named(ast, "ParamName", "n");
  REQUIRE(use);
  REQUIRE(param);
  CHECK(use->decl == param->id);
  CHECK(use->type_name == "int");
}

TEST_CASE("assignment shape for x = y + z") {
  Ast ast = parse_source("class A { int x; int y; int z; void m() { x = y + z; } }");
  const AstNode* assign = nullptr;
  for (const auto& n : ast.nodes) {
    if (n.construct == "Assign") assign = &n;
  }
  REQUIRE(assign);
  REQUIRE(assign->children.size() == 3);
  const AstNode& lhs = ast.at(assign->children[0]);
  CHECK(lhs.construct == "NameUse");
  CHECK(lhs.name == "x");
  const AstNode& rhs = ast.at(assign->children[2]);
  CHECK(rhs.construct == "BinaryOp");
  REQUIRE(rhs.children.size() == 3);
  CHECK(ast.at(rhs.children[0]).name == "y");
  CHECK(ast.at(rhs.children[1]).construct == "Op:+");
  CHECK(ast.at(rhs.children[2]).name == "z");
}

TEST_CASE("inner declarations shadow outer ones") {
  Ast ast = parse_source(
      "class A { int x; void m() { x = 1; { int x = 2; x = x + 1; } x = 3; } }");
  const AstNode* field = find_named(ast, "FieldName", "x");
  const AstNode* local = find_named(ast, "LocalName", "x");
  REQUIRE(field);
  REQUIRE(local);
  std::vector<std::optional<NodeId>> decls;
  for (const auto& n : ast.nodes) {
    if (n.construct == "NameUse" && n.name == "x") decls.push_back(n.decl);
  }
  REQUIRE(decls.size() == 4);
  CHECK(decls[0] == field->id);
  CHECK(decls[1] == local->id);
  CHECK(decls[2] == local->id);
  CHECK(decls[3] == field->id);
}

TEST_CASE("field access resolution through this, class names and typed qualifiers") {
  Ast ast = parse_source(
      "class B { int w; static int k; }\n"
      "class A { B other; int w;\n"
      "  int m() { this.w = other.w + B.k; return q; } }");
  const AstNode* b_w = find_named(ast, "FieldName", "w", 0);
  const AstNode* a_w = find_named(ast, "FieldName", "w", 1);
  const AstNode* b_k = find_named(ast, "FieldName", "k");
  const AstNode* this_w = find_named(ast, "MemberName", "w", 0);
  const AstNode* other_w = find_named(ast, "MemberName", "w", 1);
  const AstNode* k_use = find_named(ast, "MemberName", "k");
  const AstNode* q = find_named(ast, "NameUse", "q");
  REQUIRE((b_w && a_w && b_k && this_w && other_w && k_use && q));
  CHECK(this_w->decl == a_w->id);
  CHECK(other_w->decl == b_w->id);
  CHECK(k_use->decl == b_k->id);
  CHECK(q->unresolved);
  CHECK(!q->decl);
}

TEST_CASE("syntax errors report the expected set and location") {
  try {
    parse_source("class A { void m() { int x = ; } }");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
    CHECK(e.column() == 30);
    CHECK(!e.expected().empty());
  }
  try {
    parse_source("class A { void m() { x = 1 } }");
    FAIL("expected error");
  } catch (const ParseError& e) {
    CHECK(e.expected() == std::vector<std::string>{";"});
  }
  CHECK_THROWS_AS(parse_source("class A { void m() { 1 = x; } }"), ParseError);
  CHECK_THROWS_AS(parse_source("class A {"), ParseError);
}

TEST_CASE("leaf tokens reproduce the token stream") {
  const std::string src = read_file(GSC_FIXTURE_DIR "/parser/hundred_lines.java");
  Ast ast = parse_source(src);
  auto leaves = ast.leaves();
  REQUIRE(leaves.size() == ast.tokens.size());
  for (std::size_t i = 0; i < leaves.size(); ++i) CHECK(ast.tokens[*ast.at(leaves[i]).token].text == ast.tokens[i].text);
}

TEST_CASE("ast_to_graph edge counts") {
  SUBCASE("three children give three AST and two NEXT_TOKEN edges") {
    Ast ast = parse_source("class A { void m() { x = y + z; } }");
    CodeGraph g = ast_to_graph(ast);
    for (const auto& n : ast.nodes) {
      if (n.construct != "BinaryOp") continue;
      std::size_t ast_edges = 0, next_edges = 0;
      for (const Edge& e : g.edges) {
        if (e.type == EdgeType::kAst && e.src == n.id) ++ast_edges;
        if (e.type == EdgeType::kNextToken && std::count(n.children.begin(), n.children.end(), e.src)) ++next_edges;
      }
      CHECK(ast_edges == 3);
      CHECK(next_edges == 2);
    }
  }
  SUBCASE("single node has no edges") {
    Ast ast;
    AstNode only;
    only.construct = "CompilationUnit";
    ast.nodes.push_back(only);
    CodeGraph g = ast_to_graph(ast);
    CHECK(g.nodes.size() == 1);
    CHECK(g.edges.empty());
  }
  SUBCASE("hand-enumerated minimal class") {
    // CompilationUnit, ClassDecl, class, A, {, FieldDecl, int, f, ;, }
    // AST edges: 9. NEXT_TOKEN: ClassDecl has 5 children (4), FieldDecl 3 (2).
    CodeGraph g = ast_to_graph(parse_source("class A { int f; }"));
    CHECK(g.nodes.size() == 10);
    CHECK(g.count_edges(EdgeType::kAst) == 9);
    CHECK(g.count_edges(EdgeType::kNextToken) == 6);
    CHECK(g.edges.size() == 15);
    std::size_t variables = 0;
    for (const auto& n : g.nodes) variables += n.kind == NodeKind::kVariable;
    CHECK(variables == 2);
  }
}

TEST_CASE("ast edges form a tree rooted at the compilation unit") {
  CodeGraph g = ast_to_graph(parse_source(read_file(GSC_FIXTURE_DIR "/parser/hundred_lines.java")));
  CHECK(g.count_edges(EdgeType::kAst) == g.nodes.size() - 1);
  SyntaxTree tree(g);
  REQUIRE(tree.roots.size() == 1);
  CHECK(tree.preorder(tree.roots[0]).size() == g.nodes.size());
}

TEST_CASE("every variable node is resolved or flagged") {
  Ast ast = parse_source(read_file(GSC_FIXTURE_DIR "/parser/hundred_lines.java"));
  std::size_t variables = 0;
  for (const auto& n : ast.nodes) {
    if (!n.variable) continue;
    ++variables;
    CHECK((n.decl.has_value() != n.unresolved));
  }
  CHECK(variables > 50);
}

TEST_CASE("graph json round trip") {
  CodeGraph g = ast_to_graph(parse_source(read_file(GSC_FIXTURE_DIR "/parser/hundred_lines.java")), "inv.java");
  const std::string line = graph_to_json(g).dump();
  CHECK(line.find('\n') == std::string::npos);
  CodeGraph back = graph_from_json(nlohmann::json::parse(line));
  CHECK(back.file == "inv.java");
  CHECK(back.nodes == g.nodes);
  CHECK(back.edges == g.edges);
  CHECK_THROWS(parse_edge_type("SIDEWAYS"));
}
