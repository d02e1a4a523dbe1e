#include "gsc/code_graph.hpp"

#include <algorithm>
#include <stdexcept>

namespace gsc {

std::string_view node_kind_name(NodeKind kind) {
  switch (kind) {
    case NodeKind::kSyntax: return "syntax";
    case NodeKind::kVariable: return "variable";
    case NodeKind::kCache: return "cache";
    case NodeKind::kSpecial: return "special";
  }
  return "syntax";
}

NodeKind parse_node_kind(std::string_view text) {
  for (NodeKind k : {NodeKind::kSyntax, NodeKind::kVariable, NodeKind::kCache, NodeKind::kSpecial}) {
    if (node_kind_name(k) == text) return k;
  }
  throw std::invalid_argument("unknown node kind: " + std::string(text));
}

namespace {
constexpr std::array<std::string_view, kEdgeTypeCount> kEdgeNames{
    "AST",
    "NEXT_TOKEN",
    "COMPUTED_FROM",
    "LAST_READ",
    "LAST_WRITE",
    "RETURNS_TO",
    "LAST_SCOPE_USE",
    "LAST_FIELD_LEX",
    "FIELD",
    "WORD_USE",
    "reverse_AST",
    "reverse_NEXT_TOKEN",
    "reverse_COMPUTED_FROM",
    "reverse_LAST_READ",
    "reverse_LAST_WRITE",
    "reverse_RETURNS_TO",
    "reverse_LAST_SCOPE_USE",
    "reverse_LAST_FIELD_LEX",
    "reverse_FIELD",
    "reverse_WORD_USE",
};
}  // namespace

std::string_view edge_type_name(EdgeType type) { return kEdgeNames.at(static_cast<std::size_t>(type)); }

EdgeType parse_edge_type(std::string_view text) {
  for (std::size_t i = 0; i < kEdgeNames.size(); ++i) {
    if (kEdgeNames[i] == text) return static_cast<EdgeType>(i);
  }
  throw std::invalid_argument("unknown edge type: " + std::string(text));
}

bool is_reverse(EdgeType type) { return static_cast<std::size_t>(type) >= kForwardEdgeTypes; }

EdgeType reverse_of(EdgeType type) {
  const auto i = static_cast<std::size_t>(type);
  return static_cast<EdgeType>(i < kForwardEdgeTypes ? i + kForwardEdgeTypes : i - kForwardEdgeTypes);
}

const std::array<EdgeType, kEdgeTypeCount>& all_edge_types() {
  static const std::array<EdgeType, kEdgeTypeCount> types = [] {
    std::array<EdgeType, kEdgeTypeCount> t{};
    for (std::size_t i = 0; i < kEdgeTypeCount; ++i) t[i] = static_cast<EdgeType>(i);
    return t;
  }();
  return types;
}

std::size_t CodeGraph::add_node(GraphNode node) {
  nodes.push_back(std::move(node));
  return nodes.size() - 1;
}

void CodeGraph::add_edge(std::size_t src, std::size_t dst, EdgeType type) {
  if (src >= nodes.size() || dst >= nodes.size()) throw std::out_of_range("edge endpoint out of range");
  edges.push_back({src, dst, type});
}

std::size_t CodeGraph::count_edges(EdgeType type) const {
  return static_cast<std::size_t>(std::count_if(edges.begin(), edges.end(), [&](const Edge& e) { return e.type == type; }));
}

bool CodeGraph::has_edge(std::size_t src, std::size_t dst, EdgeType type) const {
  return std::find(edges.begin(), edges.end(), Edge{src, dst, type}) != edges.end();
}

bool CodeGraph::has_reverse_edges() const {
  return std::any_of(edges.begin(), edges.end(), [](const Edge& e) { return is_reverse(e.type); });
}

SyntaxTree::SyntaxTree(const CodeGraph& graph) : children(graph.nodes.size()), parent(graph.nodes.size()) {
  for (const Edge& e : graph.edges) {
    if (e.type != EdgeType::kAst) continue;
    children[e.src].push_back(e.dst);
    parent[e.dst] = e.src;
  }
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    if (!parent[i] && graph.nodes[i].kind != NodeKind::kCache) roots.push_back(i);
  }
}

std::vector<std::size_t> SyntaxTree::preorder(std::size_t root) const {
  std::vector<std::size_t> out;
  std::vector<std::size_t> stack{root};
  while (!stack.empty()) {
    const std::size_t id = stack.back();
    stack.pop_back();
    out.push_back(id);
    for (auto it = children[id].rbegin(); it != children[id].rend(); ++it) stack.push_back(*it);
  }
  return out;
}

CodeGraph ast_to_graph(const Ast& ast, std::string file) {
  CodeGraph g;
  g.file = std::move(file);
  g.nodes.reserve(ast.nodes.size());
  for (const AstNode& n : ast.nodes) {
    GraphNode gn;
    gn.kind = n.variable ? NodeKind::kVariable : NodeKind::kSyntax;
    gn.construct = n.construct;
    if (n.variable) {
      gn.name = n.name;
      gn.type = n.type_name;
      gn.decl = n.decl;
    }
    gn.line = n.line;
    g.nodes.push_back(std::move(gn));
  }
  for (const AstNode& n : ast.nodes) {
    for (std::size_t ch : n.children) g.edges.push_back({n.id, ch, EdgeType::kAst});
    for (std::size_t i = 1; i < n.children.size(); ++i) {
      g.edges.push_back({n.children[i - 1], n.children[i], EdgeType::kNextToken});
    }
  }
  return g;
}

nlohmann::json graph_to_json(const CodeGraph& graph) {
  nlohmann::json nodes = nlohmann::json::array();
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    const GraphNode& n = graph.nodes[i];
    nlohmann::json rec{{"id", i}, {"kind", node_kind_name(n.kind)}, {"construct", n.construct}};
    if (n.name) rec["name"] = *n.name;
    if (n.type) rec["type"] = *n.type;
    if (n.decl) rec["decl"] = *n.decl;
    if (n.line) rec["line"] = n.line;
    nodes.push_back(std::move(rec));
  }
  nlohmann::json edges = nlohmann::json::array();
  for (const Edge& e : graph.edges) edges.push_back({e.src, e.dst, edge_type_name(e.type)});
  return {{"file", graph.file}, {"nodes", std::move(nodes)}, {"edges", std::move(edges)}};
}

CodeGraph graph_from_json(const nlohmann::json& record) {
  CodeGraph g;
  g.file = record.value("file", "");
  const auto& nodes = record.at("nodes");
  g.nodes.resize(nodes.size());
  for (const auto& rec : nodes) {
    const std::size_t id = rec.at("id").get<std::size_t>();
    if (id >= g.nodes.size()) throw std::invalid_argument("node id out of range");
    GraphNode& n = g.nodes[id];
    n.kind = parse_node_kind(rec.at("kind").get<std::string>());
    n.construct = rec.at("construct").get<std::string>();
    if (rec.contains("name")) n.name = rec["name"].get<std::string>();
    if (rec.contains("type")) n.type = rec["type"].get<std::string>();
    if (rec.contains("decl")) n.decl = rec["decl"].get<std::size_t>();
    n.line = rec.value("line", 0);
  }
  for (const auto& e : record.at("edges")) {
    g.add_edge(e.at(0).get<std::size_t>(), e.at(1).get<std::size_t>(), parse_edge_type(e.at(2).get<std::string>()));
  }
  return g;
}

}  // namespace gsc
