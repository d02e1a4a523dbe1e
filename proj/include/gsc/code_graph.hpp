#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "gsc/ast.hpp"

namespace gsc {

enum class NodeKind { kSyntax, kVariable, kCache, kSpecial };

std::string_view node_kind_name(NodeKind kind);
NodeKind parse_node_kind(std::string_view text);

enum class EdgeType : std::uint8_t {
  kAst,
  kNextToken,
  kComputedFrom,
  kLastRead,
  kLastWrite,
  kReturnsTo,
  kLastScopeUse,
  kLastFieldLex,
  kField,
  kWordUse,
  kReverseAst,
  kReverseNextToken,
  kReverseComputedFrom,
  kReverseLastRead,
  kReverseLastWrite,
  kReverseReturnsTo,
  kReverseLastScopeUse,
  kReverseLastFieldLex,
  kReverseField,
  kReverseWordUse,
};

inline constexpr std::size_t kForwardEdgeTypes = 10;
inline constexpr std::size_t kEdgeTypeCount = 20;

std::string_view edge_type_name(EdgeType type);
EdgeType parse_edge_type(std::string_view text);
bool is_reverse(EdgeType type);
EdgeType reverse_of(EdgeType type);
const std::array<EdgeType, kEdgeTypeCount>& all_edge_types();

inline constexpr std::string_view kCacheNodeType = "CACHE_NODE";
inline constexpr std::string_view kFillInTheBlank = "<FILL-IN-THE-BLANK>";
inline constexpr std::string_view kNameMe = "<NAME-ME>";

struct GraphNode {
  NodeKind kind = NodeKind::kSyntax;
  // For special nodes the construct keeps the label of the node they replace.
  std::string construct;
  std::optional<std::string> name;
  std::optional<std::string> type;
  std::optional<std::size_t> decl;
  int line = 0;

  bool operator==(const GraphNode&) const = default;
};

struct Edge {
  std::size_t src = 0;
  std::size_t dst = 0;
  EdgeType type = EdgeType::kAst;

  bool operator==(const Edge&) const = default;
  auto operator<=>(const Edge&) const = default;
};

class CodeGraph {
 public:
  std::string file;
  std::vector<GraphNode> nodes;  // node id == index
  std::vector<Edge> edges;

  std::size_t add_node(GraphNode node);
  void add_edge(std::size_t src, std::size_t dst, EdgeType type);
  std::size_t count_edges(EdgeType type) const;
  bool has_edge(std::size_t src, std::size_t dst, EdgeType type) const;
  bool has_reverse_edges() const;
};

// Tree view of the AST edges of a graph, preserving child order.
struct SyntaxTree {
  std::vector<std::vector<std::size_t>> children;
  std::vector<std::optional<std::size_t>> parent;
  std::vector<std::size_t> roots;

  explicit SyntaxTree(const CodeGraph& graph);
  // Preorder sequence under `root`.
  std::vector<std::size_t> preorder(std::size_t root) const;
};

CodeGraph ast_to_graph(const Ast& ast, std::string file = {});

nlohmann::json graph_to_json(const CodeGraph& graph);
CodeGraph graph_from_json(const nlohmann::json& record);

}  // namespace gsc
