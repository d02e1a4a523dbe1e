#pragma once

#include <cstddef>
#include <set>
#include <vector>

#include "gsc/code_graph.hpp"

namespace gsc {

// Per-method control flow. Each block lists the node ids whose accesses are
// evaluated in order: the method's parameters in the entry block, then
// statements, branch conditions, for-initializers and for-updates.
struct ControlFlowGraph {
  std::size_t method = 0;
  std::vector<std::vector<std::size_t>> blocks;
  std::vector<std::set<std::size_t>> successors;
  std::size_t entry = 0;
  std::size_t exit = 0;
};

struct Access {
  std::size_t node = 0;
  std::size_t variable = 0;  // declaration node id
  bool read = false;
  bool write = false;
};

// Declaration id of a tracked data variable occurrence, if `node` is one.
std::optional<std::size_t> tracked_variable(const CodeGraph& graph, std::size_t node);

// Accesses of `node` and its subtree in evaluation order: qualifiers, then the
// right-hand side, then the assigned variable.
std::vector<Access> collect_accesses(const CodeGraph& graph, const SyntaxTree& tree, std::size_t node);

std::vector<std::size_t> method_nodes(const CodeGraph& graph);
ControlFlowGraph build_cfg(const CodeGraph& graph, const SyntaxTree& tree, std::size_t method);

void add_computed_from(CodeGraph& graph);
void compute_last_accesses(CodeGraph& graph);
void add_returns_to(CodeGraph& graph);
void add_lexical_edges(CodeGraph& graph);
// Adds every forward semantic edge type.
void augment(CodeGraph& graph);

// Adds (v, u, reverse_t) for every edge (u, v, t). Throws std::logic_error if
// the graph already holds reversed edges.
void add_reverse_edges(CodeGraph& graph);

}  // namespace gsc
