#include "gsc/augment.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <unordered_map>

namespace gsc {

namespace c = construct;

namespace {

bool is_named_node(const GraphNode& n) { return n.kind == NodeKind::kVariable || n.kind == NodeKind::kSpecial; }

bool is_increment(const GraphNode& n) { return n.construct == "Op:++" || n.construct == "Op:--"; }

bool is_method(const GraphNode& n) { return n.construct == c::kMethodDecl || n.construct == c::kConstructorDecl; }

}  // namespace

std::optional<std::size_t> tracked_variable(const CodeGraph& graph, std::size_t node) {
  const GraphNode& n = graph.nodes[node];
  if (!is_named_node(n) || !n.decl || *n.decl >= graph.nodes.size()) return std::nullopt;
  if (!is_value_construct(n.construct)) return std::nullopt;
  if (!is_data_declaration(graph.nodes[*n.decl].construct)) return std::nullopt;
  return n.decl;
}

namespace {

class AccessCollector {
 public:
  AccessCollector(const CodeGraph& g, const SyntaxTree& t) : g_(g), t_(t) {}

  void walk(std::size_t id) {
    const GraphNode& n = g_.nodes[id];
    const auto& ch = t_.children[id];
    if (n.construct == c::kAssign && ch.size() == 3) {
      const bool compound = g_.nodes[ch[1]].construct != "Op:=";
      const std::size_t target = qualify(ch[0]);
      walk(ch[2]);
      emit(target, compound, true);
      return;
    }
    if ((n.construct == c::kUnaryOp && ch.size() == 2 && is_increment(g_.nodes[ch[0]])) ||
        (n.construct == c::kPostfixOp && ch.size() == 2 && is_increment(g_.nodes[ch[1]]))) {
      const std::size_t operand = n.construct == c::kUnaryOp ? ch[1] : ch[0];
      const std::size_t target = qualify(operand);
      if (target == operand && !t_.children[operand].empty()) {
        walk(operand);
      } else {
        emit(target, true, true);
      }
      return;
    }
    if (n.construct == c::kVarDecl || n.construct == c::kFieldDecl) {
      std::optional<std::size_t> target;
      bool initialized = false;
      for (std::size_t k : ch) {
        const std::string& kc = g_.nodes[k].construct;
        if (kc == c::kLocalName || kc == c::kFieldName) {
          target = k;
        } else if (kc == "Op:=") {
          initialized = true;
        } else if (initialized) {
          walk(k);
        }
      }
      if (target && initialized) emit(*target, false, true);
      return;
    }
    if (n.construct == c::kParamName) {
      emit(id, false, true);
      return;
    }
    if (ch.empty()) {
      emit(id, true, false);
      return;
    }
    for (std::size_t k : ch) walk(k);
  }

  std::vector<Access> out;

 private:
  const CodeGraph& g_;
  const SyntaxTree& t_;

  // Walks the qualifier of a field access and returns the node that is
  // assigned (the member leaf, or the operand itself).
  std::size_t qualify(std::size_t operand) {
    if (g_.nodes[operand].construct == c::kFieldAccess) {
      const auto& fc = t_.children[operand];
      walk(fc.front());
      return fc.back();
    }
    return operand;
  }

  void emit(std::size_t node, bool read, bool write) {
    if (auto var = tracked_variable(g_, node)) out.push_back({node, *var, read, write});
  }
};

}  // namespace

std::vector<Access> collect_accesses(const CodeGraph& graph, const SyntaxTree& tree, std::size_t node) {
  AccessCollector collector(graph, tree);
  collector.walk(node);
  return std::move(collector.out);
}

std::vector<std::size_t> method_nodes(const CodeGraph& graph) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < graph.nodes.size(); ++i) {
    if (is_method(graph.nodes[i])) out.push_back(i);
  }
  return out;
}

namespace {

class CfgBuilder {
 public:
  CfgBuilder(const CodeGraph& g, const SyntaxTree& t, ControlFlowGraph& cfg) : g_(g), t_(t), cfg_(cfg) {}

  std::size_t new_block(std::vector<std::size_t> items) {
    cfg_.blocks.push_back(std::move(items));
    cfg_.successors.emplace_back();
    return cfg_.blocks.size() - 1;
  }

  void connect(const std::set<std::size_t>& preds, std::size_t block) {
    for (std::size_t p : preds) cfg_.successors[p].insert(block);
  }

  // Returns the blocks that fall through to whatever follows `stmt`.
  std::set<std::size_t> build(std::size_t stmt, std::set<std::size_t> preds) {
    const std::string& label = g_.nodes[stmt].construct;
    const auto& ch = t_.children[stmt];
    if (label == c::kBlock) {
      for (std::size_t k : ch) {
        if (g_.nodes[k].construct.rfind("Punct:", 0) == 0) continue;
        preds = build(k, std::move(preds));
      }
      return preds;
    }
    if (label == c::kIf) {
      const std::size_t cond = single(ch[2], preds);
      std::set<std::size_t> out = build(ch[4], {cond});
      if (ch.size() > 6) {
        auto other = build(ch[6], {cond});
        out.insert(other.begin(), other.end());
      } else {
        out.insert(cond);
      }
      return out;
    }
    if (label == c::kWhile) {
      const std::size_t cond = single(ch[2], preds);
      connect(build(ch[4], {cond}), cond);
      return {cond};
    }
    if (label == c::kFor) {
      std::vector<std::size_t> parts[3];
      int section = 0;
      for (std::size_t i = 2; i + 1 < ch.size(); ++i) {
        const std::string& kc = g_.nodes[ch[i]].construct;
        if (kc == "Punct:;") {
          ++section;
        } else if (kc != "Punct:," && kc != "Punct:)") {
          parts[section].push_back(ch[i]);
        }
      }
      if (!parts[0].empty()) preds = {single(parts[0].front(), preds)};
      const std::size_t cond = new_block(parts[1]);
      connect(preds, cond);
      const std::size_t update = new_block(parts[2]);
      connect(build(ch.back(), {cond}), update);
      connect({update}, cond);
      return {cond};
    }
    if (label == c::kReturn) {
      const std::size_t b = single(stmt, preds);
      cfg_.successors[b].insert(cfg_.exit);
      return {};
    }
    return {single(stmt, preds)};
  }

 private:
  const CodeGraph& g_;
  const SyntaxTree& t_;
  ControlFlowGraph& cfg_;

  std::size_t single(std::size_t item, const std::set<std::size_t>& preds) {
    const std::size_t b = new_block({item});
    connect(preds, b);
    return b;
  }
};

using VarState = std::map<std::size_t, std::pair<std::set<std::size_t>, std::set<std::size_t>>>;

void join_into(VarState& into, const VarState& from) {
  for (const auto& [var, sets] : from) {
    auto& dst = into[var];
    dst.first.insert(sets.first.begin(), sets.first.end());
    dst.second.insert(sets.second.begin(), sets.second.end());
  }
}

}  // namespace

ControlFlowGraph build_cfg(const CodeGraph& graph, const SyntaxTree& tree, std::size_t method) {
  ControlFlowGraph cfg;
  cfg.method = method;
  CfgBuilder builder(graph, tree, cfg);
  std::vector<std::size_t> params;
  std::optional<std::size_t> body;
  for (std::size_t k : tree.children[method]) {
    if (graph.nodes[k].construct == c::kParameter) params.push_back(k);
    if (graph.nodes[k].construct == c::kBlock) body = k;
  }
  cfg.entry = builder.new_block(params);
  cfg.exit = builder.new_block({});
  if (!body) {
    cfg.successors[cfg.entry].insert(cfg.exit);
    return cfg;
  }
  builder.connect(builder.build(*body, {cfg.entry}), cfg.exit);
  return cfg;
}

void compute_last_accesses(CodeGraph& graph) {
  const SyntaxTree tree(graph);
  std::set<Edge> produced;
  for (std::size_t method : method_nodes(graph)) {
    const ControlFlowGraph cfg = build_cfg(graph, tree, method);
    const std::size_t nb = cfg.blocks.size();
    std::vector<std::vector<Access>> accesses(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t item : cfg.blocks[b]) {
        auto a = collect_accesses(graph, tree, item);
        accesses[b].insert(accesses[b].end(), a.begin(), a.end());
      }
    }
    std::vector<std::vector<std::size_t>> preds(nb);
    for (std::size_t b = 0; b < nb; ++b) {
      for (std::size_t s : cfg.successors[b]) preds[s].push_back(b);
    }
    auto transfer = [&](std::size_t b, VarState state, bool emit) {
      for (const Access& a : accesses[b]) {
        auto& sets = state[a.variable];
        if (emit) {
          for (std::size_t r : sets.first) {
            if (r != a.node) produced.insert({a.node, r, EdgeType::kLastRead});
          }
          for (std::size_t w : sets.second) {
            if (w != a.node) produced.insert({a.node, w, EdgeType::kLastWrite});
          }
        }
        if (a.read) sets.first = {a.node};
        if (a.write) sets.second = {a.node};
      }
      return state;
    };

    std::vector<VarState> in(nb), out(nb);
    std::deque<std::size_t> work;
    std::vector<bool> queued(nb, true);
    for (std::size_t b = 0; b < nb; ++b) work.push_back(b);
    while (!work.empty()) {
      const std::size_t b = work.front();
      work.pop_front();
      queued[b] = false;
      VarState state;
      for (std::size_t p : preds[b]) join_into(state, out[p]);
      in[b] = state;
      VarState next = transfer(b, std::move(state), false);
      if (next != out[b]) {
        out[b] = std::move(next);
        for (std::size_t s : cfg.successors[b]) {
          if (!queued[s]) {
            queued[s] = true;
            work.push_back(s);
          }
        }
      }
    }
    for (std::size_t b = 0; b < nb; ++b) transfer(b, in[b], true);
  }
  for (const Edge& e : produced) graph.edges.push_back(e);
}

void add_computed_from(CodeGraph& graph) {
  const SyntaxTree tree(graph);
  auto value_occurrence = [&](std::size_t id) {
    const GraphNode& n = graph.nodes[id];
    if (!is_named_node(n) || !is_value_construct(n.construct)) return false;
    return !(n.decl && graph.nodes[*n.decl].construct == c::kClassName);
  };
  auto link = [&](std::size_t target, std::size_t rhs) {
    if (!is_named_node(graph.nodes[target])) return;
    for (std::size_t id : tree.preorder(rhs)) {
      if (value_occurrence(id)) graph.edges.push_back({target, id, EdgeType::kComputedFrom});
    }
  };
  const std::size_t n = graph.nodes.size();
  for (std::size_t id = 0; id < n; ++id) {
    const std::string& label = graph.nodes[id].construct;
    const auto& ch = tree.children[id];
    if (label == c::kAssign && ch.size() == 3) {
      const std::size_t lhs = ch[0];
      const std::size_t target = graph.nodes[lhs].construct == c::kFieldAccess ? tree.children[lhs].back() : lhs;
      link(target, ch[2]);
    } else if (label == c::kVarDecl || label == c::kFieldDecl) {
      std::optional<std::size_t> target;
      bool initialized = false;
      for (std::size_t k : ch) {
        const std::string& kc = graph.nodes[k].construct;
        if (kc == c::kLocalName || kc == c::kFieldName) {
          target = k;
        } else if (kc == "Op:=") {
          initialized = true;
        } else if (initialized && target) {
          link(*target, k);
        }
      }
    }
  }
}

void add_returns_to(CodeGraph& graph) {
  const SyntaxTree tree(graph);
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    if (graph.nodes[id].construct != c::kReturn || tree.children[id].size() != 3) continue;
    std::optional<std::size_t> method = tree.parent[id];
    while (method && !is_method(graph.nodes[*method])) method = tree.parent[*method];
    if (!method || graph.nodes[*method].construct != c::kMethodDecl) continue;
    const auto& mc = tree.children[*method];
    for (std::size_t i = 1; i < mc.size(); ++i) {
      if (graph.nodes[mc[i]].construct == c::kMethodName) {
        graph.edges.push_back({tree.children[id][1], mc[i - 1], EdgeType::kReturnsTo});
        break;
      }
    }
  }
}

void add_lexical_edges(CodeGraph& graph) {
  const SyntaxTree tree(graph);
  std::vector<Edge> produced;

  // Scope uses: one group per method body, plus one per class for the
  // occurrences outside any method.
  std::vector<std::size_t> groups;
  for (std::size_t id = 0; id < graph.nodes.size(); ++id) {
    const std::string& label = graph.nodes[id].construct;
    if (is_method(graph.nodes[id]) || label == c::kClassDecl) groups.push_back(id);
  }
  for (std::size_t root : tree.roots) {
    if (graph.nodes[root].construct != c::kClassDecl && !is_method(graph.nodes[root])) groups.push_back(root);
  }
  for (std::size_t group : groups) {
    std::unordered_map<std::size_t, std::size_t> last;
    std::vector<std::size_t> stack{group};
    while (!stack.empty()) {
      const std::size_t id = stack.back();
      stack.pop_back();
      if (id != group && is_method(graph.nodes[id])) continue;
      const GraphNode& n = graph.nodes[id];
      if (is_named_node(n) && n.decl) {
        auto it = last.find(*n.decl);
        if (it != last.end()) produced.push_back({id, it->second, EdgeType::kLastScopeUse});
        last[*n.decl] = id;
      }
      const auto& ch = tree.children[id];
      for (auto r = ch.rbegin(); r != ch.rend(); ++r) stack.push_back(*r);
    }
  }

  // Field accesses: file-wide textual order, regardless of scope.
  std::unordered_map<std::size_t, std::size_t> last_field;
  for (std::size_t root : tree.roots) {
    for (std::size_t id : tree.preorder(root)) {
      const GraphNode& n = graph.nodes[id];
      if (!is_named_node(n) || n.construct != c::kMemberName || !n.decl) continue;
      const std::size_t decl = *n.decl;
      if (graph.nodes[decl].construct != c::kFieldName) continue;
      auto it = last_field.find(decl);
      produced.push_back({id, it == last_field.end() ? decl : it->second, EdgeType::kLastFieldLex});
      last_field[decl] = id;
      produced.push_back({id, decl, EdgeType::kField});
    }
  }
  graph.edges.insert(graph.edges.end(), produced.begin(), produced.end());
}

void augment(CodeGraph& graph) {
  add_computed_from(graph);
  compute_last_accesses(graph);
  add_returns_to(graph);
  add_lexical_edges(graph);
}

void add_reverse_edges(CodeGraph& graph) {
  if (graph.has_reverse_edges()) throw std::logic_error("reverse edges already added");
  const std::size_t n = graph.edges.size();
  graph.edges.reserve(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    const Edge e = graph.edges[i];
    graph.edges.push_back({e.dst, e.src, reverse_of(e.type)});
  }
}

}  // namespace gsc
