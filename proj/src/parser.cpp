#include <algorithm>
#include <functional>
#include <map>
#include <unordered_map>

#include "gsc/ast.hpp"

namespace gsc {

namespace c = construct;

bool is_data_declaration(std::string_view label) {
  return label == c::kParamName || label == c::kLocalName || label == c::kFieldName;
}

bool is_value_construct(std::string_view label) {
  return label == c::kNameUse || label == c::kMemberName || is_data_declaration(label);
}

const std::vector<std::string>& construct_vocabulary() {
  static const std::vector<std::string> vocab = [] {
    std::vector<std::string> v;
    for (std::string_view s :
         {c::kCompilationUnit, c::kClassDecl,  c::kFieldDecl,     c::kMethodDecl,     c::kConstructorDecl,
          c::kParameter,       c::kBlock,      c::kVarDecl,       c::kIf,             c::kWhile,
          c::kFor,             c::kReturn,     c::kExprStmt,      c::kEmptyStmt,      c::kAssign,
          c::kBinaryOp,        c::kUnaryOp,    c::kPostfixOp,     c::kCall,           c::kFieldAccess,
          c::kNew,             c::kParen,      c::kThis,          c::kClassName,      c::kMethodName,
          c::kParamName,       c::kLocalName,  c::kFieldName,     c::kNameUse,        c::kMemberName,
          c::kCallName,        c::kTypeName,   c::kIntLiteral,    c::kFloatLiteral,   c::kStringLiteral,
          c::kCharLiteral,     c::kBoolLiteral, c::kNullLiteral}) {
      v.emplace_back(s);
    }
    for (const auto& k : keywords()) v.push_back("Keyword:" + k);
    for (const auto& o : operators()) v.push_back("Op:" + o);
    for (const auto& p : punctuation()) v.push_back("Punct:" + p);
    for (const char* t : {"int", "long", "double", "float", "boolean", "char", "byte", "short", "void"}) {
      v.push_back(std::string("TypeRef:") + t);
    }
    return v;
  }();
  return vocab;
}

std::vector<NodeId> Ast::leaves() const {
  std::vector<NodeId> out;
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    const auto& n = nodes[id];
    if (n.children.empty()) {
      if (n.token) out.push_back(id);
      continue;
    }
    for (auto it = n.children.rbegin(); it != n.children.rend(); ++it) stack.push_back(*it);
  }
  return out;
}

namespace {

std::string literal_construct(const std::string& text) {
  if (text == "true" || text == "false") return std::string(c::kBoolLiteral);
  if (text == "null") return std::string(c::kNullLiteral);
  if (text.front() == '"') return std::string(c::kStringLiteral);
  if (text.front() == '\'') return std::string(c::kCharLiteral);
  if (text.find('.') != std::string::npos || text.back() == 'd' || text.back() == 'f') {
    return std::string(c::kFloatLiteral);
  }
  return std::string(c::kIntLiteral);
}

bool is_modifier(const std::string& text) {
  return text == "public" || text == "private" || text == "protected" || text == "static" || text == "final";
}

bool is_assign_op(const std::string& text) {
  return text == "=" || text == "+=" || text == "-=" || text == "*=" || text == "/=" || text == "%=";
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  std::vector<AstNode> run(NodeId& root) {
    root = node(c::kCompilationUnit);
    while (!at_end()) add(root, class_decl());
    return std::move(nodes_);
  }

 private:
  const std::vector<Token>& toks_;
  std::size_t pos_ = 0;
  std::vector<AstNode> nodes_;
  std::string class_name_;

  bool at_end() const { return pos_ >= toks_.size(); }
  const Token* peek(std::size_t k = 0) const { return pos_ + k < toks_.size() ? &toks_[pos_ + k] : nullptr; }
  bool peek_is(std::string_view text, std::size_t k = 0) const {
    const Token* t = peek(k);
    return t && t->kind != TokenKind::kLiteral && t->text == text;
  }
  bool peek_kind(TokenKind kind, std::size_t k = 0) const {
    const Token* t = peek(k);
    return t && t->kind == kind;
  }

  [[noreturn]] void fail(std::vector<std::string> expected) const {
    std::string msg = "expected one of {";
    for (std::size_t i = 0; i < expected.size(); ++i) msg += (i ? ", " : "") + expected[i];
    msg += "}";
    if (at_end()) {
      const Token* last = toks_.empty() ? nullptr : &toks_.back();
      msg += ", found end of input";
      throw ParseError(msg, last ? last->line : 1, last ? last->column + static_cast<int>(last->text.size()) : 1,
                       std::move(expected));
    }
    msg += ", found '" + toks_[pos_].text + "'";
    throw ParseError(msg, toks_[pos_].line, toks_[pos_].column, std::move(expected));
  }

  NodeId node(std::string_view label) {
    AstNode n;
    n.id = nodes_.size();
    n.construct = std::string(label);
    nodes_.push_back(std::move(n));
    return nodes_.back().id;
  }
  void add(NodeId parent, NodeId child) { nodes_[parent].children.push_back(child); }

  // Consumes the current token as a leaf with the given label.
  NodeId leaf(std::string label, bool variable = false) {
    const NodeId id = node(label);
    nodes_[id].token = pos_;
    nodes_[id].line = toks_[pos_].line;
    if (variable) {
      nodes_[id].variable = true;
      nodes_[id].name = toks_[pos_].text;
    }
    ++pos_;
    return id;
  }
  NodeId token_leaf() {
    const Token& t = toks_[pos_];
    switch (t.kind) {
      case TokenKind::kKeyword: return leaf("Keyword:" + t.text);
      case TokenKind::kOperator: return leaf("Op:" + t.text);
      case TokenKind::kPunctuation: return leaf("Punct:" + t.text);
      case TokenKind::kLiteral: return leaf(literal_construct(t.text));
      case TokenKind::kIdentifier: break;
    }
    return leaf(std::string(c::kNameUse), true);
  }
  NodeId expect(std::string_view text) {
    if (!peek_is(text)) fail({std::string(text)});
    return token_leaf();
  }
  NodeId identifier(std::string_view label) {
    if (!peek_kind(TokenKind::kIdentifier)) fail({"identifier"});
    return leaf(std::string(label), true);
  }

  NodeId type_ref(bool allow_void) {
    const Token* t = peek();
    if (t && t->kind == TokenKind::kKeyword && (is_primitive_type(t->text) || (allow_void && t->text == "void"))) {
      return leaf("TypeRef:" + t->text);
    }
    if (t && t->kind == TokenKind::kIdentifier) return leaf(std::string(c::kTypeName), true);
    std::vector<std::string> expected{"primitive type", "identifier"};
    if (allow_void) expected.insert(expected.begin(), "void");
    fail(expected);
  }

  NodeId class_decl() {
    const NodeId n = node(c::kClassDecl);
    while (peek_kind(TokenKind::kKeyword) && is_modifier(peek()->text)) add(n, token_leaf());
    if (!peek_is("class")) fail({"class", "modifier"});
    add(n, token_leaf());
    if (!peek_kind(TokenKind::kIdentifier)) fail({"identifier"});
    class_name_ = peek()->text;
    add(n, identifier(c::kClassName));
    add(n, expect("{"));
    while (!peek_is("}")) {
      if (at_end()) fail({"}", "member declaration"});
      add(n, member());
    }
    add(n, expect("}"));
    return n;
  }

  NodeId member() {
    std::vector<NodeId> mods;
    while (peek_kind(TokenKind::kKeyword) && is_modifier(peek()->text)) mods.push_back(token_leaf());
    if (peek_kind(TokenKind::kIdentifier) && peek()->text == class_name_ && peek_is("(", 1)) {
      const NodeId n = node(c::kConstructorDecl);
      for (NodeId m : mods) add(n, m);
      add(n, identifier(c::kMethodName));
      parameters(n);
      add(n, block());
      return n;
    }
    const NodeId type = type_ref(true);
    if (!peek_kind(TokenKind::kIdentifier)) fail({"identifier"});
    if (peek_is("(", 1)) {
      const NodeId n = node(c::kMethodDecl);
      for (NodeId m : mods) add(n, m);
      add(n, type);
      add(n, identifier(c::kMethodName));
      parameters(n);
      add(n, block());
      return n;
    }
    if (nodes_[type].construct == "TypeRef:void") fail({"("});
    const NodeId n = node(c::kFieldDecl);
    for (NodeId m : mods) add(n, m);
    add(n, type);
    add(n, identifier(c::kFieldName));
    if (peek_is("=")) {
      add(n, token_leaf());
      add(n, expression());
    }
    if (!peek_is(";")) fail({"=", ";", "("});
    add(n, token_leaf());
    return n;
  }

  void parameters(NodeId owner) {
    add(owner, expect("("));
    if (!peek_is(")")) {
      while (true) {
        const NodeId p = node(c::kParameter);
        if (peek_is("final")) add(p, token_leaf());
        add(p, type_ref(false));
        add(p, identifier(c::kParamName));
        add(owner, p);
        if (peek_is(",")) {
          add(owner, token_leaf());
          continue;
        }
        if (!peek_is(")")) fail({",", ")"});
        break;
      }
    }
    add(owner, expect(")"));
  }

  NodeId block() {
    const NodeId n = node(c::kBlock);
    add(n, expect("{"));
    while (!peek_is("}")) {
      if (at_end()) fail({"}", "statement"});
      add(n, statement());
    }
    add(n, token_leaf());
    return n;
  }

  bool starts_local_decl() const {
    std::size_t k = 0;
    if (peek_is("final")) k = 1;
    const Token* t = peek(k);
    if (!t) return false;
    if (t->kind == TokenKind::kKeyword && is_primitive_type(t->text)) return true;
    return t->kind == TokenKind::kIdentifier && peek_kind(TokenKind::kIdentifier, k + 1);
  }

  // Declaration without the trailing ';' (shared by statements and for-init).
  NodeId local_decl() {
    const NodeId n = node(c::kVarDecl);
    if (peek_is("final")) add(n, token_leaf());
    add(n, type_ref(false));
    add(n, identifier(c::kLocalName));
    if (peek_is("=")) {
      add(n, token_leaf());
      add(n, expression());
    }
    return n;
  }

  NodeId statement() {
    if (at_end()) fail({"statement"});
    if (peek_is("{")) return block();
    if (peek_is("if")) {
      const NodeId n = node(c::kIf);
      add(n, token_leaf());
      add(n, expect("("));
      add(n, expression());
      add(n, expect(")"));
      add(n, statement());
      if (peek_is("else")) {
        add(n, token_leaf());
        add(n, statement());
      }
      return n;
    }
    if (peek_is("while")) {
      const NodeId n = node(c::kWhile);
      add(n, token_leaf());
      add(n, expect("("));
      add(n, expression());
      add(n, expect(")"));
      add(n, statement());
      return n;
    }
    if (peek_is("for")) {
      const NodeId n = node(c::kFor);
      add(n, token_leaf());
      add(n, expect("("));
      if (!peek_is(";")) add(n, starts_local_decl() ? local_decl() : expression());
      add(n, expect(";"));
      if (!peek_is(";")) add(n, expression());
      add(n, expect(";"));
      if (!peek_is(")")) {
        add(n, expression());
        while (peek_is(",")) {
          add(n, token_leaf());
          add(n, expression());
        }
      }
      add(n, expect(")"));
      add(n, statement());
      return n;
    }
    if (peek_is("return")) {
      const NodeId n = node(c::kReturn);
      add(n, token_leaf());
      if (!peek_is(";")) add(n, expression());
      add(n, expect(";"));
      return n;
    }
    if (peek_is(";")) {
      const NodeId n = node(c::kEmptyStmt);
      add(n, token_leaf());
      return n;
    }
    if (starts_local_decl()) {
      const NodeId n = local_decl();
      if (!peek_is(";")) fail({"=", ";"});
      add(n, token_leaf());
      return n;
    }
    const NodeId n = node(c::kExprStmt);
    add(n, expression());
    add(n, expect(";"));
    return n;
  }

  NodeId expression() {
    const NodeId lhs = binary(0);
    if (peek_kind(TokenKind::kOperator) && is_assign_op(peek()->text)) {
      const std::string& lc = nodes_[lhs].construct;
      if (lc != c::kNameUse && lc != c::kFieldAccess) {
        throw ParseError("invalid assignment target", peek()->line, peek()->column, {"expression"});
      }
      const NodeId n = node(c::kAssign);
      add(n, lhs);
      add(n, token_leaf());
      add(n, expression());
      return n;
    }
    return lhs;
  }

  static const std::vector<std::vector<std::string>>& precedence() {
    static const std::vector<std::vector<std::string>> levels{
        {"||"}, {"&&"}, {"==", "!="}, {"<", ">", "<=", ">="}, {"+", "-"}, {"*", "/", "%"},
    };
    return levels;
  }

  NodeId binary(std::size_t level) {
    if (level == precedence().size()) return unary();
    NodeId lhs = binary(level + 1);
    const auto& ops = precedence()[level];
    while (peek_kind(TokenKind::kOperator) && std::find(ops.begin(), ops.end(), peek()->text) != ops.end()) {
      const NodeId n = node(c::kBinaryOp);
      add(n, lhs);
      add(n, token_leaf());
      add(n, binary(level + 1));
      lhs = n;
    }
    return lhs;
  }

  NodeId unary() {
    if (peek_kind(TokenKind::kOperator)) {
      const std::string& t = peek()->text;
      if (t == "!" || t == "-" || t == "+" || t == "++" || t == "--") {
        const NodeId n = node(c::kUnaryOp);
        add(n, token_leaf());
        add(n, unary());
        return n;
      }
    }
    return postfix();
  }

  void arguments(NodeId call) {
    add(call, expect("("));
    if (!peek_is(")")) {
      add(call, expression());
      while (peek_is(",")) {
        add(call, token_leaf());
        add(call, expression());
      }
    }
    add(call, expect(")"));
  }

  NodeId postfix() {
    NodeId e = primary();
    while (peek_is(".")) {
      const NodeId dot = token_leaf();
      if (!peek_kind(TokenKind::kIdentifier)) fail({"identifier"});
      const bool is_call = peek_is("(", 1);
      const NodeId n = node(is_call ? c::kCall : c::kFieldAccess);
      add(n, e);
      add(n, dot);
      add(n, identifier(is_call ? c::kCallName : c::kMemberName));
      if (is_call) arguments(n);
      e = n;
    }
    if (peek_is("++") || peek_is("--")) {
      const NodeId n = node(c::kPostfixOp);
      add(n, e);
      add(n, token_leaf());
      e = n;
    }
    return e;
  }

  NodeId primary() {
    const Token* t = peek();
    if (!t) fail({"expression"});
    if (t->kind == TokenKind::kLiteral) return token_leaf();
    if (peek_is("this")) return leaf(std::string(c::kThis));
    if (t->kind == TokenKind::kIdentifier) {
      if (peek_is("(", 1)) {
        const NodeId n = node(c::kCall);
        add(n, identifier(c::kCallName));
        arguments(n);
        return n;
      }
      return identifier(c::kNameUse);
    }
    if (peek_is("(")) {
      const NodeId n = node(c::kParen);
      add(n, token_leaf());
      add(n, expression());
      add(n, expect(")"));
      return n;
    }
    if (peek_is("new")) {
      const NodeId n = node(c::kNew);
      add(n, token_leaf());
      add(n, identifier(c::kTypeName));
      arguments(n);
      return n;
    }
    fail({"literal", "identifier", "this", "(", "new", "unary operator"});
  }
};

// Renumbers nodes in preorder so that ids follow source order.
std::vector<AstNode> renumber(std::vector<AstNode> nodes, NodeId root) {
  std::vector<NodeId> order;
  order.reserve(nodes.size());
  std::vector<NodeId> stack{root};
  while (!stack.empty()) {
    const NodeId id = stack.back();
    stack.pop_back();
    order.push_back(id);
    const auto& ch = nodes[id].children;
    for (auto it = ch.rbegin(); it != ch.rend(); ++it) stack.push_back(*it);
  }
  std::vector<NodeId> remap(nodes.size());
  for (std::size_t i = 0; i < order.size(); ++i) remap[order[i]] = i;
  std::vector<AstNode> out(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    out[i] = std::move(nodes[order[i]]);
    out[i].id = i;
    for (auto& ch : out[i].children) ch = remap[ch];
  }
  for (auto it = out.rbegin(); it != out.rend(); ++it) {
    if (it->line == 0 && !it->children.empty()) it->line = out[it->children.front()].line;
  }
  return out;
}

struct ClassInfo {
  NodeId decl = 0;
  std::unordered_map<std::string, NodeId> fields;
  std::unordered_map<std::string, NodeId> methods;
};

class Resolver {
 public:
  explicit Resolver(Ast& ast) : ast_(ast) {}

  void run() {
    collect_classes();
    visit(ast_.root);
  }

 private:
  Ast& ast_;
  std::map<std::string, ClassInfo> classes_;
  const ClassInfo* current_ = nullptr;
  std::vector<std::unordered_map<std::string, NodeId>> scopes_;

  AstNode& n(NodeId id) { return ast_.nodes[id]; }

  std::optional<std::string> type_text(NodeId type_node) {
    const AstNode& t = n(type_node);
    if (t.construct.rfind("TypeRef:", 0) == 0) return t.construct.substr(8);
    if (t.construct == c::kTypeName) return t.name;
    return std::nullopt;
  }

  void declare_leaf(NodeId leaf, std::optional<std::string> type) {
    n(leaf).decl = leaf;
    n(leaf).type_name = std::move(type);
  }

  // Declaration leaves carry their declared type; the type node is the child
  // right before the name.
  void declare_from_siblings(NodeId parent, std::string_view label) {
    const auto& ch = n(parent).children;
    for (std::size_t i = 0; i < ch.size(); ++i) {
      if (n(ch[i]).construct == label) {
        declare_leaf(ch[i], i > 0 ? type_text(ch[i - 1]) : std::nullopt);
        return;
      }
    }
  }

  void collect_classes() {
    for (NodeId cls : n(ast_.root).children) {
      ClassInfo info;
      for (NodeId ch : n(cls).children) {
        const std::string& label = n(ch).construct;
        if (label == c::kClassName) {
          info.decl = ch;
          declare_leaf(ch, n(ch).name);
        } else if (label == c::kFieldDecl) {
          declare_from_siblings(ch, c::kFieldName);
          for (NodeId f : n(ch).children) {
            if (n(f).construct == c::kFieldName) info.fields.emplace(*n(f).name, f);
          }
        } else if (label == c::kMethodDecl) {
          declare_from_siblings(ch, c::kMethodName);
          for (NodeId f : n(ch).children) {
            if (n(f).construct == c::kMethodName) info.methods.emplace(*n(f).name, f);
          }
        } else if (label == c::kConstructorDecl) {
          for (NodeId f : n(ch).children) {
            if (n(f).construct == c::kMethodName) declare_leaf(f, n(f).name);
          }
        }
      }
      const std::string name = *n(info.decl).name;
      classes_.emplace(name, std::move(info));
    }
  }

  void bind(NodeId use, std::optional<NodeId> decl) {
    if (!decl) {
      n(use).unresolved = true;
      n(use).type_name.reset();
      return;
    }
    n(use).decl = *decl;
    n(use).type_name = n(*decl).type_name;
  }

  const ClassInfo* class_named(const std::optional<std::string>& name) const {
    if (!name) return nullptr;
    auto it = classes_.find(*name);
    return it == classes_.end() ? nullptr : &it->second;
  }

  // Static type of an already-resolved expression, if known.
  std::optional<std::string> expr_type(NodeId e) {
    const AstNode& x = n(e);
    if (x.construct == c::kThis) return current_ ? n(current_->decl).name : std::nullopt;
    if (x.construct == c::kNameUse || x.construct == c::kMemberName) return x.type_name;
    if (x.construct == c::kFieldAccess) return expr_type(x.children.back());
    if (x.construct == c::kCall) {
      for (NodeId ch : x.children) {
        if (n(ch).construct == c::kCallName) return n(ch).type_name;
      }
    }
    if (x.construct == c::kNew) return n(x.children[1]).name;
    if (x.construct == c::kParen) return expr_type(x.children[1]);
    return std::nullopt;
  }

  std::optional<NodeId> lookup_name(const std::string& name) {
    for (auto it = scopes_.rbegin(); it != scopes_.rend(); ++it) {
      auto f = it->find(name);
      if (f != it->end()) return f->second;
    }
    if (current_) {
      auto f = current_->fields.find(name);
      if (f != current_->fields.end()) return f->second;
    }
    if (const ClassInfo* cls = class_named(name)) return cls->decl;
    return std::nullopt;
  }

  void visit_children(NodeId id) {
    for (NodeId ch : n(id).children) visit(ch);
  }

  void visit(NodeId id) {
    const std::string label = n(id).construct;
    if (label == c::kClassDecl) {
      for (NodeId ch : n(id).children) {
        if (n(ch).construct == c::kClassName) current_ = class_named(n(ch).name);
      }
      visit_children(id);
      current_ = nullptr;
    } else if (label == c::kMethodDecl || label == c::kConstructorDecl || label == c::kBlock || label == c::kFor) {
      scopes_.emplace_back();
      visit_children(id);
      scopes_.pop_back();
    } else if (label == c::kParameter || label == c::kVarDecl) {
      const std::string_view decl_label = label == c::kParameter ? c::kParamName : c::kLocalName;
      NodeId decl_leaf = 0;
      for (NodeId ch : n(id).children) {
        if (n(ch).construct == decl_label) {
          decl_leaf = ch;
        } else {
          visit(ch);
        }
      }
      declare_from_siblings(id, decl_label);
      scopes_.back()[*n(decl_leaf).name] = decl_leaf;
    } else if (label == c::kNameUse) {
      bind(id, lookup_name(*n(id).name));
    } else if (label == c::kTypeName) {
      const ClassInfo* cls = class_named(n(id).name);
      if (cls) {
        n(id).decl = cls->decl;
      } else {
        n(id).unresolved = true;
      }
      n(id).type_name = n(id).name;
    } else if (label == c::kFieldAccess || label == c::kCall) {
      const auto& ch = n(id).children;
      const bool qualified = n(ch.front()).construct != c::kCallName;
      const ClassInfo* target = current_;
      if (qualified) {
        visit(ch.front());
        target = class_named(expr_type(ch.front()));
      }
      for (NodeId k : ch) {
        const std::string& kl = n(k).construct;
        if (kl == c::kMemberName || kl == c::kCallName) {
          const auto& table = kl == c::kMemberName ? (target ? &target->fields : nullptr)
                                                   : (target ? &target->methods : nullptr);
          std::optional<NodeId> decl;
          if (table) {
            auto f = table->find(*n(k).name);
            if (f != table->end()) decl = f->second;
          }
          bind(k, decl);
        } else if (!(qualified && k == ch.front())) {
          visit(k);
        }
      }
    } else {
      visit_children(id);
    }
  }
};

}  // namespace

Ast parse(std::vector<Token> tokens) {
  Ast ast;
  NodeId root = 0;
  auto raw = Parser(tokens).run(root);
  ast.nodes = renumber(std::move(raw), root);
  ast.root = 0;
  ast.tokens = std::move(tokens);
  Resolver(ast).run();
  return ast;
}

Ast parse_source(std::string_view text) { return parse(tokenize(text)); }

}  // namespace gsc
