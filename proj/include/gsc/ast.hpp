#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gsc/lexer.hpp"

namespace gsc {

using NodeId = std::size_t;

// Construct labels. Interior nodes use the plain grammar names below; leaves
// are either identifier roles (variable nodes) or token leaves labelled
// "Keyword:<kw>", "Op:<op>", "Punct:<p>", "TypeRef:<primitive>" and the
// literal kinds.
namespace construct {
inline constexpr std::string_view kCompilationUnit = "CompilationUnit";
inline constexpr std::string_view kClassDecl = "ClassDecl";
inline constexpr std::string_view kFieldDecl = "FieldDecl";
inline constexpr std::string_view kMethodDecl = "MethodDecl";
inline constexpr std::string_view kConstructorDecl = "ConstructorDecl";
inline constexpr std::string_view kParameter = "Parameter";
inline constexpr std::string_view kBlock = "Block";
inline constexpr std::string_view kVarDecl = "VarDecl";
inline constexpr std::string_view kIf = "If";
inline constexpr std::string_view kWhile = "While";
inline constexpr std::string_view kFor = "For";
inline constexpr std::string_view kReturn = "Return";
inline constexpr std::string_view kExprStmt = "ExprStmt";
inline constexpr std::string_view kEmptyStmt = "EmptyStmt";
inline constexpr std::string_view kAssign = "Assign";
inline constexpr std::string_view kBinaryOp = "BinaryOp";
inline constexpr std::string_view kUnaryOp = "UnaryOp";
inline constexpr std::string_view kPostfixOp = "PostfixOp";
inline constexpr std::string_view kCall = "Call";
inline constexpr std::string_view kFieldAccess = "FieldAccess";
inline constexpr std::string_view kNew = "New";
inline constexpr std::string_view kParen = "Paren";
inline constexpr std::string_view kThis = "This";

// Identifier leaves.
inline constexpr std::string_view kClassName = "ClassName";
inline constexpr std::string_view kMethodName = "MethodName";
inline constexpr std::string_view kParamName = "ParamName";
inline constexpr std::string_view kLocalName = "LocalName";
inline constexpr std::string_view kFieldName = "FieldName";
inline constexpr std::string_view kNameUse = "NameUse";
inline constexpr std::string_view kMemberName = "MemberName";
inline constexpr std::string_view kCallName = "CallName";
inline constexpr std::string_view kTypeName = "TypeName";

inline constexpr std::string_view kIntLiteral = "IntLiteral";
inline constexpr std::string_view kFloatLiteral = "FloatLiteral";
inline constexpr std::string_view kStringLiteral = "StringLiteral";
inline constexpr std::string_view kCharLiteral = "CharLiteral";
inline constexpr std::string_view kBoolLiteral = "BoolLiteral";
inline constexpr std::string_view kNullLiteral = "NullLiteral";
}  // namespace construct

// True for declarations of data-carrying variables (parameters, locals, fields).
bool is_data_declaration(std::string_view construct);
// True for identifier leaves that denote a value (not a call, type or name of a
// declaration site other than data declarations).
bool is_value_construct(std::string_view construct);

// Every label the parser can emit, in a fixed order. Used to size the
// construct embedding table.
const std::vector<std::string>& construct_vocabulary();

struct AstNode {
  NodeId id = 0;
  std::string construct;
  std::optional<std::string> name;
  std::optional<std::string> type_name;
  std::vector<NodeId> children;
  std::optional<std::size_t> token;  // index into Ast::tokens for leaves
  bool variable = false;
  std::optional<NodeId> decl;  // resolved declaration leaf; declarations point at themselves
  bool unresolved = false;
  int line = 0;
};

struct Ast {
  std::vector<AstNode> nodes;  // node ids equal positions; preorder numbering
  NodeId root = 0;
  std::vector<Token> tokens;

  const AstNode& at(NodeId id) const { return nodes.at(id); }
  // Leaf ids in left-to-right order.
  std::vector<NodeId> leaves() const;
};

// Parses a token stream. Throws ParseError on syntax errors; unresolved names
// are flagged on the node and are not errors.
Ast parse(std::vector<Token> tokens);
Ast parse_source(std::string_view text);

}  // namespace gsc
