#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace astmask::minilang {

// Syntactic labels. Internal nodes are constructs, leaves carry lexical
// tokens (NAME, CONSTANT and the operator nodes).
enum class NodeLabel {
  kModule,
  kFunctionDef,
  kIfStmt,
  kForStmt,
  kWhileStmt,
  kReturnStmt,
  kPassStmt,
  kAssign,
  kExprStmt,
  kCall,
  kCompare,
  kBinOp,
  kName,
  kConstant,
  // comparison operator leaves
  kGt,
  kLt,
  kEq,
  kNe,
  kGe,
  kLe,
  // arithmetic operator leaves
  kAdd,
  kSub,
  kMul,
  kDiv,
  kMod,
};

std::string_view label_name(NodeLabel label);

// Parses a label name as printed by label_name. Throws std::invalid_argument
// on unknown names.
NodeLabel label_from_name(std::string_view name);

struct AstNode {
  NodeLabel label = NodeLabel::kModule;
  // Byte offsets of the subtree in the source, half-open [char_start, char_end).
  std::size_t char_start = 0;
  std::size_t char_end = 0;
  // Lexeme text for leaf nodes (NAME, CONSTANT, operators); empty otherwise.
  std::string token;
  std::vector<AstNode> children;
  // IFSTMT only: index of the first child belonging to the elif/else part,
  // or 0 when there is none. Children are [condition, body..., orelse...];
  // without this the body/else boundary is not recoverable from shape.
  std::size_t orelse_index = 0;

  bool is_leaf() const { return children.empty(); }
};

// Label-and-shape equality: labels, leaf tokens and child lists must match;
// source offsets are ignored.
bool structurally_equal(const AstNode& a, const AstNode& b);

// Checks the tree invariants: child intervals nest inside the parent and
// siblings are non-overlapping in source order. Returns false on the first
// violation.
bool check_span_nesting(const AstNode& root);

}  // namespace astmask::minilang
