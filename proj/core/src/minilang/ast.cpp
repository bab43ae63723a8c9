#include "astmask/minilang/ast.hpp"

#include <stdexcept>

namespace astmask::minilang {

std::string_view label_name(NodeLabel label) {
  switch (label) {
    case NodeLabel::kModule: return "MODULE";
    case NodeLabel::kFunctionDef: return "FUNCTIONDEF";
    case NodeLabel::kIfStmt: return "IFSTMT";
    case NodeLabel::kForStmt: return "FORSTMT";
    case NodeLabel::kWhileStmt: return "WHILESTMT";
    case NodeLabel::kReturnStmt: return "RETURNSTMT";
    case NodeLabel::kPassStmt: return "PASSSTMT";
    case NodeLabel::kAssign: return "ASSIGN";
    case NodeLabel::kExprStmt: return "EXPRSTMT";
    case NodeLabel::kCall: return "CALL";
    case NodeLabel::kCompare: return "COMPARE";
    case NodeLabel::kBinOp: return "BINOP";
    case NodeLabel::kName: return "NAME";
    case NodeLabel::kConstant: return "CONSTANT";
    case NodeLabel::kGt: return "GT";
    case NodeLabel::kLt: return "LT";
    case NodeLabel::kEq: return "EQ";
    case NodeLabel::kNe: return "NE";
    case NodeLabel::kGe: return "GE";
    case NodeLabel::kLe: return "LE";
    case NodeLabel::kAdd: return "ADD";
    case NodeLabel::kSub: return "SUB";
    case NodeLabel::kMul: return "MUL";
    case NodeLabel::kDiv: return "DIV";
    case NodeLabel::kMod: return "MOD";
  }
  return "?";
}

NodeLabel label_from_name(std::string_view name) {
  static constexpr NodeLabel kAll[] = {
      NodeLabel::kModule,     NodeLabel::kFunctionDef, NodeLabel::kIfStmt,
      NodeLabel::kForStmt,    NodeLabel::kWhileStmt,   NodeLabel::kReturnStmt,
      NodeLabel::kPassStmt,   NodeLabel::kAssign,      NodeLabel::kExprStmt,
      NodeLabel::kCall,       NodeLabel::kCompare,     NodeLabel::kBinOp,
      NodeLabel::kName,       NodeLabel::kConstant,    NodeLabel::kGt,
      NodeLabel::kLt,         NodeLabel::kEq,          NodeLabel::kNe,
      NodeLabel::kGe,         NodeLabel::kLe,          NodeLabel::kAdd,
      NodeLabel::kSub,        NodeLabel::kMul,         NodeLabel::kDiv,
      NodeLabel::kMod};
  for (NodeLabel label : kAll) {
    if (label_name(label) == name) return label;
  }
  throw std::invalid_argument("unknown node label: " + std::string(name));
}

bool structurally_equal(const AstNode& a, const AstNode& b) {
  if (a.label != b.label || a.token != b.token) return false;
  if (a.label == NodeLabel::kIfStmt && a.orelse_index != b.orelse_index)
    return false;
  if (a.children.size() != b.children.size()) return false;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!structurally_equal(a.children[i], b.children[i])) return false;
  }
  return true;
}

bool check_span_nesting(const AstNode& node) {
  std::size_t prev_end = node.char_start;
  for (const AstNode& child : node.children) {
    if (child.char_start < node.char_start || child.char_end > node.char_end)
      return false;
    if (child.char_start < prev_end) return false;
    if (child.char_start > child.char_end) return false;
    prev_end = child.char_end;
    if (!check_span_nesting(child)) return false;
  }
  return true;
}

}  // namespace astmask::minilang
