#include "astmask/minilang/generator.hpp"

#include <array>

#include "astmask/minilang/printer.hpp"

namespace astmask::minilang {

namespace {

constexpr std::array<std::string_view, 8> kNames = {"a", "b", "c", "i",
                                                    "n", "x", "y", "z"};
constexpr std::array<std::string_view, 6> kFuncNames = {"f", "g", "h",
                                                        "calc", "step", "run"};
constexpr std::array<std::string_view, 4> kStrings = {"\"s\"", "\"ok\"",
                                                      "\"no\"", "\"t\""};

constexpr std::array<NodeLabel, 6> kCompareOps = {
    NodeLabel::kGt, NodeLabel::kLt, NodeLabel::kEq,
    NodeLabel::kNe, NodeLabel::kGe, NodeLabel::kLe};
constexpr std::array<NodeLabel, 5> kArithOps = {NodeLabel::kAdd, NodeLabel::kSub,
                                                NodeLabel::kMul, NodeLabel::kDiv,
                                                NodeLabel::kMod};

std::string_view op_text(NodeLabel label) {
  switch (label) {
    case NodeLabel::kGt: return ">";
    case NodeLabel::kLt: return "<";
    case NodeLabel::kEq: return "==";
    case NodeLabel::kNe: return "!=";
    case NodeLabel::kGe: return ">=";
    case NodeLabel::kLe: return "<=";
    case NodeLabel::kAdd: return "+";
    case NodeLabel::kSub: return "-";
    case NodeLabel::kMul: return "*";
    case NodeLabel::kDiv: return "/";
    case NodeLabel::kMod: return "%";
    default: return "?";
  }
}

class Generator {
 public:
  Generator(Rng& rng, const GenOptions& opts) : rng_(rng), opts_(opts) {}

  AstNode module() {
    AstNode mod;
    mod.label = NodeLabel::kModule;
    const int count = static_cast<int>(
        rng_.uniform_int(opts_.min_module_stmts, opts_.max_module_stmts));
    for (int i = 0; i < count; ++i)
      mod.children.push_back(statement(/*depth=*/0, /*in_func=*/false));
    return mod;
  }

 private:
  Rng& rng_;
  const GenOptions& opts_;

  AstNode leaf(NodeLabel label, std::string_view token) {
    AstNode node;
    node.label = label;
    node.token = std::string(token);
    return node;
  }

  AstNode name() { return leaf(NodeLabel::kName, pick(kNames)); }

  AstNode constant() {
    if (opts_.allow_strings && rng_.uniform_below(8) == 0)
      return leaf(NodeLabel::kConstant, pick(kStrings));
    return leaf(NodeLabel::kConstant,
                std::to_string(rng_.uniform_int(0, 9)));
  }

  template <typename Pool>
  std::string_view pick(const Pool& pool) {
    return pool[rng_.uniform_below(pool.size())];
  }

  AstNode expr(int depth) {
    if (depth >= opts_.max_expr_depth) {
      return rng_.uniform_below(2) == 0 ? name() : constant();
    }
    switch (rng_.uniform_below(5)) {
      case 0:
        return name();
      case 1:
        return constant();
      case 2:
      case 3: {
        AstNode node;
        node.label = NodeLabel::kBinOp;
        node.children.push_back(expr(depth + 1));
        NodeLabel op = kArithOps[rng_.uniform_below(kArithOps.size())];
        node.children.push_back(leaf(op, op_text(op)));
        node.children.push_back(expr(depth + 1));
        return node;
      }
      default:
        return call(depth);
    }
  }

  AstNode call(int depth) {
    AstNode node;
    node.label = NodeLabel::kCall;
    node.children.push_back(leaf(NodeLabel::kName, pick(kFuncNames)));
    const int args = static_cast<int>(rng_.uniform_int(0, opts_.max_call_args));
    for (int i = 0; i < args; ++i) node.children.push_back(expr(depth + 1));
    return node;
  }

  AstNode condition() {
    AstNode node;
    node.label = NodeLabel::kCompare;
    node.children.push_back(expr(opts_.max_expr_depth - 1));
    NodeLabel op = kCompareOps[rng_.uniform_below(kCompareOps.size())];
    node.children.push_back(leaf(op, op_text(op)));
    node.children.push_back(expr(opts_.max_expr_depth - 1));
    return node;
  }

  AstNode statement(int depth, bool in_func) {
    const bool allow_blocks = depth < opts_.max_block_depth;
    // Weighted choice over statement kinds; block statements drop out at the
    // depth limit, return only appears inside function bodies.
    for (;;) {
      switch (rng_.uniform_below(10)) {
        case 0:
        case 1:
        case 2:
          return assign(depth);
        case 3: {
          AstNode stmt;
          stmt.label = NodeLabel::kExprStmt;
          stmt.children.push_back(call(opts_.max_expr_depth - 1));
          return stmt;
        }
        case 4:
          if (in_func) return return_stmt(depth);
          break;
        case 5:
        case 6:
          if (allow_blocks) return if_stmt(depth, in_func);
          break;
        case 7:
          if (allow_blocks) return for_stmt(depth, in_func);
          break;
        case 8:
          if (allow_blocks) return while_stmt(depth, in_func);
          break;
        default:
          if (allow_blocks && depth == 0 && !in_func) return funcdef();
          break;
      }
    }
  }

  AstNode assign(int depth) {
    AstNode stmt;
    stmt.label = NodeLabel::kAssign;
    stmt.children.push_back(name());
    stmt.children.push_back(expr(depth > 0 ? 1 : 0));
    return stmt;
  }

  AstNode return_stmt(int depth) {
    AstNode stmt;
    stmt.label = NodeLabel::kReturnStmt;
    if (rng_.uniform_below(8) != 0) stmt.children.push_back(expr(depth > 0 ? 1 : 0));
    return stmt;
  }

  void block_into(AstNode& parent, int depth, bool in_func) {
    const int count = static_cast<int>(rng_.uniform_int(1, opts_.max_block_stmts));
    for (int i = 0; i < count; ++i)
      parent.children.push_back(statement(depth + 1, in_func));
  }

  AstNode if_stmt(int depth, bool in_func) {
    AstNode stmt;
    stmt.label = NodeLabel::kIfStmt;
    stmt.children.push_back(condition());
    block_into(stmt, depth, in_func);
    switch (rng_.uniform_below(4)) {
      case 0:  // elif
        stmt.orelse_index = stmt.children.size();
        stmt.children.push_back(if_stmt(depth, in_func));
        break;
      case 1: {  // else
        stmt.orelse_index = stmt.children.size();
        block_into(stmt, depth, in_func);
        break;
      }
      default:
        break;
    }
    return stmt;
  }

  AstNode for_stmt(int depth, bool in_func) {
    AstNode stmt;
    stmt.label = NodeLabel::kForStmt;
    stmt.children.push_back(name());
    stmt.children.push_back(
        rng_.uniform_below(2) == 0 ? call(opts_.max_expr_depth - 1) : name());
    block_into(stmt, depth, in_func);
    return stmt;
  }

  AstNode while_stmt(int depth, bool in_func) {
    AstNode stmt;
    stmt.label = NodeLabel::kWhileStmt;
    stmt.children.push_back(condition());
    block_into(stmt, depth, in_func);
    return stmt;
  }

  AstNode funcdef() {
    AstNode fn;
    fn.label = NodeLabel::kFunctionDef;
    fn.children.push_back(leaf(NodeLabel::kName, pick(kFuncNames)));
    const int params = static_cast<int>(rng_.uniform_int(0, opts_.max_params));
    for (int i = 0; i < params; ++i) fn.children.push_back(name());
    block_into(fn, 0, /*in_func=*/true);
    return fn;
  }
};

}  // namespace

AstNode generate_program(Rng& rng, const GenOptions& options) {
  return Generator(rng, options).module();
}

std::string generate_source(Rng& rng, const GenOptions& options) {
  return pretty_print(generate_program(rng, options));
}

}  // namespace astmask::minilang
