#include "astmask/minilang/printer.hpp"

#include <stdexcept>

namespace astmask::minilang {

namespace {

int precedence(const AstNode& node) {
  switch (node.label) {
    case NodeLabel::kCompare:
      return 1;
    case NodeLabel::kBinOp:
      switch (node.children[1].label) {
        case NodeLabel::kAdd:
        case NodeLabel::kSub:
          return 2;
        default:
          return 3;
      }
    default:
      return 4;  // atoms and calls
  }
}

class Printer {
 public:
  std::string run(const AstNode& root) {
    if (root.label != NodeLabel::kModule)
      throw std::invalid_argument("pretty_print: root must be MODULE");
    for (const AstNode& stmt : root.children) print_stmt(stmt, 0);
    return std::move(out_);
  }

 private:
  std::string out_;

  void indent(int level) { out_.append(static_cast<std::size_t>(level) * 4, ' '); }

  void print_stmt(const AstNode& stmt, int level) {
    switch (stmt.label) {
      case NodeLabel::kAssign:
        indent(level);
        print_expr(stmt.children[0], 0);
        out_ += " = ";
        print_expr(stmt.children[1], 0);
        out_ += '\n';
        break;
      case NodeLabel::kReturnStmt:
        indent(level);
        out_ += "return";
        if (!stmt.children.empty()) {
          out_ += ' ';
          print_expr(stmt.children[0], 0);
        }
        out_ += '\n';
        break;
      case NodeLabel::kPassStmt:
        indent(level);
        out_ += "pass\n";
        break;
      case NodeLabel::kExprStmt:
        indent(level);
        print_expr(stmt.children[0], 0);
        out_ += '\n';
        break;
      case NodeLabel::kFunctionDef:
        print_funcdef(stmt, level);
        break;
      case NodeLabel::kIfStmt:
        print_if(stmt, level, /*as_elif=*/false);
        break;
      case NodeLabel::kForStmt:
        indent(level);
        out_ += "for ";
        print_expr(stmt.children[0], 0);
        out_ += " in ";
        print_expr(stmt.children[1], 0);
        out_ += ":\n";
        for (std::size_t i = 2; i < stmt.children.size(); ++i)
          print_stmt(stmt.children[i], level + 1);
        break;
      case NodeLabel::kWhileStmt:
        indent(level);
        out_ += "while ";
        print_expr(stmt.children[0], 0);
        out_ += ":\n";
        for (std::size_t i = 1; i < stmt.children.size(); ++i)
          print_stmt(stmt.children[i], level + 1);
        break;
      default:
        throw std::invalid_argument("pretty_print: not a statement node");
    }
  }

  void print_funcdef(const AstNode& fn, int level) {
    indent(level);
    out_ += "def ";
    out_ += fn.children[0].token;
    out_ += '(';
    std::size_t body_start = 1;
    while (body_start < fn.children.size() &&
           fn.children[body_start].label == NodeLabel::kName) {
      if (body_start > 1) out_ += ", ";
      out_ += fn.children[body_start].token;
      ++body_start;
    }
    out_ += "):\n";
    for (std::size_t i = body_start; i < fn.children.size(); ++i)
      print_stmt(fn.children[i], level + 1);
  }

  // An orelse part that is exactly one IFSTMT prints as 'elif'; this is the
  // same program as 'else' holding a single if, so the round trip is stable.
  void print_if(const AstNode& node, int level, bool as_elif) {
    indent(level);
    out_ += as_elif ? "elif " : "if ";
    print_expr(node.children[0], 0);
    out_ += ":\n";
    const std::size_t body_end =
        node.orelse_index ? node.orelse_index : node.children.size();
    for (std::size_t i = 1; i < body_end; ++i)
      print_stmt(node.children[i], level + 1);
    if (!node.orelse_index) return;
    const std::size_t tail = node.children.size() - node.orelse_index;
    if (tail == 1 && node.children[node.orelse_index].label == NodeLabel::kIfStmt) {
      print_if(node.children[node.orelse_index], level, /*as_elif=*/true);
    } else {
      indent(level);
      out_ += "else:\n";
      for (std::size_t i = node.orelse_index; i < node.children.size(); ++i)
        print_stmt(node.children[i], level + 1);
    }
  }

  void print_expr(const AstNode& node, int parent_prec) {
    const int prec = precedence(node);
    const bool parens = prec < parent_prec;
    if (parens) out_ += '(';
    switch (node.label) {
      case NodeLabel::kName:
      case NodeLabel::kConstant:
        out_ += node.token;
        break;
      case NodeLabel::kCall:
        print_expr(node.children[0], 4);
        out_ += '(';
        for (std::size_t i = 1; i < node.children.size(); ++i) {
          if (i > 1) out_ += ", ";
          print_expr(node.children[i], 0);
        }
        out_ += ')';
        break;
      case NodeLabel::kCompare:
      case NodeLabel::kBinOp:
        // Left-associative: the right operand needs parens at equal precedence.
        print_expr(node.children[0], prec);
        out_ += ' ';
        out_ += node.children[1].token;
        out_ += ' ';
        print_expr(node.children[2], prec + 1);
        break;
      default:
        throw std::invalid_argument("pretty_print: not an expression node");
    }
    if (parens) out_ += ')';
  }
};

}  // namespace

std::string pretty_print(const AstNode& root) { return Printer().run(root); }

}  // namespace astmask::minilang
