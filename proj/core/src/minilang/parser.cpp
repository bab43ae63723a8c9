#include "astmask/minilang/parser.hpp"

#include <utility>

namespace astmask::minilang {

namespace {

constexpr int kMaxDepth = 200;
constexpr std::size_t kMaxDiagnostics = 100;

// Internal unwind token for statement-level error recovery.
struct ParseAbort {};

class Parser {
 public:
  Parser(std::vector<Lexeme> lexemes, std::vector<Diagnostic>& diags)
      : toks_(std::move(lexemes)), diags_(diags) {}

  AstNode run() {
    AstNode module;
    module.label = NodeLabel::kModule;
    parse_statements_into(module.children, /*inside_block=*/false);
    if (!module.children.empty()) {
      module.char_start = module.children.front().char_start;
      module.char_end = module.children.back().char_end;
    }
    return module;
  }

  std::vector<Lexeme> take_lexemes() { return std::move(toks_); }

 private:
  std::vector<Lexeme> toks_;
  std::vector<Diagnostic>& diags_;
  std::size_t pos_ = 0;
  int depth_ = 0;

  bool at_end() const { return pos_ >= toks_.size(); }
  const Lexeme& cur() const { return toks_[pos_]; }

  std::size_t here() const {
    return at_end() ? (toks_.empty() ? 0 : toks_.back().char_end)
                    : cur().char_start;
  }

  [[noreturn]] void fail(std::string msg) {
    if (diags_.size() < kMaxDiagnostics) diags_.push_back({here(), std::move(msg)});
    throw ParseAbort{};
  }

  bool at(LexemeKind kind) const { return !at_end() && cur().kind == kind; }
  bool at(LexemeKind kind, std::string_view text) const {
    return at(kind) && cur().text == text;
  }
  bool at_keyword(std::string_view kw) const {
    return at(LexemeKind::kKeyword, kw);
  }

  const Lexeme& advance() { return toks_[pos_++]; }

  const Lexeme& expect(LexemeKind kind, std::string_view what) {
    if (!at(kind)) fail("expected " + std::string(what));
    return advance();
  }
  const Lexeme& expect_op(std::string_view op) {
    if (!at(LexemeKind::kOp, op)) fail("expected '" + std::string(op) + "'");
    return advance();
  }

  struct DepthGuard {
    Parser& p;
    explicit DepthGuard(Parser& parser) : p(parser) {
      if (++p.depth_ > kMaxDepth) p.fail("nesting too deep");
    }
    ~DepthGuard() { --p.depth_; }
  };

  // Skips to the start of the next statement after an error. Consumes up to
  // and including the next NEWLINE; stops before DEDENT so the enclosing
  // block can close. Always makes progress.
  void synchronize() {
    const std::size_t start = pos_;
    while (!at_end()) {
      LexemeKind k = cur().kind;
      if (k == LexemeKind::kNewline) {
        advance();
        return;
      }
      if (k == LexemeKind::kDedent) {
        if (pos_ == start) advance();
        return;
      }
      advance();
    }
  }

  void parse_statements_into(std::vector<AstNode>& out, bool inside_block) {
    while (!at_end()) {
      if (inside_block && at(LexemeKind::kDedent)) break;
      if (at(LexemeKind::kNewline) || at(LexemeKind::kIndent)) {
        // Stray structure at statement level (e.g. unexpected indent).
        if (at(LexemeKind::kIndent)) {
          if (diags_.size() < kMaxDiagnostics)
            diags_.push_back({here(), "unexpected indent"});
        }
        advance();
        continue;
      }
      if (!inside_block && at(LexemeKind::kDedent)) {
        advance();
        continue;
      }
      try {
        out.push_back(parse_statement());
      } catch (const ParseAbort&) {
        if (diags_.size() >= kMaxDiagnostics) return;
        synchronize();
      }
    }
  }

  AstNode parse_statement() {
    DepthGuard guard(*this);
    if (at_keyword("def")) return parse_funcdef();
    if (at_keyword("if")) return parse_if();
    if (at_keyword("for")) return parse_for();
    if (at_keyword("while")) return parse_while();
    return parse_simple_statement();
  }

  AstNode parse_simple_statement() {
    AstNode stmt;
    if (at_keyword("return")) {
      const Lexeme& kw = advance();
      stmt.label = NodeLabel::kReturnStmt;
      stmt.char_start = kw.char_start;
      stmt.char_end = kw.char_end;
      if (!at(LexemeKind::kNewline)) {
        stmt.children.push_back(parse_expr());
        stmt.char_end = stmt.children.back().char_end;
      }
    } else if (at_keyword("pass")) {
      const Lexeme& kw = advance();
      stmt.label = NodeLabel::kPassStmt;
      stmt.char_start = kw.char_start;
      stmt.char_end = kw.char_end;
    } else if (at(LexemeKind::kName) && pos_ + 1 < toks_.size() &&
               toks_[pos_ + 1].kind == LexemeKind::kOp &&
               toks_[pos_ + 1].text == "=") {
      const Lexeme& target = advance();
      advance();  // '='
      stmt.label = NodeLabel::kAssign;
      stmt.children.push_back(leaf(NodeLabel::kName, target));
      stmt.children.push_back(parse_expr());
      stmt.char_start = target.char_start;
      stmt.char_end = stmt.children.back().char_end;
    } else {
      AstNode value = parse_expr();
      stmt.label = NodeLabel::kExprStmt;
      stmt.char_start = value.char_start;
      stmt.char_end = value.char_end;
      stmt.children.push_back(std::move(value));
    }
    expect(LexemeKind::kNewline, "newline after statement");
    return stmt;
  }

  AstNode parse_funcdef() {
    AstNode fn;
    fn.label = NodeLabel::kFunctionDef;
    fn.char_start = advance().char_start;  // 'def'
    const Lexeme& name = expect(LexemeKind::kName, "function name");
    fn.children.push_back(leaf(NodeLabel::kName, name));
    expect_op("(");
    if (!at(LexemeKind::kOp, ")")) {
      for (;;) {
        const Lexeme& param = expect(LexemeKind::kName, "parameter name");
        fn.children.push_back(leaf(NodeLabel::kName, param));
        if (at(LexemeKind::kOp, ",")) {
          advance();
          continue;
        }
        break;
      }
    }
    expect_op(")");
    expect_op(":");
    parse_block_into(fn.children);
    fn.char_end = fn.children.back().char_end;
    return fn;
  }

  // 'elif' chains become nested IFSTMT nodes in the else position, starting
  // at the 'elif' keyword.
  AstNode parse_if() {
    AstNode node;
    node.label = NodeLabel::kIfStmt;
    node.char_start = advance().char_start;  // 'if' / 'elif'
    node.children.push_back(parse_expr());
    expect_op(":");
    parse_block_into(node.children);
    if (at_keyword("elif")) {
      node.orelse_index = node.children.size();
      node.children.push_back(parse_if());
    } else if (at_keyword("else")) {
      advance();
      expect_op(":");
      node.orelse_index = node.children.size();
      parse_block_into(node.children);
    }
    node.char_end = node.children.back().char_end;
    return node;
  }

  AstNode parse_for() {
    AstNode node;
    node.label = NodeLabel::kForStmt;
    node.char_start = advance().char_start;  // 'for'
    const Lexeme& var = expect(LexemeKind::kName, "loop variable");
    node.children.push_back(leaf(NodeLabel::kName, var));
    if (!at_keyword("in")) fail("expected 'in'");
    advance();
    node.children.push_back(parse_expr());
    expect_op(":");
    parse_block_into(node.children);
    node.char_end = node.children.back().char_end;
    return node;
  }

  AstNode parse_while() {
    AstNode node;
    node.label = NodeLabel::kWhileStmt;
    node.char_start = advance().char_start;  // 'while'
    node.children.push_back(parse_expr());
    expect_op(":");
    parse_block_into(node.children);
    node.char_end = node.children.back().char_end;
    return node;
  }

  // block: NEWLINE INDENT statement+ DEDENT
  void parse_block_into(std::vector<AstNode>& out) {
    DepthGuard guard(*this);
    expect(LexemeKind::kNewline, "newline before block");
    expect(LexemeKind::kIndent, "indented block");
    const std::size_t before = out.size();
    parse_statements_into(out, /*inside_block=*/true);
    if (out.size() == before) fail("empty block");
    expect(LexemeKind::kDedent, "dedent after block");
  }

  AstNode parse_expr() { return parse_comparison(); }

  AstNode parse_comparison() {
    DepthGuard guard(*this);
    AstNode left = parse_arith();
    if (at(LexemeKind::kOp)) {
      NodeLabel op_label;
      const std::string& t = cur().text;
      if (t == ">") op_label = NodeLabel::kGt;
      else if (t == "<") op_label = NodeLabel::kLt;
      else if (t == "==") op_label = NodeLabel::kEq;
      else if (t == "!=") op_label = NodeLabel::kNe;
      else if (t == ">=") op_label = NodeLabel::kGe;
      else if (t == "<=") op_label = NodeLabel::kLe;
      else return left;
      const Lexeme& op = advance();
      AstNode cmp;
      cmp.label = NodeLabel::kCompare;
      cmp.char_start = left.char_start;
      cmp.children.push_back(std::move(left));
      cmp.children.push_back(leaf(op_label, op));
      cmp.children.push_back(parse_arith());
      cmp.char_end = cmp.children.back().char_end;
      return cmp;
    }
    return left;
  }

  AstNode parse_arith() {
    AstNode left = parse_term();
    while (at(LexemeKind::kOp) && (cur().text == "+" || cur().text == "-")) {
      const Lexeme& op = advance();
      left = make_binop(std::move(left),
                        op.text == "+" ? NodeLabel::kAdd : NodeLabel::kSub, op,
                        parse_term());
    }
    return left;
  }

  AstNode parse_term() {
    AstNode left = parse_factor();
    while (at(LexemeKind::kOp) &&
           (cur().text == "*" || cur().text == "/" || cur().text == "%")) {
      const Lexeme& op = advance();
      NodeLabel op_label = op.text == "*"   ? NodeLabel::kMul
                           : op.text == "/" ? NodeLabel::kDiv
                                            : NodeLabel::kMod;
      left = make_binop(std::move(left), op_label, op, parse_factor());
    }
    return left;
  }

  AstNode make_binop(AstNode left, NodeLabel op_label, const Lexeme& op,
                     AstNode right) {
    AstNode node;
    node.label = NodeLabel::kBinOp;
    node.char_start = left.char_start;
    node.char_end = right.char_end;
    node.children.push_back(std::move(left));
    node.children.push_back(leaf(op_label, op));
    node.children.push_back(std::move(right));
    return node;
  }

  // factor: atom ('(' args ')')*
  AstNode parse_factor() {
    DepthGuard guard(*this);
    AstNode node = parse_atom();
    while (at(LexemeKind::kOp, "(")) {
      advance();
      AstNode call;
      call.label = NodeLabel::kCall;
      call.char_start = node.char_start;
      call.children.push_back(std::move(node));
      if (!at(LexemeKind::kOp, ")")) {
        for (;;) {
          call.children.push_back(parse_expr());
          if (at(LexemeKind::kOp, ",")) {
            advance();
            continue;
          }
          break;
        }
      }
      const Lexeme& rparen = expect_op(")");
      call.char_end = rparen.char_end;
      node = std::move(call);
    }
    return node;
  }

  AstNode parse_atom() {
    DepthGuard guard(*this);
    if (at(LexemeKind::kName)) return leaf(NodeLabel::kName, advance());
    if (at(LexemeKind::kNumber) || at(LexemeKind::kString))
      return leaf(NodeLabel::kConstant, advance());
    if (at(LexemeKind::kOp, "(")) {
      advance();
      AstNode inner = parse_expr();
      expect_op(")");
      return inner;
    }
    fail("expected expression");
  }

  static AstNode leaf(NodeLabel label, const Lexeme& lexeme) {
    AstNode node;
    node.label = label;
    node.char_start = lexeme.char_start;
    node.char_end = lexeme.char_end;
    node.token = lexeme.text;
    return node;
  }
};

}  // namespace

ParseResult parse(std::string_view source) {
  ParseResult result;
  LexResult lexed = lex(source);
  result.diagnostics = lexed.diagnostics;
  result.root.label = NodeLabel::kModule;
  if (!lexed.ok()) {
    result.lexemes = std::move(lexed.lexemes);
    return result;
  }
  Parser parser(std::move(lexed.lexemes), result.diagnostics);
  result.root = parser.run();
  result.lexemes = parser.take_lexemes();
  return result;
}

}  // namespace astmask::minilang
