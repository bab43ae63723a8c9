#pragma once

#include <string_view>
#include <vector>

#include "astmask/minilang/ast.hpp"
#include "astmask/minilang/lexer.hpp"

namespace astmask::minilang {

struct ParseResult {
  AstNode root;  // label MODULE
  std::vector<Lexeme> lexemes;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Recursive-descent parser for the mini language:
//   module: statements (assignment, expression, return, pass) and the
//   compound forms def / if / elif / else / for / while, with calls,
//   comparisons and binary arithmetic in expressions.
//
// Never throws on malformed input: errors are reported as diagnostics with
// byte offsets and parsing resumes at the next statement. Expression and
// block nesting are depth-limited so arbitrary byte strings cannot overflow
// the stack.
ParseResult parse(std::string_view source);

}  // namespace astmask::minilang
