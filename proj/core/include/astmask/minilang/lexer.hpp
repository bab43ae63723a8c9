#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace astmask::minilang {

enum class LexemeKind {
  kName,
  kNumber,
  kString,
  kOp,
  kKeyword,
  kNewline,
  kIndent,
  kDedent,
};

std::string_view lexeme_kind_name(LexemeKind kind);

struct Lexeme {
  LexemeKind kind;
  std::string text;        // source substring; empty for synthetic markers
  std::size_t char_start;  // byte offset, inclusive
  std::size_t char_end;    // byte offset, exclusive
};

struct Diagnostic {
  std::size_t offset = 0;
  std::string message;
};

struct LexResult {
  std::vector<Lexeme> lexemes;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

// Lexes an indentation-based mini language. Indentation changes materialize
// as zero-width INDENT/DEDENT markers; a logical line ends with a NEWLINE
// lexeme (zero-width when synthesized at end of input). Illegal characters
// and inconsistent indentation produce diagnostics with byte offsets; the
// lexer never throws on malformed input.
LexResult lex(std::string_view source);

// True for lexemes that carry source text (everything except the synthetic
// NEWLINE/INDENT/DEDENT markers).
bool is_visible(const Lexeme& lexeme);

}  // namespace astmask::minilang
