#include "astmask/minilang/lexer.hpp"

#include <array>
#include <cctype>

namespace astmask::minilang {

namespace {

const std::array<std::string_view, 9> kKeywords = {
    "def", "if", "elif", "else", "for", "while", "return", "pass", "in"};

bool is_keyword(std::string_view word) {
  for (auto kw : kKeywords) {
    if (word == kw) return true;
  }
  return false;
}

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

bool is_digit(char c) { return std::isdigit(static_cast<unsigned char>(c)); }

// Two-character operators first so maximal munch wins.
const std::array<std::string_view, 4> kTwoCharOps = {"==", "!=", ">=", "<="};
constexpr std::string_view kOneCharOps = "=<>+-*/%(),:";

}  // namespace

std::string_view lexeme_kind_name(LexemeKind kind) {
  switch (kind) {
    case LexemeKind::kName: return "NAME";
    case LexemeKind::kNumber: return "NUMBER";
    case LexemeKind::kString: return "STRING";
    case LexemeKind::kOp: return "OP";
    case LexemeKind::kKeyword: return "KEYWORD";
    case LexemeKind::kNewline: return "NEWLINE";
    case LexemeKind::kIndent: return "INDENT";
    case LexemeKind::kDedent: return "DEDENT";
  }
  return "?";
}

bool is_visible(const Lexeme& lexeme) {
  switch (lexeme.kind) {
    case LexemeKind::kNewline:
    case LexemeKind::kIndent:
    case LexemeKind::kDedent:
      return false;
    default:
      return true;
  }
}

LexResult lex(std::string_view src) {
  LexResult out;
  std::vector<std::size_t> indents = {0};
  std::size_t i = 0;
  const std::size_t n = src.size();
  bool line_has_tokens = false;

  auto emit = [&](LexemeKind kind, std::size_t start, std::size_t end) {
    out.lexemes.push_back(
        {kind, std::string(src.substr(start, end - start)), start, end});
  };
  auto error = [&](std::size_t at, std::string msg) {
    out.diagnostics.push_back({at, std::move(msg)});
  };

  auto handle_indentation = [&](std::size_t line_start) -> bool {
    std::size_t j = line_start;
    bool saw_tab = false;
    while (j < n && (src[j] == ' ' || src[j] == '\t')) {
      saw_tab |= src[j] == '\t';
      ++j;
    }
    // Blank line: whitespace only, no tokens, no indent bookkeeping.
    if (j >= n || src[j] == '\n' || src[j] == '\r') return true;
    if (saw_tab) {
      error(line_start, "tab in indentation");
      return false;
    }
    const std::size_t width = j - line_start;
    if (width > indents.back()) {
      indents.push_back(width);
      out.lexemes.push_back({LexemeKind::kIndent, "", j, j});
    } else {
      while (width < indents.back()) {
        indents.pop_back();
        out.lexemes.push_back({LexemeKind::kDedent, "", j, j});
      }
      if (width != indents.back()) {
        error(j, "inconsistent indentation");
        return false;
      }
    }
    return true;
  };

  bool at_line_start = true;
  while (i < n) {
    if (at_line_start) {
      if (!handle_indentation(i)) return out;
      while (i < n && src[i] == ' ') ++i;
      at_line_start = false;
      line_has_tokens = false;
      if (i >= n) break;
    }
    const char c = src[i];
    if (c == '\n') {
      if (line_has_tokens) emit(LexemeKind::kNewline, i, i + 1);
      ++i;
      at_line_start = true;
      continue;
    }
    if (c == '\r') {
      // Normalized away; the following '\n' carries the NEWLINE.
      ++i;
      continue;
    }
    if (c == ' ' || c == '\t') {
      ++i;
      continue;
    }
    if (is_name_start(c)) {
      std::size_t start = i;
      while (i < n && is_name_char(src[i])) ++i;
      std::string_view word = src.substr(start, i - start);
      emit(is_keyword(word) ? LexemeKind::kKeyword : LexemeKind::kName, start, i);
      line_has_tokens = true;
      continue;
    }
    if (is_digit(c)) {
      std::size_t start = i;
      while (i < n && is_digit(src[i])) ++i;
      if (i + 1 < n && src[i] == '.' && is_digit(src[i + 1])) {
        ++i;
        while (i < n && is_digit(src[i])) ++i;
      }
      emit(LexemeKind::kNumber, start, i);
      line_has_tokens = true;
      continue;
    }
    if (c == '"' || c == '\'') {
      const char quote = c;
      std::size_t start = i;
      ++i;
      bool closed = false;
      while (i < n) {
        if (src[i] == '\\' && i + 1 < n) {
          i += 2;
          continue;
        }
        if (src[i] == quote) {
          ++i;
          closed = true;
          break;
        }
        if (src[i] == '\n') break;
        ++i;
      }
      if (!closed) {
        error(start, "unterminated string literal");
        return out;
      }
      emit(LexemeKind::kString, start, i);
      line_has_tokens = true;
      continue;
    }
    if (i + 1 < n) {
      std::string_view two = src.substr(i, 2);
      bool matched = false;
      for (auto op : kTwoCharOps) {
        if (two == op) {
          emit(LexemeKind::kOp, i, i + 2);
          i += 2;
          matched = true;
          break;
        }
      }
      if (matched) {
        line_has_tokens = true;
        continue;
      }
    }
    if (kOneCharOps.find(c) != std::string_view::npos) {
      emit(LexemeKind::kOp, i, i + 1);
      ++i;
      line_has_tokens = true;
      continue;
    }
    error(i, "illegal character");
    return out;
  }

  if (line_has_tokens) {
    out.lexemes.push_back({LexemeKind::kNewline, "", n, n});
  }
  while (indents.size() > 1) {
    indents.pop_back();
    out.lexemes.push_back({LexemeKind::kDedent, "", n, n});
  }
  return out;
}

}  // namespace astmask::minilang
