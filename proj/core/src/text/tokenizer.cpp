#include "astmask/text/tokenizer.hpp"

#include <cctype>
#include <stdexcept>

#include "astmask/minilang/lexer.hpp"

namespace astmask::text {

namespace {

bool is_word_byte(unsigned char c) {
  return std::isalnum(c) || c == '_' || c >= 0x80;
}

bool is_space_byte(unsigned char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

void append_token(TokenSequence& seq, std::string surface, std::size_t start,
                  std::size_t end, RegionKind region, bool special,
                  TokenId forced_id, const Vocabulary& vocab) {
  seq.tokens.push_back(forced_id >= 0 ? forced_id : vocab.id_of(surface));
  seq.surfaces.push_back(std::move(surface));
  seq.char_offsets.emplace_back(start, end);
  seq.region_of.push_back(region);
  seq.special.push_back(special ? 1 : 0);
}

TokenId delimiter_id(std::string_view gap) {
  if (gap == Vocabulary::kPromptDelim) return Vocabulary::kPromptDelimId;
  if (gap == Vocabulary::kReasoningDelim) return Vocabulary::kReasoningDelimId;
  if (gap == Vocabulary::kCodeDelim) return Vocabulary::kCodeDelimId;
  return -1;
}

void tokenize_region(TokenSequence& seq, std::string_view text,
                     const Region& region, const Vocabulary& vocab) {
  std::string_view content =
      text.substr(region.char_start, region.char_end - region.char_start);
  if (region.kind == RegionKind::kCode) {
    minilang::LexResult lexed = minilang::lex(content);
    if (lexed.ok()) {
      for (const minilang::Lexeme& lexeme : lexed.lexemes) {
        if (!minilang::is_visible(lexeme)) continue;
        append_token(seq, lexeme.text, region.char_start + lexeme.char_start,
                     region.char_start + lexeme.char_end, region.kind,
                     /*special=*/false, /*forced_id=*/-1, vocab);
      }
      return;
    }
    // Unlexable code degrades to word splitting; the parse-dependent span
    // path is skipped by callers in that case.
  }
  for (auto [start, end] : split_words(content)) {
    append_token(seq, std::string(content.substr(start, end - start)),
                 region.char_start + start, region.char_start + end,
                 region.kind, /*special=*/false, /*forced_id=*/-1, vocab);
  }
}

}  // namespace

std::string_view region_kind_name(RegionKind kind) {
  switch (kind) {
    case RegionKind::kPrompt: return "PROMPT";
    case RegionKind::kReasoning: return "REASONING";
    case RegionKind::kCode: return "CODE";
  }
  return "?";
}

bool is_valid_utf8(std::string_view text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    std::size_t len;
    if (c < 0x80) len = 1;
    else if ((c & 0xe0) == 0xc0) len = 2;
    else if ((c & 0xf0) == 0xe0) len = 3;
    else if ((c & 0xf8) == 0xf0) len = 4;
    else return false;
    if (i + len > n) return false;
    for (std::size_t k = 1; k < len; ++k) {
      if ((static_cast<unsigned char>(text[i + k]) & 0xc0) != 0x80) return false;
    }
    // Reject overlong encodings and out-of-range code points.
    if (len == 2 && c < 0xc2) return false;
    if (len == 3 && c == 0xe0 &&
        static_cast<unsigned char>(text[i + 1]) < 0xa0) return false;
    if (len == 4 && (c > 0xf4 || (c == 0xf0 &&
        static_cast<unsigned char>(text[i + 1]) < 0x90))) return false;
    i += len;
  }
  return true;
}

std::vector<std::pair<std::size_t, std::size_t>> split_words(
    std::string_view text) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  std::size_t i = 0;
  const std::size_t n = text.size();
  while (i < n) {
    const unsigned char c = static_cast<unsigned char>(text[i]);
    if (is_space_byte(c)) {
      ++i;
      continue;
    }
    if (is_word_byte(c)) {
      std::size_t start = i;
      while (i < n && is_word_byte(static_cast<unsigned char>(text[i]))) ++i;
      out.emplace_back(start, i);
      continue;
    }
    out.emplace_back(i, i + 1);
    ++i;
  }
  return out;
}

TokenSequence encode(std::string_view text, const std::vector<Region>& regions,
                     const Vocabulary& vocab) {
  if (!is_valid_utf8(text))
    throw std::invalid_argument("invalid utf-8: encode input");
  std::size_t cursor = 0;
  int last_kind = -1;
  TokenSequence seq;
  seq.vocab_id = vocab.fingerprint();
  for (const Region& region : regions) {
    if (region.char_start > region.char_end || region.char_end > text.size())
      throw std::invalid_argument("region overlap: region out of bounds");
    if (region.char_start < cursor)
      throw std::invalid_argument("region overlap: regions must be disjoint and sorted");
    if (static_cast<int>(region.kind) <= last_kind)
      throw std::invalid_argument(
          "region overlap: regions must be ordered PROMPT < REASONING < CODE");
    last_kind = static_cast<int>(region.kind);
    if (region.char_start > cursor) {
      std::string_view gap = text.substr(cursor, region.char_start - cursor);
      const TokenId id = delimiter_id(gap);
      if (id < 0)
        throw std::invalid_argument(
            "region overlap: gap between regions is not a delimiter tag");
      append_token(seq, std::string(gap), cursor, region.char_start,
                   region.kind, /*special=*/true, id, vocab);
    }
    tokenize_region(seq, text, region, vocab);
    cursor = region.char_end;
  }
  if (cursor != text.size())
    throw std::invalid_argument("region overlap: regions must cover the text");
  return seq;
}

TokenSequence encode_code(std::string_view text, const Vocabulary& vocab) {
  return encode(text, {{RegionKind::kCode, 0, text.size()}}, vocab);
}

std::string decode(const std::vector<TokenId>& ids, const Vocabulary& vocab) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (i > 0) out += ' ';
    out += vocab.surface_of(ids[i]);
  }
  return out;
}

std::string splice_region(std::string_view text, const TokenSequence& seq,
                          std::size_t char_start, std::size_t char_end,
                          const std::vector<TokenId>& ids,
                          const Vocabulary& vocab) {
  if (ids.size() != seq.size())
    throw std::invalid_argument("splice_region: id/sequence length mismatch");
  if (char_end > text.size() || char_start > char_end)
    throw std::out_of_range("splice_region: range out of bounds");
  std::string out;
  std::size_t cursor = char_start;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    const auto [ts, te] = seq.char_offsets[i];
    if (te <= char_start || ts >= char_end) continue;
    if (ts > cursor) out += text.substr(cursor, ts - cursor);
    // Unchanged ids keep their exact source surface (it may be out of
    // vocabulary); replaced ids take the vocabulary surface.
    if (ids[i] == seq.tokens[i]) out += seq.surfaces[i];
    else out += vocab.surface_of(ids[i]);
    cursor = te;
  }
  if (cursor < char_end) out += text.substr(cursor, char_end - cursor);
  return out;
}

}  // namespace astmask::text
