#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "astmask/text/vocab.hpp"

namespace astmask::text {

enum class RegionKind { kPrompt, kReasoning, kCode };

std::string_view region_kind_name(RegionKind kind);

// One contiguous segment of the concatenated record text. Regions are
// disjoint, ordered PROMPT < REASONING < CODE, and cover the text except for
// the delimiter tags sitting in the gaps between them.
struct Region {
  RegionKind kind;
  std::size_t char_start;  // inclusive
  std::size_t char_end;    // exclusive
};

// Token view of one record. Parallel arrays of length L; char offsets are
// exact byte ranges into the encoded text, so the original layout can be
// reconstructed around any subset of replaced tokens.
struct TokenSequence {
  std::vector<TokenId> tokens;
  std::vector<std::string> surfaces;
  std::vector<std::pair<std::size_t, std::size_t>> char_offsets;
  std::vector<RegionKind> region_of;
  // Delimiter tokens; exempt from every masking operation.
  std::vector<std::uint8_t> special;
  std::string vocab_id;

  std::size_t size() const { return tokens.size(); }
};

// Splits text into word and punctuation tokens: words are runs of ASCII
// alphanumerics/underscore plus any non-ASCII bytes (multi-byte UTF-8 stays
// whole), every other printable character is a single token. Offsets are
// exact; whitespace is skipped.
std::vector<std::pair<std::size_t, std::size_t>> split_words(
    std::string_view text);

// Tokenizes region-segmented text. CODE regions tokenize on mini-language
// lexeme boundaries (falling back to word splitting when the region does not
// lex); PROMPT/REASONING use word splitting. Gap bytes between regions must
// spell a delimiter tag, which encodes to its reserved id and is marked
// special. Throws std::invalid_argument for malformed regions ("region
// overlap: ...") and invalid UTF-8 ("invalid utf-8: ...").
TokenSequence encode(std::string_view text, const std::vector<Region>& regions,
                     const Vocabulary& vocab);

// All-CODE convenience: one region covering the whole text.
TokenSequence encode_code(std::string_view text, const Vocabulary& vocab);

// Surfaces joined by single spaces (inter-token whitespace is collapsed).
std::string decode(const std::vector<TokenId>& ids, const Vocabulary& vocab);

// Rebuilds the text of [char_start, char_end) with each token's surface
// taken from `ids` (byte layout between tokens preserved from `text`).
std::string splice_region(std::string_view text, const TokenSequence& seq,
                          std::size_t char_start, std::size_t char_end,
                          const std::vector<TokenId>& ids,
                          const Vocabulary& vocab);

bool is_valid_utf8(std::string_view text);

}  // namespace astmask::text
