#pragma once

#include <cstddef>
#include <vector>

#include "astmask/minilang/spans.hpp"
#include "astmask/text/tokenizer.hpp"

namespace astmask::text {

// Half-open token-index interval covering one AST construct.
struct TokenSpan {
  std::size_t start;  // token index, inclusive
  std::size_t end;    // token index, exclusive
  minilang::NodeLabel label;

  std::size_t length() const { return end - start; }
  bool operator==(const TokenSpan&) const = default;
};

struct MapOptions {
  // Drop spans shorter than two tokens (trivial leaves).
  bool length_filter = true;
  // Collapse duplicate token ranges, keeping the first (shallowest) label.
  bool dedup = true;
};

// Converts character spans into token spans: each char span maps to the
// minimal token range covering every token whose char interval intersects
// it (partial overlaps round outward to whole tokens). Spans covering zero
// tokens are dropped, then the filters above run. Input order is preserved,
// so pre-order char spans keep parents ahead of children.
//
// Throws std::out_of_range for inverted spans and std::invalid_argument if
// a span's token range touches non-CODE or delimiter tokens.
std::vector<TokenSpan> char_spans_to_token_spans(
    const std::vector<minilang::CharSpan>& spans, const TokenSequence& seq,
    const MapOptions& options = {});

}  // namespace astmask::text
