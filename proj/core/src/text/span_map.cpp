#include "astmask/text/span_map.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace astmask::text {

std::vector<TokenSpan> char_spans_to_token_spans(
    const std::vector<minilang::CharSpan>& spans, const TokenSequence& seq,
    const MapOptions& options) {
  std::vector<TokenSpan> out;
  std::map<std::pair<std::size_t, std::size_t>, bool> seen;

  const auto& offsets = seq.char_offsets;
  for (const minilang::CharSpan& span : spans) {
    if (span.char_start > span.char_end)
      throw std::out_of_range("span out of bounds: inverted char span");
    // lo: first token whose char interval intersects the span, i.e. with
    // char_end > span.char_start. hi: first token at or past span.char_end.
    const std::size_t lo = static_cast<std::size_t>(
        std::upper_bound(offsets.begin(), offsets.end(), span.char_start,
                         [](std::size_t value, const auto& tok) {
                           return value < tok.second;
                         }) -
        offsets.begin());
    const std::size_t hi = static_cast<std::size_t>(
        std::lower_bound(offsets.begin(), offsets.end(), span.char_end,
                         [](const auto& tok, std::size_t value) {
                           return tok.first < value;
                         }) -
        offsets.begin());
    if (lo >= hi) continue;  // covers no tokens
    (void)token_count;
    for (std::size_t i = lo; i < hi; ++i) {
      if (seq.region_of[i] != RegionKind::kCode || seq.special[i])
        throw std::invalid_argument("span covers non-code tokens");
    }
    if (options.length_filter && hi - lo < 2) continue;
    if (options.dedup) {
      auto [it, inserted] = seen.emplace(std::make_pair(lo, hi), true);
      if (!inserted) continue;
    }
    out.push_back({lo, hi, span.label});
  }
  return out;
}

}  // namespace astmask::text
