#pragma once

#include <cstddef>
#include <optional>
#include <unordered_set>
#include <vector>

#include "astmask/minilang/ast.hpp"

namespace astmask::minilang {

struct CharSpan {
  std::size_t char_start;  // inclusive
  std::size_t char_end;    // exclusive
  NodeLabel label;

  bool operator==(const CharSpan&) const = default;
};

using LabelFilter = std::optional<std::unordered_set<NodeLabel>>;

// Pre-order walk emitting one (start, end, label) entry per visited node.
// A filter restricts which labels emit an entry (children are still
// visited); std::nullopt admits every node. A module with no statements
// yields an empty list.
std::vector<CharSpan> collect_char_spans(const AstNode& root,
                                         const LabelFilter& filter = std::nullopt);

}  // namespace astmask::minilang
