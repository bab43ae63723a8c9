#include "astmask/minilang/spans.hpp"

namespace astmask::minilang {

namespace {

void walk(const AstNode& node, const LabelFilter& filter,
          std::vector<CharSpan>& out) {
  if (!filter || filter->count(node.label))
    out.push_back({node.char_start, node.char_end, node.label});
  for (const AstNode& child : node.children) walk(child, filter, out);
}

}  // namespace

std::vector<CharSpan> collect_char_spans(const AstNode& root,
                                         const LabelFilter& filter) {
  std::vector<CharSpan> out;
  if (root.label == NodeLabel::kModule && root.children.empty()) return out;
  walk(root, filter, out);
  return out;
}

}  // namespace astmask::minilang
