#pragma once

#include <string>

#include "astmask/minilang/ast.hpp"

namespace astmask::minilang {

// Canonical source form: 4-space indentation, one statement per line,
// minimal parentheses. parse(pretty_print(tree)) reproduces the tree up to
// label-and-shape equality.
std::string pretty_print(const AstNode& root);

}  // namespace astmask::minilang
