#pragma once

#include <string>

#include "astmask/minilang/ast.hpp"
#include "astmask/rng.hpp"

namespace astmask::minilang {

// Knobs for the grammar-driven random program generator. Defaults produce
// small programs over a compact identifier pool so synthetic corpora share
// local token patterns.
struct GenOptions {
  int max_block_depth = 2;
  int max_expr_depth = 2;
  int min_module_stmts = 1;
  int max_module_stmts = 5;
  int max_block_stmts = 3;
  int max_call_args = 2;
  int max_params = 2;
  bool allow_strings = true;
};

// Generates a random module exercising every construct of the grammar:
// assignments, calls, if/elif/else, for, while, def and return.
AstNode generate_program(Rng& rng, const GenOptions& options = {});

// generate_program followed by pretty_print.
std::string generate_source(Rng& rng, const GenOptions& options = {});

}  // namespace astmask::minilang
