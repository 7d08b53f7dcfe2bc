#pragma once

#include <string>
#include <string_view>

#include "gammoid/problem.hpp"

namespace gammoid {

/// Parses the line-oriented graph format:
///
///     # comment
///     node <id>
///     edge <tail> <head> [multiplicity]
///     B <id>...
///     I <id>...
///     b <id>
///     mode <directed-edge|directed-vertex|undirected-edge|undirected-vertex>
///
/// Throws ParseError (with the offending line) on unknown directives, bad
/// arity, undeclared vertices, a repeated `b` or a bad multiplicity.
[[nodiscard]] LinkageProblem parse_graph(std::string_view text);

/// Inverse of parse_graph. One `edge` line per edge so edge ids survive.
[[nodiscard]] std::string write_graph(const LinkageProblem& problem);

[[nodiscard]] LinkageProblem read_graph_file(const std::string& path);

}  // namespace gammoid
