#pragma once

#include <string>

#include "treetau/graphs.hpp"

namespace treetau {

/// Parses the line-based graph format:
///   graph <n>
///   <i> <j> <weight-expr>   (1-based endpoints)
/// Tokens are separated by spaces/tabs; `#` starts a comment; blank lines are
/// skipped; a trailing `\r` per line is tolerated. Throws SyntaxError with
/// the offending line/column, IoError, or the edge-validation errors
/// (IndexOutOfRange, LoopEdge, DuplicateEdge, ZeroWeight) with the line
/// number in the message.
WeightedGraph parse_graph_text(const std::string& text);

/// Reads the file and parses it with parse_graph_text.
WeightedGraph parse_graph_file(const std::string& path);

} // namespace treetau
