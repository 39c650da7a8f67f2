#pragma once

#include <string>

#include "pdfa/io/text_format.hpp"

namespace pdfa::io {

/// Graphviz digraph of the transition structure. Parallel edges between the
/// same pair of states share one edge with a comma-separated label; undefined
/// transitions are omitted; accepting states are double circles and the
/// initial state gets an arrow from an invisible point node.
std::string to_dot(const AutomatonFile& file, const std::string& graph_name = "automaton");

} // namespace pdfa::io
