#pragma once

#include <string>
#include <string_view>

#include "chordspec/graph.hpp"

namespace chordspec {

/// Header-less graph6: N(n) followed by the upper triangle of the adjacency
/// matrix in column order, six bits per printable character (offset 63).
/// Orders 63 and 64 use the four-byte `~` length prefix.
std::string to_graph6(const Graph& g);

/// Throws std::invalid_argument on malformed or truncated input. A single
/// trailing newline is accepted.
Graph from_graph6(std::string_view text);

}  // namespace chordspec
