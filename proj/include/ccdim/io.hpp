#pragma once

#include <string>
#include <string_view>

#include "ccdim/graph.hpp"

namespace ccdim {

// Edge list format, one statement per line:
//   - '#' starts a comment that runs to the end of the line
//   - one token declares an isolated vertex, two tokens declare an edge
//   - tokens match [A-Za-z0-9_.^-]+
//   - vertices appear in first-mention order; duplicate edges are ignored
Graph parse_edgelist(std::string_view text);

// Serialization that parse_edgelist maps back to the identical graph: every
// vertex on its own line (pinning the vertex order), then the edges.
std::string to_edgelist(const Graph& g);

// Strict subset of Graphviz DOT: `graph name? { v; u -- v; ... }`.
// Directed edges, attributes, subgraphs, quoting and other DOT features are
// rejected with UnsupportedDotFeature.
Graph parse_dot_subset(std::string_view text);

}  // namespace ccdim
