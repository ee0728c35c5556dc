#pragma once

#include <vector>

#include "ccdim/graph.hpp"

namespace ccdim {

// The set of all maximal cliques of a host graph. It is the unique clique
// cover in which every member is maximal and every clique of the host is
// contained in some member.
struct CliqueTwin {
  std::vector<VertexSet> cliques;  // lex order on ascending index sequences

  int size() const { return static_cast<int>(cliques.size()); }
};

// Bron-Kerbosch with pivoting; output in canonical (lex) order.
CliqueTwin maximal_cliques(const Graph& g);

// Number of maximal cliques, >= 1 for every (nonempty) graph.
int m_c(const Graph& g);

}  // namespace ccdim
