#pragma once

#include <string_view>
#include <vector>

#include "ccdim/graph.hpp"

namespace ccdim {

// Named generator families:
//   clique n                complete graph K_n, n >= 1
//   cycle n                 cycle C_n, n >= 3
//   path n                  path P_n, n >= 1
//   star k                  star K_{1,k}, k >= 1 (center plus k leaves)
//   complete_bipartite m n  K_{m,n}, m, n >= 1
//   stacked_cycles k l      l disjoint k-cycles (k >= 3, l >= 1) stacked with
//                           rung edges between equal positions of consecutive
//                           layers
//   random n p seed         Erdos-Renyi-style graph: each pair becomes an edge
//                           when the next draw of a seeded mt19937_64 modulo
//                           100 falls below the integer percentage p
//
// The same parameters always produce the same graph, labels included.
Graph gen_family(std::string_view family, const std::vector<long long>& params);

}  // namespace ccdim
