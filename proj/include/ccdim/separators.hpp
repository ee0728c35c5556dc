#pragma once

#include <vector>

#include "ccdim/graph.hpp"

namespace ccdim {

// An inclusion-minimal vertex cut of a connected host graph together with the
// components it leaves behind. Minimality forces every cut vertex to have a
// neighbor in every component.
struct Separator {
  VertexSet cut;
  std::vector<VertexSet> components;  // smallest-member order, >= 2 entries
};

// All inclusion-minimal vertex cuts, in lex order of the cut sets. The list
// is empty exactly when g is a clique. Throws NotConnected on disconnected
// input.
//
// Strategy: enumerate every pairwise-minimal separator by close-neighborhood
// expansion, then keep the members with no proper separator subset.
std::vector<Separator> vertex_cuts(const Graph& g);

// True iff removing s disconnects g and no proper subset of s does.
bool is_vertex_cut(const Graph& g, const VertexSet& s);

}  // namespace ccdim
