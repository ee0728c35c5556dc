#pragma once

// Index-level graph kernels shared by the enumeration modules. Everything
// here works on adjacency rows plus a universe mask, so the same routines
// serve the host graph and any induced subgraph without re-indexing.

#include <span>
#include <vector>

#include "ccdim/detail/bitops.hpp"

namespace ccdim::detail {

using AdjView = std::span<const Mask>;

struct MaskList {
  Mask data[64];
  int count = 0;

  void clear() { count = 0; }
  void push(Mask m) { data[count++] = m; }
  int size() const { return count; }
  Mask operator[](int i) const { return data[i]; }
  const Mask* begin() const { return data; }
  const Mask* end() const { return data + count; }
};

Mask component_of(AdjView adj, Mask sub, int seed);
void components_within(AdjView adj, Mask sub, MaskList& out);  // smallest-member order
bool connected_within(AdjView adj, Mask sub);
bool clique_within(AdjView adj, Mask sub);

// N(set) within sub, excluding set itself.
Mask neighbors_of_set(AdjView adj, Mask set, Mask sub);

int count_max_cliques(AdjView adj, Mask sub);
void collect_max_cliques(AdjView adj, Mask sub, std::vector<Mask>& out);  // lex order
int max_clique_size(AdjView adj, Mask sub);

// All pairwise-minimal separators of the connected induced subgraph on sub
// (close-neighborhood expansion), deduplicated, unordered.
std::vector<Mask> minimal_separators(AdjView adj, Mask sub);

// Inclusion-minimal vertex cuts: the separators with no proper separator
// subset, in lex order.
std::vector<Mask> minimal_cuts(AdjView adj, Mask sub);

struct CcMask {
  int value = 0;
  Mask cut = 0;
  bool has_cut = false;
};

// Clique-connectedness of the connected induced subgraph on sub: 0 for a
// clique, otherwise the minimum maximal-clique count over the inclusion-
// minimal cuts, with the lex-least argmin cut as witness.
CcMask cc_within(AdjView adj, Mask sub);

// Componentwise minimum for arbitrary sub; tracks the argmin component.
struct CcAnyMask {
  int value = 0;
  Mask component = 0;  // argmin component (first in smallest-member order)
  bool split = false;  // sub was disconnected
};
CcAnyMask cc_any_within(AdjView adj, Mask sub);

// max CC over nonempty connected submasks of sub (the subgraph scan behind
// the dimension), without witnesses.
int dim_cc_value_within(AdjView adj, Mask sub);

}  // namespace ccdim::detail
