#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ccdim/cc_dimension.hpp"
#include "ccdim/graph.hpp"
#include "ccdim/separators.hpp"

namespace ccdim {

// The right-angled Coxeter group of a graph: one involutive generator per
// vertex, two generators commuting exactly when their vertices are adjacent.
struct RacgPresentation {
  std::vector<std::string> generators;  // host vertex order
  std::vector<std::string> relations;   // involutions "a^2", then commutators "[a,b]" per edge
};

RacgPresentation presentation(const Graph& g);

// Dimension of the Davis cube complex of the group: its cubes correspond to
// the cliques of the graph, so this is the maximum clique cardinality.
int davis_dimension(const Graph& g);

enum class DecompKind { CliqueLeaf, FreeProduct, Amalgam };
std::string_view to_string(DecompKind k);

// Splitting tree of the group. A CliqueLeaf carries a finite group of order
// 2^|support|; a FreeProduct splits over the components of its support; an
// Amalgam glues the groups of E_i ∪ S over the edge group of the cut S, with
// one child per component E_i. Supports are in host indices throughout, and
// each child support is a proper subset of its parent's, so the tree is
// finite.
struct DecompNode {
  DecompKind kind = DecompKind::CliqueLeaf;
  VertexSet support;
  std::optional<Separator> cut;      // Amalgam only
  std::vector<DecompNode> children;  // component order

  VertexSet edge_group_support() const;  // Amalgam only: the cut set
  std::uint64_t leaf_order() const;      // CliqueLeaf only: 2^|support|
  int leaf_count() const;
  int depth() const;
};

DecompNode decompose(const Graph& g, int budget = kDefaultBudget);

// Asymptotic-dimension upper bound along the splitting tree: cliques score 0,
// a free product scores max{1, children}, an amalgam over the cut S scores
// max{children, B(S) + 1}. With optimize the cut minimizing the expression is
// taken at every level instead of the canonical one.
int recursive_bound(const Graph& g, bool optimize = false, int budget = kDefaultBudget);

enum class Classification {
  Finite,           // dim_cc 0 and connected: |W| = 2^n
  VirtuallyFree,    // dim_cc <= 1 otherwise: free products of chordal pieces
  AsdimExactlyTwo,  // bounds pinch at 2
  AsdimAtLeastTwo,  // dim_cc >= 2, upper bound open
};
std::string_view to_string(Classification c);

struct AnalysisReport {
  int vertex_count = 0;
  int edge_count = 0;
  bool connected = false;
  int m_c = 0;
  CcResult cc;
  DimCcResult dim_cc;
  int davis_dimension = 0;
  int recursive_bound = 0;  // canonical cuts
  int combined_upper_bound = 0;
  int asdim_lower_bound = 0;
  std::optional<int> asdim_exact;  // present iff the bounds agree
  Classification classification = Classification::Finite;
  std::optional<VertexSet> long_cycle;  // induced cycle of length >= 4 if any
};

// Everything the library knows about asdim of the group of g. The upper bound
// is the best of dim_cc (raised to 1 for disconnected graphs, where the group
// is an infinite free product), the Davis-complex dimension, and the recursive
// splitting bound. The lower bound is 0 for a clique, 2 in the presence of an
// induced long cycle, 1 otherwise.
AnalysisReport analyze(const Graph& g, int budget = kDefaultBudget);

}  // namespace ccdim
