#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ccdim/graph.hpp"
#include "ccdim/separators.hpp"

namespace ccdim {

// Default cap on the vertex count of exhaustive subgraph scans. The scans are
// exponential; anything above the cap is rejected with BudgetExceeded.
inline constexpr int kDefaultBudget = 16;

// Clique-connectedness CC of a graph. For a connected non-clique the witness
// is the lex-least cut realizing the minimum, and value = m_c of the subgraph
// induced on that cut. For a disconnected graph the value is the minimum over
// components; witness_component names the first component realizing it and no
// cut witness is reported (the host has no minimal cuts of its own).
struct CcResult {
  int value = 0;
  std::optional<Separator> witness_cut;
  std::optional<VertexSet> witness_component;
};

// CC of a connected graph: 0 for a clique, else the minimum of m_c over the
// subgraphs induced on the inclusion-minimal vertex cuts. Throws NotConnected.
CcResult cc_connected(const Graph& g);

// CC of an arbitrary graph (componentwise minimum).
CcResult cc(const Graph& g);

// dim_CC: the maximum of CC over the induced subgraphs of g. Scanning the
// connected ones suffices, because a disconnected subgraph scores the minimum
// of its components. witness_subgraph is the lex-least connected maximizer;
// witness_cut is the argmin cut inside it (absent iff the value is 0). All
// sets are expressed in host indices.
struct DimCcResult {
  int value = 0;
  VertexSet witness_subgraph;
  std::optional<Separator> witness_cut;
};

DimCcResult dim_cc(const Graph& g, int budget = kDefaultBudget);

// A vertex set inducing a chordless cycle of length >= 4, if one exists;
// deterministic for a given graph. Absence is exactly chordality.
std::optional<VertexSet> find_induced_long_cycle(const Graph& g);

// For a connected non-clique g and its canonical minimal cut S (the
// cc_connected witness), checks the strict decrease of CC and dim_CC across
// the cut and the monotonicity of dim_CC on the subgraphs of the cut set.
struct IncreasingChecks {
  struct Check {
    std::string name;
    bool passed;
    std::string detail;
  };

  VertexSet cut;
  std::vector<Check> checks;

  bool all_passed() const;
};

IncreasingChecks assert_increasing_properties(const Graph& g, int budget = kDefaultBudget);

}  // namespace ccdim
