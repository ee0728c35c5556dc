#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "ccdim/cliques.hpp"
#include "ccdim/graph.hpp"
#include "ccdim/separators.hpp"

namespace ccdim {

// Definition-literal brute-force counterparts of the fast enumerations. They
// share no code with the implementations they check: subsets are scanned
// directly and every condition is tested by its definition. Strictly for
// validation; all of them are exponential with small hard caps.

// All maximal cliques by scanning every vertex subset. Cap: 12 vertices.
CliqueTwin oracle_maximal_cliques(const Graph& g);

// All inclusion-minimal vertex cuts by scanning every subset and filtering
// non-minimal ones against all proper subsets. Cap: 8 vertices.
std::vector<Separator> oracle_vertex_cuts(const Graph& g);

// dim_cc over every nonempty induced subgraph, including disconnected ones
// with their componentwise-minimum CC. The default cap of 8 vertices can be
// raised to at most 12 for dedicated runs.
int oracle_dim_cc(const Graph& g, int max_n = 8);

// Exhaustive labeled corpus on vertices v1..vn. Graphs are encoded by an edge
// mask whose bit k stands for the k-th pair (i,j), i < j, in lexicographic
// order; enumeration is in increasing mask order. Cap: 7 vertices.
std::uint64_t graph_count(int n);
Graph graph_from_edge_mask(int n, std::uint64_t mask);
std::uint64_t edge_mask_of(const Graph& g);
void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& fn);

// One failed property instance, replayable via graph_from_edge_mask.
struct CheckFailure {
  int n = 0;
  std::uint64_t edge_mask = 0;
  std::string edges;  // human-readable edge list
  std::string property;
  std::string expected;
  std::string actual;

  friend bool operator==(const CheckFailure&, const CheckFailure&) = default;
};

struct CheckReport {
  std::string suite;
  long long instances = 0;  // graphs visited
  std::vector<CheckFailure> failures;

  bool passed() const { return failures.empty(); }
};

// Property suites over the exhaustive corpus up to max_n vertices. Each
// returns a report with every violation found; all of them are expected to
// come back clean.
CheckReport check_clique_oracle(int max_n);
CheckReport check_separator_oracle(int max_n);    // connected graphs
CheckReport check_cc_basics(int max_n);
CheckReport check_dim_cc_oracle(int max_n);
CheckReport check_monotonicity(int max_n);
CheckReport check_cycle_characterization(int max_n);  // connected graphs
CheckReport check_chordality(int max_n);
CheckReport check_bounds(int max_n);              // connected graphs
CheckReport check_decomposition(int max_n);
CheckReport check_classification(int max_n);

// Every suite above in one aggregated report. Cap: 6 vertices (the combined
// run is a few CPU-minutes there; individual suites accept up to 7).
CheckReport run_lemma_suite(int max_n);

}  // namespace ccdim
