#include <vector>

#include "ccdim/cliques.hpp"
#include "ccdim/families.hpp"
#include "ccdim/io.hpp"
#include "ccdim/oracles.hpp"
#include "doctest.h"

using namespace ccdim;

TEST_CASE("maximal_cliques on the standard families") {
  SUBCASE("complete graph has a single clique") {
    for (int n = 1; n <= 8; ++n) {
      const Graph g = gen_family("clique", {n});
      const CliqueTwin t = maximal_cliques(g);
      REQUIRE(t.size() == 1);
      CHECK(t.cliques[0] == g.vertices());
      CHECK(m_c(g) == 1);
    }
  }
  SUBCASE("cycle of length >= 4 has its edges") {
    const Graph g = gen_family("cycle", {4});
    const CliqueTwin t = maximal_cliques(g);
    REQUIRE(t.size() == 4);
    for (const VertexSet& c : t.cliques) CHECK(c.size() == 2);
    CHECK(t.cliques[0] == VertexSet::of(g, {"v1", "v2"}));
    CHECK(t.cliques[1] == VertexSet::of(g, {"v1", "v4"}));
    CHECK(t.cliques[2] == VertexSet::of(g, {"v2", "v3"}));
    CHECK(t.cliques[3] == VertexSet::of(g, {"v3", "v4"}));
  }
  SUBCASE("path") {
    const Graph g = parse_edgelist("a b\nb c\n");
    const CliqueTwin t = maximal_cliques(g);
    REQUIRE(t.size() == 2);
    CHECK(t.cliques[0] == VertexSet::of(g, {"a", "b"}));
    CHECK(t.cliques[1] == VertexSet::of(g, {"b", "c"}));
  }
  SUBCASE("edgeless graph has one singleton per vertex") {
    const Graph g = build_graph({"a", "b", "c", "d"}, {});
    const CliqueTwin t = maximal_cliques(g);
    REQUIRE(t.size() == 4);
    for (int v = 0; v < 4; ++v) CHECK(t.cliques[v] == VertexSet(1ull << v));
  }
}

TEST_CASE("maximal_cliques mixed graph, lex order") {
  // Triangle a-b-c plus pendant d on c and an isolated vertex e.
  const Graph g = parse_edgelist("a b\nb c\na c\nc d\ne\n");
  const CliqueTwin t = maximal_cliques(g);
  REQUIRE(t.size() == 3);
  CHECK(t.cliques[0] == VertexSet::of(g, {"a", "b", "c"}));
  CHECK(t.cliques[1] == VertexSet::of(g, {"c", "d"}));
  CHECK(t.cliques[2] == VertexSet::of(g, {"e"}));
}

TEST_CASE("every reported clique is maximal and every vertex is covered") {
  const Graph g = gen_family("random", {9, 45, 12345});
  const CliqueTwin t = maximal_cliques(g);
  Mask covered = 0;
  for (const VertexSet& c : t.cliques) {
    CHECK(is_clique(g, c));
    covered |= c.mask();
    for (int v = 0; v < g.size(); ++v) {
      if (c.contains(v)) continue;
      bool dominates = true;
      for (const int u : c.indices()) dominates = dominates && g.adjacent(u, v);
      CHECK(!dominates);
    }
  }
  CHECK(covered == g.full_mask());
}

TEST_CASE("maximal_cliques agrees with the subset-scan oracle") {
  for (const long long seed : {1, 2, 3, 4, 5}) {
    const Graph g = gen_family("random", {8, 50, seed});
    const CliqueTwin fast = maximal_cliques(g);
    const CliqueTwin slow = oracle_maximal_cliques(g);
    CHECK(fast.cliques == slow.cliques);
  }
}
