#include <algorithm>
#include <random>
#include <vector>

#include "ccdim/cc_dimension.hpp"
#include "ccdim/families.hpp"
#include "ccdim/io.hpp"
#include "doctest.h"

using namespace ccdim;

namespace {

// Independent lex comparison on ascending index sequences.
bool lex_before(const VertexSet& a, const VertexSet& b) {
  const auto ia = a.indices();
  const auto ib = b.indices();
  return std::lexicographical_compare(ia.begin(), ia.end(), ib.begin(), ib.end());
}

bool induces_cycle(const Graph& g, const VertexSet& s) {
  if (s.size() < 4) return false;
  const Graph sub = induced_subgraph(g, s);
  if (!is_connected(sub)) return false;
  for (int v = 0; v < sub.size(); ++v) {
    if (neighborhood(sub, v).size() != 2) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("cc of connected graphs") {
  SUBCASE("cliques score zero with no witness") {
    for (int n = 1; n <= 6; ++n) {
      const CcResult r = cc_connected(gen_family("clique", {n}));
      CHECK(r.value == 0);
      CHECK(!r.witness_cut.has_value());
      CHECK(!r.witness_component.has_value());
    }
  }
  SUBCASE("C4 scores two across a diagonal") {
    const Graph g = gen_family("cycle", {4});
    const CcResult r = cc_connected(g);
    CHECK(r.value == 2);
    REQUIRE(r.witness_cut.has_value());
    CHECK(r.witness_cut->cut == VertexSet::of(g, {"v1", "v3"}));
  }
  SUBCASE("P4 scores one at an interior vertex") {
    const Graph g = gen_family("path", {4});
    const CcResult r = cc_connected(g);
    CHECK(r.value == 1);
    REQUIRE(r.witness_cut.has_value());
    CHECK(r.witness_cut->cut == VertexSet::of(g, {"v2"}));
  }
  SUBCASE("two triangles glued along a vertex score one") {
    const Graph g = parse_edgelist("a b\nb c\na c\nc d\nc e\nd e\n");
    const CcResult r = cc_connected(g);
    CHECK(r.value == 1);
    REQUIRE(r.witness_cut.has_value());
    CHECK(r.witness_cut->cut == VertexSet::of(g, {"c"}));
  }
  SUBCASE("value is m_c of the cut subgraph") {
    // Two 4-cliques glued along an edge: the only minimal cut is the shared
    // edge, a single clique.
    const Graph g = parse_edgelist(
        "a b\na c\na d\nb c\nb d\nc d\n"
        "c e\nc f\nd e\nd f\ne f\n");
    const CcResult r = cc_connected(g);
    CHECK(r.value == 1);
    REQUIRE(r.witness_cut.has_value());
    CHECK(r.witness_cut->cut == VertexSet::of(g, {"c", "d"}));
  }
  SUBCASE("throws on disconnected input") {
    CHECK_THROWS_AS(cc_connected(build_graph({"a", "b"}, {})), Error);
  }
}

TEST_CASE("cc of disconnected graphs is the componentwise minimum") {
  SUBCASE("two cliques") {
    const Graph g = parse_edgelist("a b\nb c\na c\nx y\ny z\nx z\n");
    const CcResult r = cc(g);
    CHECK(r.value == 0);
    CHECK(!r.witness_cut.has_value());
    REQUIRE(r.witness_component.has_value());
    CHECK(*r.witness_component == VertexSet::of(g, {"a", "b", "c"}));
  }
  SUBCASE("clique beats a cycle") {
    const Graph g = parse_edgelist("a b\nb c\na c\np q\nq r\nr s\ns p\n");
    const CcResult r = cc(g);
    CHECK(r.value == 0);
    REQUIRE(r.witness_component.has_value());
    CHECK(*r.witness_component == VertexSet::of(g, {"a", "b", "c"}));
  }
  SUBCASE("two cycles tie at two, first component wins") {
    const Graph g = parse_edgelist("a b\nb c\nc d\nd a\np q\nq r\nr s\ns t\nt p\n");
    const CcResult r = cc(g);
    CHECK(r.value == 2);
    CHECK(!r.witness_cut.has_value());
    REQUIRE(r.witness_component.has_value());
    CHECK(*r.witness_component == VertexSet::of(g, {"a", "b", "c", "d"}));
  }
  SUBCASE("connected input reduces to cc_connected") {
    const Graph g = gen_family("cycle", {5});
    const CcResult r = cc(g);
    CHECK(r.value == 2);
    CHECK(r.witness_cut.has_value());
    CHECK(!r.witness_component.has_value());
  }
}

TEST_CASE("dim_cc on the standard families") {
  for (int k = 4; k <= 9; ++k) {
    const DimCcResult r = dim_cc(gen_family("cycle", {k}));
    CHECK(r.value == 2);
  }
  for (int n = 1; n <= 8; ++n) {
    const Graph g = gen_family("clique", {n});
    const DimCcResult r = dim_cc(g);
    CHECK(r.value == 0);
    CHECK(r.witness_subgraph == VertexSet(1));  // lex-least: the first vertex
    CHECK(!r.witness_cut.has_value());
  }
  for (int n = 2; n <= 7; ++n) {
    CHECK(dim_cc(gen_family("path", {n})).value == (n >= 3 ? 1 : 0));
  }
  CHECK(dim_cc(gen_family("star", {4})).value == 1);
  CHECK(dim_cc(gen_family("complete_bipartite", {2, 2})).value == 2);
}

TEST_CASE("dim_cc witness is the lex-least connected maximizer") {
  // C4 with a pendant vertex on v1: the pendant shifts nothing, the square
  // is still the first maximizer.
  const Graph g = parse_edgelist("p v1\nv1 v2\nv2 v3\nv3 v4\nv4 v1\n");
  const DimCcResult r = dim_cc(g);
  CHECK(r.value == 2);
  CHECK(r.witness_subgraph == VertexSet::of(g, {"v1", "v2", "v3", "v4"}));
  REQUIRE(r.witness_cut.has_value());
  CHECK(r.witness_cut->cut == VertexSet::of(g, {"v1", "v3"}));

  // Brute force the contract on every graph with up to 4 vertices.
  for (int n = 1; n <= 4; ++n) {
    const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (std::uint64_t em = 0; em < (std::uint64_t{1} << pairs); ++em) {
      std::vector<std::string> labels;
      for (int i = 1; i <= n; ++i) labels.push_back("v" + std::to_string(i));
      std::vector<std::pair<std::string, std::string>> edges;
      int bit = 0;
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit)
          if ((em >> bit) & 1) edges.emplace_back(labels[i], labels[j]);
      const Graph h = build_graph(labels, edges);

      int best = 0;
      std::optional<VertexSet> first;
      std::vector<VertexSet> subsets;
      for (Mask m = 1; m < (Mask{1} << n); ++m) subsets.emplace_back(m);
      std::sort(subsets.begin(), subsets.end(), lex_before);
      for (const VertexSet& s : subsets) {
        const Graph sub = induced_subgraph(h, s);
        if (!is_connected(sub)) continue;
        const int value = cc_connected(sub).value;
        if (value > best || !first) {
          if (value > best) first.reset();
          best = std::max(best, value);
          if (!first) first = s;
        }
      }
      const DimCcResult r2 = dim_cc(h);
      CHECK(r2.value == best);
      CHECK(r2.witness_subgraph == *first);
    }
  }
}

TEST_CASE("dim_cc budget") {
  const Graph g = gen_family("cycle", {6});
  CHECK(dim_cc(g, 6).value == 2);
  CHECK_THROWS_AS(dim_cc(g, 5), Error);
  CHECK_THROWS_AS(dim_cc(g, 0), Error);
  try {
    dim_cc(g, 5);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BudgetExceeded);
  }
  try {
    dim_cc(g, -2);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::BadParams);
  }
}

TEST_CASE("dim_cc is monotone under induced subgraphs") {
  std::mt19937_64 rng(20240817);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = gen_family("random", {8, 40, static_cast<long long>(trial)});
    const Mask full = g.full_mask();
    Mask sub = rng() & full;
    if (sub == 0) sub = 1;
    const int whole = dim_cc(g).value;
    const int part = dim_cc(induced_subgraph(g, VertexSet(sub))).value;
    CHECK(part <= whole);
  }
}

TEST_CASE("find_induced_long_cycle") {
  SUBCASE("cycles return themselves") {
    for (int k = 4; k <= 8; ++k) {
      const Graph g = gen_family("cycle", {k});
      const auto cyc = find_induced_long_cycle(g);
      REQUIRE(cyc.has_value());
      CHECK(*cyc == g.vertices());
    }
  }
  SUBCASE("chordal graphs have none") {
    CHECK(!find_induced_long_cycle(gen_family("clique", {5})).has_value());
    CHECK(!find_induced_long_cycle(gen_family("path", {6})).has_value());
    CHECK(!find_induced_long_cycle(gen_family("star", {5})).has_value());
    // Triangulated square.
    CHECK(!find_induced_long_cycle(parse_edgelist("a b\nb c\nc d\nd a\na c\n")).has_value());
  }
  SUBCASE("found sets induce chordless cycles") {
    const std::vector<Graph> hosts = {
        gen_family("stacked_cycles", {4, 2}),
        gen_family("complete_bipartite", {2, 3}),
        gen_family("cycle", {7}),
        parse_edgelist("a b\nb c\nc d\nd e\ne a\nc f\n"),
    };
    for (const Graph& g : hosts) {
      const auto cyc = find_induced_long_cycle(g);
      REQUIRE(cyc.has_value());
      CHECK(induces_cycle(g, *cyc));
    }
  }
  SUBCASE("deterministic") {
    const Graph g = gen_family("stacked_cycles", {4, 3});
    const auto a = find_induced_long_cycle(g);
    const auto b = find_induced_long_cycle(g);
    REQUIRE(a.has_value());
    CHECK(*a == *b);
  }
}

TEST_CASE("assert_increasing_properties") {
  for (const char* family : {"cycle", "path"}) {
    for (const long long n : {4, 5, 6}) {
      const IncreasingChecks r = assert_increasing_properties(gen_family(family, {n}));
      CHECK(r.all_passed());
      CHECK(r.checks.size() >= 3);
      CHECK(!r.cut.empty());
      for (const auto& check : r.checks) {
        INFO(check.name, ": ", check.detail);
        CHECK(check.passed);
      }
    }
  }
  const IncreasingChecks p3 = assert_increasing_properties(gen_family("path", {3}));
  CHECK(p3.all_passed());
  CHECK(p3.cut == VertexSet(0b010));

  CHECK_THROWS_AS(assert_increasing_properties(gen_family("clique", {4})), Error);
  CHECK_THROWS_AS(assert_increasing_properties(build_graph({"a", "b"}, {})), Error);
}
