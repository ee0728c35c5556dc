#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "ccdim/families.hpp"
#include "ccdim/io.hpp"
#include "ccdim/racg.hpp"
#include "doctest.h"

using namespace ccdim;

namespace {

// Word rewriting driven purely by the presentation tokens: delete squares,
// bubble-sort adjacent commuting letters. For right-angled presentations this
// reaches the shortlex normal form, so distinct normal forms are distinct
// group elements. Only used on finite (clique) groups.
struct Rewriter {
  int n = 0;
  std::vector<std::vector<bool>> commutes;

  explicit Rewriter(const RacgPresentation& p) : n(static_cast<int>(p.generators.size())) {
    std::map<std::string, int> index;
    for (int i = 0; i < n; ++i) index.emplace(p.generators[i], i);
    commutes.assign(n, std::vector<bool>(n, false));
    int involutions = 0;
    for (const std::string& rel : p.relations) {
      if (const auto caret = rel.find("^2"); caret != std::string::npos && rel.front() != '[') {
        REQUIRE(index.count(rel.substr(0, caret)) == 1);
        ++involutions;
        continue;
      }
      REQUIRE(rel.front() == '[');
      REQUIRE(rel.back() == ']');
      const auto comma = rel.find(',');
      REQUIRE(comma != std::string::npos);
      const int a = index.at(rel.substr(1, comma - 1));
      const int b = index.at(rel.substr(comma + 1, rel.size() - comma - 2));
      commutes[a][b] = commutes[b][a] = true;
    }
    REQUIRE(involutions == n);
  }

  std::vector<int> normalize(std::vector<int> w) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t i = 0; i + 1 < w.size(); ++i) {
        if (w[i] == w[i + 1]) {
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(i), w.begin() + static_cast<std::ptrdiff_t>(i) + 2);
          changed = true;
          break;
        }
        if (w[i] > w[i + 1] && commutes[w[i]][w[i + 1]]) {
          std::swap(w[i], w[i + 1]);
          changed = true;
          break;
        }
      }
    }
    return w;
  }

  // Order of the group by closure under right multiplication. Terminates only
  // for finite groups; capped to catch runaways.
  std::uint64_t order(std::uint64_t cap = 1u << 12) const {
    std::set<std::vector<int>> seen{{}};
    std::queue<std::vector<int>> todo;
    todo.push({});
    while (!todo.empty()) {
      const std::vector<int> w = todo.front();
      todo.pop();
      for (int gen = 0; gen < n; ++gen) {
        std::vector<int> next = w;
        next.push_back(gen);
        next = normalize(std::move(next));
        if (seen.insert(next).second) {
          REQUIRE(seen.size() <= cap);
          todo.push(next);
        }
      }
    }
    return seen.size();
  }
};

}  // namespace

TEST_CASE("presentation lists involutions then commutators") {
  SUBCASE("single vertex") {
    const RacgPresentation p = presentation(build_graph({"a"}, {}));
    CHECK(p.generators == std::vector<std::string>{"a"});
    CHECK(p.relations == std::vector<std::string>{"a^2"});
  }
  SUBCASE("two isolated vertices") {
    const RacgPresentation p = presentation(build_graph({"a", "b"}, {}));
    CHECK(p.relations == std::vector<std::string>{"a^2", "b^2"});
  }
  SUBCASE("one edge") {
    const RacgPresentation p = presentation(build_graph({"a", "b"}, {{"a", "b"}}));
    CHECK(p.generators == std::vector<std::string>{"a", "b"});
    CHECK(p.relations == std::vector<std::string>{"a^2", "b^2", "[a,b]"});
  }
  SUBCASE("path") {
    const RacgPresentation p = presentation(parse_edgelist("a b\nb c\n"));
    CHECK(p.relations == std::vector<std::string>{"a^2", "b^2", "c^2", "[a,b]", "[b,c]"});
  }
}

TEST_CASE("clique groups are elementary abelian of order 2^n") {
  for (int n = 1; n <= 4; ++n) {
    const Graph g = gen_family("clique", {n});
    const Rewriter rw(presentation(g));
    CHECK(rw.order() == (std::uint64_t{1} << n));
  }
}

TEST_CASE("davis_dimension is the largest clique size") {
  for (int n = 1; n <= 7; ++n) CHECK(davis_dimension(gen_family("clique", {n})) == n);
  CHECK(davis_dimension(gen_family("cycle", {5})) == 2);
  CHECK(davis_dimension(gen_family("stacked_cycles", {4, 3})) == 2);
  CHECK(davis_dimension(gen_family("star", {6})) == 2);
  CHECK(davis_dimension(parse_edgelist("a b\nb c\na c\nc d\n")) == 3);
  CHECK(davis_dimension(build_graph({"a", "b"}, {})) == 1);
}

TEST_CASE("decompose") {
  SUBCASE("clique input is a single leaf") {
    const Graph g = gen_family("clique", {4});
    const DecompNode t = decompose(g);
    CHECK(t.kind == DecompKind::CliqueLeaf);
    CHECK(t.support == g.vertices());
    CHECK(t.children.empty());
    CHECK(t.leaf_count() == 1);
    CHECK(t.depth() == 0);
    CHECK(t.leaf_order() == 16);
  }
  SUBCASE("path splits as an amalgam over the middle vertex") {
    const Graph g = parse_edgelist("a b\nb c\n");
    const DecompNode t = decompose(g);
    CHECK(t.kind == DecompKind::Amalgam);
    CHECK(t.edge_group_support() == VertexSet::of(g, {"b"}));
    REQUIRE(t.children.size() == 2);
    CHECK(t.children[0].kind == DecompKind::CliqueLeaf);
    CHECK(t.children[0].support == VertexSet::of(g, {"a", "b"}));
    CHECK(t.children[0].leaf_order() == 4);
    CHECK(t.children[1].support == VertexSet::of(g, {"b", "c"}));
    CHECK(t.leaf_count() == 2);
    CHECK(t.depth() == 1);
  }
  SUBCASE("disjoint cliques form a free product of leaves") {
    const Graph g = parse_edgelist("a b\nb c\na c\nx y\ny z\nx z\n");
    const DecompNode t = decompose(g);
    CHECK(t.kind == DecompKind::FreeProduct);
    REQUIRE(t.children.size() == 2);
    CHECK(t.children[0].kind == DecompKind::CliqueLeaf);
    CHECK(t.children[0].support == VertexSet::of(g, {"a", "b", "c"}));
    CHECK(t.children[1].support == VertexSet::of(g, {"x", "y", "z"}));
    CHECK(t.edge_group_support() == VertexSet());
    CHECK(t.leaf_order() == 0);
  }
  SUBCASE("cycle decomposes to clique leaves") {
    const DecompNode t = decompose(gen_family("cycle", {6}));
    CHECK(t.kind == DecompKind::Amalgam);
    CHECK(t.leaf_count() >= 2);
    // Every leaf of any decomposition is a clique on its support.
    std::queue<const DecompNode*> todo;
    todo.push(&t);
    const Graph g = gen_family("cycle", {6});
    while (!todo.empty()) {
      const DecompNode* node = todo.front();
      todo.pop();
      if (node->children.empty()) {
        CHECK(node->kind == DecompKind::CliqueLeaf);
        CHECK(is_clique(g, node->support));
      }
      for (const DecompNode& c : node->children) todo.push(&c);
    }
  }
}

TEST_CASE("recursive_bound") {
  for (int n = 1; n <= 6; ++n) CHECK(recursive_bound(gen_family("clique", {n})) == 0);
  CHECK(recursive_bound(gen_family("path", {3})) == 1);
  CHECK(recursive_bound(gen_family("path", {7})) == 1);
  CHECK(recursive_bound(gen_family("cycle", {4})) == 2);
  CHECK(recursive_bound(gen_family("cycle", {9})) == 2);
  CHECK(recursive_bound(build_graph({"a", "b"}, {})) == 1);

  SUBCASE("optimized bound never exceeds the canonical one") {
    for (const long long seed : {11, 22, 33, 44, 55}) {
      const Graph g = gen_family("random", {7, 45, seed});
      CHECK(recursive_bound(g, true) <= recursive_bound(g, false));
    }
  }
  SUBCASE("budget") {
    CHECK_THROWS_AS(recursive_bound(gen_family("cycle", {8}), false, 7), Error);
  }
}

TEST_CASE("analyze on model inputs") {
  SUBCASE("complete graph: finite group") {
    const AnalysisReport r = analyze(gen_family("clique", {5}));
    CHECK(r.vertex_count == 5);
    CHECK(r.edge_count == 10);
    CHECK(r.connected);
    CHECK(r.m_c == 1);
    CHECK(r.cc.value == 0);
    CHECK(r.dim_cc.value == 0);
    CHECK(r.davis_dimension == 5);
    CHECK(r.recursive_bound == 0);
    CHECK(r.combined_upper_bound == 0);
    CHECK(r.asdim_lower_bound == 0);
    REQUIRE(r.asdim_exact.has_value());
    CHECK(*r.asdim_exact == 0);
    CHECK(r.classification == Classification::Finite);
    CHECK(!r.long_cycle.has_value());
  }
  SUBCASE("path: virtually free") {
    const AnalysisReport r = analyze(gen_family("path", {4}));
    CHECK(r.dim_cc.value == 1);
    CHECK(r.combined_upper_bound == 1);
    CHECK(r.asdim_lower_bound == 1);
    REQUIRE(r.asdim_exact.has_value());
    CHECK(*r.asdim_exact == 1);
    CHECK(r.classification == Classification::VirtuallyFree);
  }
  SUBCASE("two isolated vertices: infinite dihedral, virtually free") {
    const AnalysisReport r = analyze(build_graph({"a", "b"}, {}));
    CHECK(!r.connected);
    CHECK(r.dim_cc.value == 0);
    CHECK(r.combined_upper_bound == 1);
    CHECK(r.asdim_lower_bound == 1);
    REQUIRE(r.asdim_exact.has_value());
    CHECK(*r.asdim_exact == 1);
    CHECK(r.classification == Classification::VirtuallyFree);
  }
  SUBCASE("cycle: exactly two") {
    const AnalysisReport r = analyze(gen_family("cycle", {6}));
    CHECK(r.dim_cc.value == 2);
    CHECK(r.asdim_lower_bound == 2);
    CHECK(r.combined_upper_bound == 2);
    REQUIRE(r.asdim_exact.has_value());
    CHECK(*r.asdim_exact == 2);
    CHECK(r.classification == Classification::AsdimExactlyTwo);
    REQUIRE(r.long_cycle.has_value());
    CHECK(r.long_cycle->size() == 6);
  }
  SUBCASE("disconnected mix keeps the free-product floor") {
    const AnalysisReport r = analyze(parse_edgelist("a b\nb c\na c\nx\n"));
    CHECK(!r.connected);
    CHECK(r.dim_cc.value == 0);
    CHECK(r.classification == Classification::VirtuallyFree);
    CHECK(r.combined_upper_bound == 1);
  }
}
