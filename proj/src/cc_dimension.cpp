#include "ccdim/cc_dimension.hpp"

#include <array>
#include <sstream>

#include "ccdim/cliques.hpp"
#include "ccdim/errors.hpp"
#include "common.hpp"

namespace ccdim {

using detail::bit;
using detail::Mask;
using detail::require_within_budget;
using detail::separator_on;

CcResult cc_connected(const Graph& g) {
  if (!is_connected(g)) fail(ErrorKind::NotConnected, "cc_connected needs a connected graph");
  const auto adj = g.adjacency();
  const detail::CcMask r = detail::cc_within(adj, g.full_mask());
  CcResult res;
  res.value = r.value;
  if (r.has_cut) res.witness_cut = separator_on(adj, g.full_mask(), r.cut);
  return res;
}

CcResult cc(const Graph& g) {
  if (is_connected(g)) return cc_connected(g);
  const auto adj = g.adjacency();
  const detail::CcAnyMask r = detail::cc_any_within(adj, g.full_mask());
  CcResult res;
  res.value = r.value;
  res.witness_component = VertexSet(r.component);
  return res;
}

namespace {

// Lex-least mask with the given CC value among connected submasks of full.
// Prefix extension in ascending index order visits masks exactly in lex
// order, so the first hit is the answer. Connectivity cannot be pruned on
// prefixes (later vertices may reconnect them), but the clique-count bound
// CC < m_c skips the separator enumeration on most masks.
Mask lex_least_maximizer(detail::AdjView adj, Mask full, int target) {
  const int n = detail::popcount(full);
  std::array<int, kMaxVertices> chosen{};
  int depth = 0;
  Mask prefix = 0;
  int next = 0;
  for (;;) {
    if (next < n) {
      prefix |= bit(next);
      chosen[depth++] = next;
      ++next;
      if (detail::connected_within(adj, prefix) &&
          (target == 0 || detail::count_max_cliques(adj, prefix) > target) &&
          detail::cc_within(adj, prefix).value == target) {
        return prefix;
      }
    } else {
      if (depth == 0) break;
      const int last = chosen[--depth];
      prefix &= ~bit(last);
      next = last + 1;
    }
  }
  return 0;
}

}  // namespace

DimCcResult dim_cc(const Graph& g, int budget) {
  require_within_budget(g, budget);
  const auto adj = g.adjacency();
  const Mask full = g.full_mask();

  const int best = detail::dim_cc_value_within(adj, full);
  const Mask witness = lex_least_maximizer(adj, full, best);

  DimCcResult res;
  res.value = best;
  res.witness_subgraph = VertexSet(witness);
  if (best > 0) {
    const detail::CcMask inner = detail::cc_within(adj, witness);
    res.witness_cut = separator_on(adj, witness, inner.cut);
  }
  return res;
}

std::optional<VertexSet> find_induced_long_cycle(const Graph& g) {
  const auto adj = g.adjacency();
  const Mask full = g.full_mask();
  const int n = g.size();

  // A chordless cycle through v is v plus an induced u-w path that avoids
  // N[v], for non-adjacent neighbors u, w of v. Shortest paths in that
  // restricted subgraph are induced, so a BFS per triple suffices, and any
  // long chordless cycle is discovered from each of its own triples.
  std::array<int, kMaxVertices> parent{};
  for (int v = 0; v < n; ++v) {
    const Mask nbv = adj[v];
    for (int u = 0; u < n; ++u) {
      if (!((nbv >> u) & 1)) continue;
      for (int w = u + 1; w < n; ++w) {
        if (!((nbv >> w) & 1) || ((adj[u] >> w) & 1)) continue;
        const Mask allowed = (full & ~(nbv | bit(v))) | bit(u) | bit(w);
        Mask seen = bit(u);
        Mask frontier = bit(u);
        parent[u] = -1;
        while (frontier && !((seen >> w) & 1)) {
          Mask next = 0;
          detail::for_each_bit(frontier, [&](int x) {
            detail::for_each_bit(adj[x] & allowed & ~seen & ~next, [&](int y) {
              parent[y] = x;
              next |= bit(y);
            });
          });
          seen |= next;
          frontier = next;
        }
        if (!((seen >> w) & 1)) continue;
        Mask cycle = bit(v);
        for (int x = w; x != -1; x = parent[x]) cycle |= bit(x);
        return VertexSet(cycle);
      }
    }
  }
  return std::nullopt;
}

bool IncreasingChecks::all_passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

IncreasingChecks assert_increasing_properties(const Graph& g, int budget) {
  if (!is_connected(g)) {
    fail(ErrorKind::NotConnected, "assert_increasing_properties needs a connected graph");
  }
  if (is_clique(g, g.vertices())) {
    fail(ErrorKind::BadParams, "assert_increasing_properties needs a non-complete graph");
  }
  require_within_budget(g, budget);

  const auto adj = g.adjacency();
  const Mask full = g.full_mask();

  const detail::CcMask host_cc = detail::cc_within(adj, full);
  const Mask cut = host_cc.cut;
  const int host_dim = detail::dim_cc_value_within(adj, full);

  IncreasingChecks out;
  out.cut = VertexSet(cut);
  auto record = [&out](const std::string& name, bool ok, std::string detail_text) {
    out.checks.push_back({name, ok, std::move(detail_text)});
  };

  {
    const int mc = detail::count_max_cliques(adj, full);
    std::ostringstream d;
    d << "cc=" << host_cc.value << " m_c=" << mc;
    record("cc_less_than_m_c", host_cc.value < mc, d.str());
  }
  {
    const int cut_cc = detail::cc_any_within(adj, cut).value;
    std::ostringstream d;
    d << "cc(cut)=" << cut_cc << " cc=" << host_cc.value;
    record("cut_cc_decreases", cut_cc < host_cc.value, d.str());
  }
  const int cut_dim = detail::dim_cc_value_within(adj, cut);
  {
    std::ostringstream d;
    d << "dim_cc(cut)=" << cut_dim << " dim_cc=" << host_dim;
    record("cut_dim_cc_decreases", cut_dim < host_dim, d.str());
  }
  {
    // Every subgraph of the cut set stays at most dim_cc of the cut, hence
    // strictly below the host dimension.
    bool ok = true;
    std::ostringstream d;
    d << "dim_cc(cut)=" << cut_dim << " dim_cc=" << host_dim;
    for (Mask sub = cut; sub; sub = (sub - 1) & cut) {
      const int v = detail::dim_cc_value_within(adj, sub);
      if (v > cut_dim || v >= host_dim) {
        ok = false;
        d << " violated at " << VertexSet(sub) << " with " << v;
        break;
      }
    }
    record("cut_subgraphs_monotone", ok, d.str());
  }
  return out;
}

}  // namespace ccdim
