#include "mask_engine.hpp"

#include <algorithm>
#include <cassert>

namespace ccdim::detail {

Mask component_of(AdjView adj, Mask sub, int seed) {
  Mask comp = bit(seed);
  Mask frontier = comp;
  while (frontier) {
    Mask nb = 0;
    for_each_bit(frontier, [&](int v) { nb |= adj[v]; });
    frontier = nb & sub & ~comp;
    comp |= frontier;
  }
  return comp;
}

void components_within(AdjView adj, Mask sub, MaskList& out) {
  out.clear();
  Mask rem = sub;
  while (rem) {
    const Mask c = component_of(adj, sub, lowest(rem));
    out.push(c);
    rem &= ~c;
  }
}

bool connected_within(AdjView adj, Mask sub) {
  if (!sub) return true;
  return component_of(adj, sub, lowest(sub)) == sub;
}

bool clique_within(AdjView adj, Mask sub) {
  Mask rem = sub;
  while (rem) {
    const int v = lowest(rem);
    if (sub & ~adj[v] & ~bit(v)) return false;
    rem &= rem - 1;
  }
  return true;
}

Mask neighbors_of_set(AdjView adj, Mask set, Mask sub) {
  Mask nb = 0;
  for_each_bit(set, [&](int v) { nb |= adj[v]; });
  return nb & sub & ~set;
}

namespace {

// Bron-Kerbosch with the classic max-degree pivot; candidates stay inside the
// initial P, so adjacency rows never need masking to the universe.
template <typename Leaf>
void bron_kerbosch(AdjView adj, Mask r, Mask p, Mask x, Leaf&& leaf) {
  if (!p && !x) {
    leaf(r);
    return;
  }
  int best = -1;
  Mask pivot_nb = 0;
  for_each_bit(p | x, [&](int u) {
    const int c = popcount(p & adj[u]);
    if (c > best) {
      best = c;
      pivot_nb = adj[u];
    }
  });
  for_each_bit(p & ~pivot_nb, [&](int v) {
    const Mask nb = adj[v];
    bron_kerbosch(adj, r | bit(v), p & nb, x & nb, leaf);
    p &= ~bit(v);
    x |= bit(v);
  });
}

}  // namespace

int count_max_cliques(AdjView adj, Mask sub) {
  if (!sub) return 0;
  int n = 0;
  bron_kerbosch(adj, 0, sub, 0, [&](Mask) { ++n; });
  return n;
}

void collect_max_cliques(AdjView adj, Mask sub, std::vector<Mask>& out) {
  out.clear();
  if (!sub) return;
  bron_kerbosch(adj, 0, sub, 0, [&](Mask r) { out.push_back(r); });
  std::sort(out.begin(), out.end(), lex_less);
}

int max_clique_size(AdjView adj, Mask sub) {
  if (!sub) return 0;
  int best = 0;
  bron_kerbosch(adj, 0, sub, 0, [&](Mask r) { best = std::max(best, popcount(r)); });
  return best;
}

std::vector<Mask> minimal_separators(AdjView adj, Mask sub) {
  std::vector<Mask> found;
  std::vector<Mask> queue;
  auto add = [&](Mask s) {
    if (!s) return;
    const auto it = std::lower_bound(found.begin(), found.end(), s);
    if (it != found.end() && *it == s) return;
    found.insert(it, s);
    queue.push_back(s);
  };

  MaskList comps;
  // Close separators: neighborhoods of the components left by deleting N[v].
  for_each_bit(sub, [&](int v) {
    const Mask rem = sub & ~(adj[v] | bit(v));
    components_within(adj, rem, comps);
    for (const Mask c : comps) add(neighbors_of_set(adj, c, sub));
  });
  // Expansion: from a separator S and x in S, the components of
  // sub - (S u N(x)) contribute their neighborhoods, until closure.
  while (!queue.empty()) {
    const Mask s = queue.back();
    queue.pop_back();
    for_each_bit(s, [&](int x) {
      const Mask rem = sub & ~(s | adj[x]);
      components_within(adj, rem, comps);
      for (const Mask c : comps) add(neighbors_of_set(adj, c, sub));
    });
  }
  return found;
}

std::vector<Mask> minimal_cuts(AdjView adj, Mask sub) {
  const std::vector<Mask> cand = minimal_separators(adj, sub);
  std::vector<Mask> keep;
  keep.reserve(cand.size());
  for (const Mask s : cand) {
    bool minimal = true;
    for (const Mask t : cand) {
      if (t != s && (t & ~s) == 0) {
        minimal = false;
        break;
      }
    }
    if (minimal) keep.push_back(s);
  }
  std::sort(keep.begin(), keep.end(), lex_less);
  return keep;
}

CcMask cc_within(AdjView adj, Mask sub) {
  if (clique_within(adj, sub)) return {};
  CcMask out;
  out.has_cut = true;
  int best = -1;
  // Cuts come in lex order and only strict improvements move the witness, so
  // the witness is the lex-least argmin cut.
  for (const Mask s : minimal_cuts(adj, sub)) {
    const int mc = count_max_cliques(adj, s);
    if (best < 0 || mc < best) {
      best = mc;
      out.cut = s;
    }
  }
  assert(best >= 1);
  out.value = best;
  return out;
}

CcAnyMask cc_any_within(AdjView adj, Mask sub) {
  MaskList comps;
  components_within(adj, sub, comps);
  CcAnyMask out;
  if (comps.size() <= 1) {
    out.value = cc_within(adj, sub).value;
    out.component = sub;
    return out;
  }
  out.split = true;
  int best = -1;
  for (const Mask c : comps) {
    const int v = cc_within(adj, c).value;
    if (best < 0 || v < best) {
      best = v;
      out.component = c;
    }
  }
  out.value = best;
  return out;
}

int dim_cc_value_within(AdjView adj, Mask sub) {
  int best = 0;
  for (Mask m = sub; m; m = (m - 1) & sub) {
    if (!connected_within(adj, m)) continue;
    if (count_max_cliques(adj, m) <= best) continue;  // CC < m_C
    best = std::max(best, cc_within(adj, m).value);
  }
  return best;
}

}  // namespace ccdim::detail
