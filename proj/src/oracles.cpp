#include "ccdim/oracles.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <set>
#include <sstream>

#include "ccdim/cc_dimension.hpp"
#include "ccdim/errors.hpp"
#include "ccdim/racg.hpp"
#include "mask_engine.hpp"

namespace ccdim {

namespace {

// The oracle side below deliberately shares nothing with the fast kernels:
// adjacency is re-read vertex by vertex and every condition is scanned by its
// definition.

std::vector<Mask> oracle_rows(const Graph& g) {
  const int n = g.size();
  std::vector<Mask> rows(static_cast<std::size_t>(n), 0);
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v && g.adjacent(u, v)) rows[u] |= Mask{1} << v;
    }
  }
  return rows;
}

Mask closure_from(const std::vector<Mask>& rows, Mask world, int seed) {
  Mask comp = Mask{1} << seed;
  for (;;) {
    Mask grown = comp;
    for (Mask b = comp; b;) {
      const int v = std::countr_zero(b);
      b &= b - 1;
      grown |= rows[static_cast<std::size_t>(v)] & world;
    }
    if (grown == comp) break;
    comp = grown;
  }
  return comp;
}

// Components of the induced subgraph on world, smallest member first.
std::vector<Mask> split_components(const std::vector<Mask>& rows, Mask world) {
  std::vector<Mask> comps;
  Mask rest = world;
  while (rest) {
    const Mask comp = closure_from(rows, rest, std::countr_zero(rest));
    comps.push_back(comp);
    rest &= ~comp;
  }
  return comps;
}

int component_count(const std::vector<Mask>& rows, Mask world) {
  int count = 0;
  Mask rest = world;
  while (rest) {
    rest &= ~closure_from(rows, rest, std::countr_zero(rest));
    ++count;
  }
  return count;
}

bool pairwise_complete(const Graph& g, Mask s) {
  const int n = g.size();
  for (int u = 0; u < n; ++u) {
    if (!((s >> u) & 1)) continue;
    for (int v = u + 1; v < n; ++v) {
      if (((s >> v) & 1) && !g.adjacent(u, v)) return false;
    }
  }
  return true;
}

bool lex_before(const VertexSet& a, const VertexSet& b) {
  return a.indices() < b.indices();
}

}  // namespace

CliqueTwin oracle_maximal_cliques(const Graph& g) {
  if (g.size() > 12) fail(ErrorKind::BudgetExceeded, "clique oracle is capped at 12 vertices");
  const Mask full = g.full_mask();

  std::vector<Mask> cliques;
  for (Mask s = 1; s <= full; ++s) {
    if (pairwise_complete(g, s)) cliques.push_back(s);
  }
  CliqueTwin twin;
  for (Mask c : cliques) {
    bool maximal = true;
    for (Mask d : cliques) {
      if (d != c && (c & ~d) == 0) {
        maximal = false;
        break;
      }
    }
    if (maximal) twin.cliques.emplace_back(c);
  }
  std::sort(twin.cliques.begin(), twin.cliques.end(), lex_before);
  return twin;
}

std::vector<Separator> oracle_vertex_cuts(const Graph& g) {
  if (g.size() > 8) fail(ErrorKind::BudgetExceeded, "cut oracle is capped at 8 vertices");
  const std::vector<Mask> rows = oracle_rows(g);
  const Mask full = g.full_mask();
  if (component_count(rows, full) != 1) {
    fail(ErrorKind::NotConnected, "cut oracle needs a connected graph");
  }

  std::vector<bool> separates(static_cast<std::size_t>(full) + 1, false);
  for (Mask s = 1; s < full; ++s) {
    separates[static_cast<std::size_t>(s)] = component_count(rows, full & ~s) >= 2;
  }

  std::vector<Separator> cuts;
  for (Mask s = 1; s < full; ++s) {
    if (!separates[static_cast<std::size_t>(s)]) continue;
    bool minimal = true;
    for (Mask t = (s - 1) & s; t; t = (t - 1) & s) {
      if (separates[static_cast<std::size_t>(t)]) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    Separator sep;
    sep.cut = VertexSet(s);
    for (Mask c : split_components(rows, full & ~s)) sep.components.emplace_back(c);
    cuts.push_back(std::move(sep));
  }
  std::sort(cuts.begin(), cuts.end(),
            [](const Separator& a, const Separator& b) { return lex_before(a.cut, b.cut); });
  return cuts;
}

int oracle_dim_cc(const Graph& g, int max_n) {
  if (max_n > 12) fail(ErrorKind::BudgetExceeded, "dim_cc oracle override is capped at 12 vertices");
  if (g.size() > max_n) {
    std::ostringstream msg;
    msg << "graph has " << g.size() << " vertices, dim_cc oracle cap is " << max_n;
    fail(ErrorKind::BudgetExceeded, msg.str());
  }
  const Mask full = g.full_mask();
  const std::vector<Mask> rows = oracle_rows(g);
  const std::size_t table = static_cast<std::size_t>(full) + 1;

  std::vector<signed char> comps(table, 0);
  std::vector<bool> clique(table, false);
  for (Mask s = 0; s <= full; ++s) {
    comps[static_cast<std::size_t>(s)] = static_cast<signed char>(component_count(rows, s));
    clique[static_cast<std::size_t>(s)] = pairwise_complete(g, s);
  }

  // A clique superset always restricts to a one-vertex extension, so counting
  // maximal cliques of each subset only needs the extension scan.
  std::vector<int> mc(table, 0);
  for (Mask m = 1; m <= full; ++m) {
    int count = 0;
    for (Mask c = m; c; c = (c - 1) & m) {
      if (!clique[static_cast<std::size_t>(c)]) continue;
      bool maximal = true;
      for (Mask b = m & ~c; b;) {
        const int v = std::countr_zero(b);
        b &= b - 1;
        if (clique[static_cast<std::size_t>(c | (Mask{1} << v))]) {
          maximal = false;
          break;
        }
      }
      if (maximal) ++count;
    }
    mc[static_cast<std::size_t>(m)] = count;
  }

  // CC per connected subset: minimum m_C over the inclusion-minimal subsets
  // whose removal disconnects it; no such subset means the piece is a clique.
  std::vector<int> cc_conn(table, 0);
  for (Mask u = 1; u <= full; ++u) {
    if (comps[static_cast<std::size_t>(u)] != 1) continue;
    int best = std::numeric_limits<int>::max();
    for (Mask s = (u - 1) & u; s; s = (s - 1) & u) {
      if (comps[static_cast<std::size_t>(u & ~s)] < 2) continue;
      bool minimal = true;
      for (Mask t = (s - 1) & s; t; t = (t - 1) & s) {
        if (comps[static_cast<std::size_t>(u & ~t)] >= 2) {
          minimal = false;
          break;
        }
      }
      if (minimal) best = std::min(best, mc[static_cast<std::size_t>(s)]);
    }
    cc_conn[static_cast<std::size_t>(u)] = best == std::numeric_limits<int>::max() ? 0 : best;
  }

  int dim = 0;
  for (Mask u = 1; u <= full; ++u) {
    int value = std::numeric_limits<int>::max();
    for (Mask c : split_components(rows, u)) {
      value = std::min(value, cc_conn[static_cast<std::size_t>(c)]);
    }
    dim = std::max(dim, value);
  }
  return dim;
}

namespace {

void require_corpus_n(int n) {
  if (n < 1 || n > 7) {
    fail(ErrorKind::BudgetExceeded, "the exhaustive corpus is capped at 7 vertices");
  }
}

std::string corpus_label(int i) { return "v" + std::to_string(i + 1); }

}  // namespace

std::uint64_t graph_count(int n) {
  require_corpus_n(n);
  return std::uint64_t{1} << (n * (n - 1) / 2);
}

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  if (mask >= graph_count(n)) fail(ErrorKind::BadParams, "edge mask out of range");
  std::vector<std::string> labels;
  labels.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) labels.push_back(corpus_label(i));
  std::vector<std::pair<std::string, std::string>> edges;
  int k = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j, ++k) {
      if ((mask >> k) & 1) edges.emplace_back(labels[static_cast<std::size_t>(i)],
                                              labels[static_cast<std::size_t>(j)]);
    }
  }
  return build_graph(std::move(labels), edges);
}

std::uint64_t edge_mask_of(const Graph& g) {
  require_corpus_n(g.size());
  std::uint64_t mask = 0;
  int k = 0;
  for (int i = 0; i < g.size(); ++i) {
    for (int j = i + 1; j < g.size(); ++j, ++k) {
      if (g.adjacent(i, j)) mask |= std::uint64_t{1} << k;
    }
  }
  return mask;
}

void for_each_graph(int n, bool connected_only, const std::function<void(const Graph&)>& fn) {
  const std::uint64_t count = graph_count(n);
  for (std::uint64_t mask = 0; mask < count; ++mask) {
    const Graph g = graph_from_edge_mask(n, mask);
    if (connected_only && !is_connected(g)) continue;
    fn(g);
  }
}

namespace {

std::string edge_list_string(const Graph& g) {
  std::string s;
  for (const auto& [a, b] : g.edges()) {
    if (!s.empty()) s += ' ';
    s += a;
    s += '-';
    s += b;
  }
  return s.empty() ? "(edgeless)" : s;
}

std::string sets_to_string(const Graph& g, const std::vector<VertexSet>& sets) {
  std::ostringstream os;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i) os << ' ';
    os << '{';
    const auto labels = labels_of(g, sets[i]);
    for (std::size_t j = 0; j < labels.size(); ++j) {
      if (j) os << ',';
      os << labels[j];
    }
    os << '}';
  }
  return sets.empty() ? "(none)" : os.str();
}

bool failure_before(const CheckFailure& a, const CheckFailure& b) {
  return std::tie(a.n, a.edge_mask, a.property, a.expected, a.actual) <
         std::tie(b.n, b.edge_mask, b.property, b.expected, b.actual);
}

struct Recorder {
  CheckReport report;
  const Graph* g = nullptr;
  std::uint64_t mask = 0;

  explicit Recorder(std::string suite) { report.suite = std::move(suite); }

  void enter(const Graph& gr) {
    g = &gr;
    mask = edge_mask_of(gr);
    ++report.instances;
  }

  void expect(bool ok, const char* property, std::string expected, std::string actual) {
    if (ok) return;
    report.failures.push_back(
        {g->size(), mask, edge_list_string(*g), property, std::move(expected), std::move(actual)});
  }

  void expect(bool ok, const char* property) { expect(ok, property, "holds", "violated"); }

  CheckReport finish() {
    std::sort(report.failures.begin(), report.failures.end(), failure_before);
    return std::move(report);
  }
};

template <class Body>
CheckReport corpus_check(const char* suite, int max_n, bool connected_only, Body body) {
  if (max_n < 1) fail(ErrorKind::BadParams, "max_n must be positive");
  require_corpus_n(max_n);
  Recorder rec(suite);
  for (int n = 1; n <= max_n; ++n) {
    for_each_graph(n, connected_only, [&](const Graph& g) {
      rec.enter(g);
      body(rec, g);
    });
  }
  return rec.finish();
}

// cc of every connected submask plus the dim_cc table over all submasks,
// filled in increasing mask order so one-vertex deletions are ready.
struct DimTables {
  std::vector<int> cc_conn;  // -1 on disconnected masks
  std::vector<int> dim;

  explicit DimTables(const Graph& g) {
    const auto adj = g.adjacency();
    const Mask full = g.full_mask();
    cc_conn.assign(static_cast<std::size_t>(full) + 1, -1);
    dim.assign(static_cast<std::size_t>(full) + 1, 0);
    for (Mask sub = 1; sub <= full; ++sub) {
      int here = 0;
      if (detail::connected_within(adj, sub)) {
        const int v = detail::cc_within(adj, sub).value;
        cc_conn[static_cast<std::size_t>(sub)] = v;
        here = v;
      }
      for (Mask b = sub; b;) {
        const int v = std::countr_zero(b);
        b &= b - 1;
        here = std::max(here, dim[static_cast<std::size_t>(sub & ~(Mask{1} << v))]);
      }
      dim[static_cast<std::size_t>(sub)] = here;
    }
  }
};

}  // namespace

CheckReport check_clique_oracle(int max_n) {
  return corpus_check("clique_oracle", max_n, false, [](Recorder& rec, const Graph& g) {
    const CliqueTwin fast = maximal_cliques(g);
    const CliqueTwin slow = oracle_maximal_cliques(g);
    rec.expect(fast.cliques == slow.cliques, "clique_oracle", sets_to_string(g, slow.cliques),
               sets_to_string(g, fast.cliques));
    rec.expect(m_c(g) == slow.size(), "mc_agrees", std::to_string(slow.size()),
               std::to_string(m_c(g)));
  });
}

CheckReport check_separator_oracle(int max_n) {
  return corpus_check("separator_oracle", max_n, true, [](Recorder& rec, const Graph& g) {
    const auto adj = g.adjacency();
    const Mask full = g.full_mask();
    const std::vector<Separator> fast = vertex_cuts(g);
    const std::vector<Separator> slow = oracle_vertex_cuts(g);

    bool same = fast.size() == slow.size();
    for (std::size_t i = 0; same && i < fast.size(); ++i) {
      same = fast[i].cut == slow[i].cut && fast[i].components == slow[i].components;
    }
    auto cut_sets = [&](const std::vector<Separator>& seps) {
      std::vector<VertexSet> sets;
      sets.reserve(seps.size());
      for (const auto& s : seps) sets.push_back(s.cut);
      return sets_to_string(g, sets);
    };
    rec.expect(same, "cuts_oracle", cut_sets(slow), cut_sets(fast));
    rec.expect(fast.empty() == is_clique(g, g.vertices()), "cuts_empty_iff_clique");

    for (const Separator& sep : fast) {
      for (int s : sep.cut.indices()) {
        for (const VertexSet& comp : sep.components) {
          rec.expect((adj[s] & comp.mask()) != 0, "separator_neighbor");
        }
        const Mask kept = full & ~(sep.cut.mask() & ~(Mask{1} << s));
        rec.expect(detail::connected_within(adj, kept), "separator_minimal");
      }
    }

    std::set<Mask> oracle_cuts;
    for (const Separator& sep : slow) oracle_cuts.insert(sep.cut.mask());
    for (Mask s = 1; s < full; ++s) {
      const bool claimed = is_vertex_cut(g, VertexSet(s));
      rec.expect(claimed == (oracle_cuts.count(s) > 0), "is_vertex_cut_agrees",
                 oracle_cuts.count(s) ? "true" : "false", claimed ? "true" : "false");
    }
  });
}

CheckReport check_cc_basics(int max_n) {
  return corpus_check("cc_basics", max_n, false, [](Recorder& rec, const Graph& g) {
    if (is_connected(g)) {
      const CcResult r = cc_connected(g);
      const bool cliq = is_clique(g, g.vertices());
      rec.expect((r.value == 0) == cliq, "cc_zero_iff_clique", cliq ? "0" : "positive",
                 std::to_string(r.value));
      if (!cliq) {
        rec.expect(r.value < m_c(g), "cc_below_mc", "cc < " + std::to_string(m_c(g)),
                   std::to_string(r.value));
      }
      rec.expect(r.witness_cut.has_value() == (r.value > 0), "cc_witness");
      rec.expect(!r.witness_component.has_value(), "cc_witness");
      if (r.witness_cut) {
        rec.expect(m_c(induced_subgraph(g, r.witness_cut->cut)) == r.value, "cc_witness");
        rec.expect(is_vertex_cut(g, r.witness_cut->cut), "cc_witness");
      }
    } else {
      const CcResult r = cc(g);
      int best = std::numeric_limits<int>::max();
      VertexSet argmin;
      for (const VertexSet& comp : connected_components(g)) {
        const int v = cc_connected(induced_subgraph(g, comp)).value;
        if (v < best) {
          best = v;
          argmin = comp;
        }
      }
      rec.expect(r.value == best, "cc_componentwise", std::to_string(best),
                 std::to_string(r.value));
      rec.expect(r.witness_component.has_value() && *r.witness_component == argmin,
                 "cc_componentwise");
      rec.expect(!r.witness_cut.has_value(), "cc_componentwise");
    }
  });
}

CheckReport check_dim_cc_oracle(int max_n) {
  return corpus_check("dim_cc_oracle", max_n, false, [](Recorder& rec, const Graph& g) {
    const DimCcResult d = dim_cc(g);
    const int o = oracle_dim_cc(g);
    rec.expect(d.value == o, "dim_oracle", std::to_string(o), std::to_string(d.value));

    const Graph w = induced_subgraph(g, d.witness_subgraph);
    rec.expect(is_connected(w), "dim_witness");
    rec.expect(cc(w).value == d.value, "dim_witness", std::to_string(d.value),
               std::to_string(cc(w).value));
    rec.expect(d.witness_cut.has_value() == (d.value > 0), "dim_witness");
    if (d.witness_cut) {
      rec.expect(d.witness_cut->cut.subset_of(d.witness_subgraph), "dim_witness");
      rec.expect(m_c(induced_subgraph(g, d.witness_cut->cut)) == d.value, "dim_witness");
      rec.expect(is_vertex_cut(w, VertexSet::of(w, labels_of(g, d.witness_cut->cut))),
                 "dim_witness");
    }
  });
}

CheckReport check_monotonicity(int max_n) {
  return corpus_check("monotonicity", max_n, false, [](Recorder& rec, const Graph& g) {
    const auto adj = g.adjacency();
    const Mask full = g.full_mask();
    const DimTables t(g);
    const int mc_full = detail::count_max_cliques(adj, full);
    const int dim_full = t.dim[static_cast<std::size_t>(full)];
    for (Mask sub = 1; sub <= full; ++sub) {
      const int mc_sub = detail::count_max_cliques(adj, sub);
      if (mc_sub > mc_full) {
        rec.expect(false, "mc_monotone", "<= " + std::to_string(mc_full),
                   std::to_string(mc_sub) + " at " + sets_to_string(g, {VertexSet(sub)}));
        break;
      }
      if (t.dim[static_cast<std::size_t>(sub)] > dim_full) {
        rec.expect(false, "dim_monotone", "<= " + std::to_string(dim_full),
                   std::to_string(t.dim[static_cast<std::size_t>(sub)]) + " at " +
                       sets_to_string(g, {VertexSet(sub)}));
        break;
      }
    }
  });
}

CheckReport check_cycle_characterization(int max_n) {
  return corpus_check("cycle_characterization", max_n, true, [](Recorder& rec, const Graph& g) {
    const auto adj = g.adjacency();
    const Mask full = g.full_mask();
    const int n = g.size();

    bool cycle = n >= 4;
    for (int v = 0; cycle && v < n; ++v) cycle = detail::popcount(adj[v]) == 2;

    const int cc0 = detail::cc_within(adj, full).value;
    bool lhs = false;
    if (cc0 >= 2) {
      bool proper_reaches_two = false;
      if (const auto c = find_induced_long_cycle(g); c && c->mask() != full) {
        proper_reaches_two = detail::cc_within(adj, c->mask()).value >= 2;
      }
      if (!proper_reaches_two) {
        for (Mask sub = full - 1; sub; sub = (sub - 1) & full) {
          if (detail::connected_within(adj, sub) && detail::cc_within(adj, sub).value >= 2) {
            proper_reaches_two = true;
            break;
          }
        }
      }
      lhs = !proper_reaches_two;
    }
    rec.expect(lhs == cycle, "cycle_characterization", cycle ? "long cycle" : "not a long cycle",
               lhs ? "minimal cc>=2" : "not minimal");
  });
}

CheckReport check_chordality(int max_n) {
  return corpus_check("chordality", max_n, false, [](Recorder& rec, const Graph& g) {
    const auto adj = g.adjacency();
    const Mask full = g.full_mask();
    const int dim = detail::dim_cc_value_within(adj, full);
    const auto cyc = find_induced_long_cycle(g);
    rec.expect((dim <= 1) == !cyc.has_value(), "chordality",
               cyc ? "dim_cc >= 2 (cycle found)" : "dim_cc <= 1 (chordal)",
               "dim_cc = " + std::to_string(dim));
    if (cyc) {
      const Mask m = cyc->mask();
      bool valid = cyc->size() >= 4 && detail::connected_within(adj, m);
      for (int v : cyc->indices()) {
        valid = valid && detail::popcount(adj[v] & m) == 2;
      }
      rec.expect(valid, "cycle_witness", "induced chordless cycle", sets_to_string(g, {*cyc}));
    }
  });
}

CheckReport check_bounds(int max_n) {
  return corpus_check("bounds", max_n, true, [](Recorder& rec, const Graph& g) {
    const auto adj = g.adjacency();
    const Mask full = g.full_mask();
    const int dim = detail::dim_cc_value_within(adj, full);
    const int canonical = recursive_bound(g, false);
    const int optimized = recursive_bound(g, true);
    rec.expect(canonical <= dim, "bound_canonical_le_dim", "<= " + std::to_string(dim),
               std::to_string(canonical));
    rec.expect(optimized <= canonical, "bound_optimized_le_canonical",
               "<= " + std::to_string(canonical), std::to_string(optimized));
    if (!is_clique(g, g.vertices())) {
      const detail::CcMask host = detail::cc_within(adj, full);
      rec.expect(detail::dim_cc_value_within(adj, host.cut) < dim, "cut_dim_decreases");
      rec.expect(detail::cc_any_within(adj, host.cut).value < host.value, "cut_cc_decreases");
      rec.expect(assert_increasing_properties(g).all_passed(), "increasing_properties");
    }
  });
}

namespace {

void verify_decomposition(Recorder& rec, const Graph& g, const DecompNode& node, Mask& leaves) {
  const auto adj = g.adjacency();
  const Mask support = node.support.mask();
  rec.expect(support != 0 && (support & ~g.full_mask()) == 0, "decomposition_sound");

  switch (node.kind) {
    case DecompKind::CliqueLeaf: {
      rec.expect(node.children.empty() && !node.cut, "decomposition_sound");
      rec.expect(detail::clique_within(adj, support), "decomposition_sound", "clique support",
                 sets_to_string(g, {node.support}));
      rec.expect(node.leaf_order() == std::uint64_t{1} << node.support.size(), "leaf_orders");
      leaves |= support;
      return;
    }
    case DecompKind::FreeProduct: {
      rec.expect(!node.cut.has_value(), "decomposition_sound");
      detail::MaskList comps;
      detail::components_within(adj, support, comps);
      bool match = comps.size() >= 2 && static_cast<int>(node.children.size()) == comps.size();
      for (int i = 0; match && i < comps.size(); ++i) {
        match = node.children[static_cast<std::size_t>(i)].support.mask() == comps[i];
      }
      rec.expect(match, "decomposition_sound", "children are the components", "");
      break;
    }
    case DecompKind::Amalgam: {
      rec.expect(detail::connected_within(adj, support) && !detail::clique_within(adj, support),
                 "decomposition_sound");
      if (!node.cut) {
        rec.expect(false, "decomposition_sound", "amalgam has a cut", "missing");
        return;
      }
      const Mask cut = node.cut->cut.mask();
      rec.expect(cut != 0 && (cut & ~support) == 0 && cut != support, "decomposition_sound");
      rec.expect(node.edge_group_support() == node.cut->cut, "decomposition_sound");

      // The cut must be separating and inclusion-minimal within the support.
      const std::vector<Mask> rows = oracle_rows(g);
      rec.expect(component_count(rows, support & ~cut) >= 2, "decomposition_sound",
                 "cut separates", sets_to_string(g, {node.cut->cut}));
      for (Mask t = (cut - 1) & cut; t; t = (t - 1) & cut) {
        if (component_count(rows, support & ~t) >= 2) {
          rec.expect(false, "decomposition_sound", "cut is inclusion-minimal",
                     "subset " + sets_to_string(g, {VertexSet(t)}) + " separates");
          break;
        }
      }

      detail::MaskList comps;
      detail::components_within(adj, support & ~cut, comps);
      bool match = static_cast<int>(node.children.size()) == comps.size() &&
                   static_cast<int>(node.cut->components.size()) == comps.size();
      Mask child_union = 0;
      for (int i = 0; match && i < comps.size(); ++i) {
        const Mask child = node.children[static_cast<std::size_t>(i)].support.mask();
        match = node.cut->components[static_cast<std::size_t>(i)].mask() == comps[i] &&
                child == (comps[i] | cut) && child != support;
        child_union |= child;
      }
      for (std::size_t i = 0; match && i < node.children.size(); ++i) {
        for (std::size_t j = i + 1; match && j < node.children.size(); ++j) {
          match = (node.children[i].support.mask() & node.children[j].support.mask()) == cut;
        }
      }
      rec.expect(match && child_union == support, "decomposition_sound",
                 "children tile the support over the cut", "");
      break;
    }
  }
  for (const DecompNode& child : node.children) verify_decomposition(rec, g, child, leaves);
}

}  // namespace

CheckReport check_decomposition(int max_n) {
  return corpus_check("decomposition", max_n, false, [](Recorder& rec, const Graph& g) {
    const DecompNode tree = decompose(g);
    rec.expect(tree.support.mask() == g.full_mask(), "decomposition_sound");
    Mask leaves = 0;
    verify_decomposition(rec, g, tree, leaves);
    rec.expect(leaves == g.full_mask(), "decomposition_sound", "leaf supports cover the graph",
               sets_to_string(g, {VertexSet(leaves)}));
  });
}

CheckReport check_classification(int max_n) {
  return corpus_check("classification", max_n, false, [](Recorder& rec, const Graph& g) {
    const AnalysisReport r = analyze(g);
    rec.expect(r.asdim_lower_bound <= r.combined_upper_bound, "bounds_ordered",
               "lower <= upper", std::to_string(r.asdim_lower_bound) + " vs " +
                                     std::to_string(r.combined_upper_bound));
    const bool pinch = r.asdim_lower_bound == r.combined_upper_bound;
    rec.expect(r.asdim_exact.has_value() == pinch, "exact_iff_pinch");
    if (r.asdim_exact) rec.expect(*r.asdim_exact == r.asdim_lower_bound, "exact_iff_pinch");

    const bool cliq = is_clique(g, g.vertices());
    const bool chordal = !r.long_cycle.has_value();
    rec.expect((r.classification == Classification::Finite) == cliq, "classify_finite",
               cliq ? "Finite" : "not Finite", std::string(to_string(r.classification)));
    rec.expect((r.classification == Classification::VirtuallyFree) == (!cliq && chordal),
               "classify_vfree", !cliq && chordal ? "VirtuallyFree" : "not VirtuallyFree",
               std::string(to_string(r.classification)));

    if (r.connected && r.dim_cc.value <= 2) {
      rec.expect(r.asdim_exact.has_value() && *r.asdim_exact == r.dim_cc.value, "pinch_at_two",
                 "asdim_exact = " + std::to_string(r.dim_cc.value),
                 r.asdim_exact ? std::to_string(*r.asdim_exact) : "absent");
    }
    if (r.asdim_exact && *r.asdim_exact == 2) {
      rec.expect(r.long_cycle.has_value(), "exact_two_has_cycle");
    }
  });
}

CheckReport run_lemma_suite(int max_n) {
  if (max_n < 1 || max_n > 6) {
    fail(ErrorKind::BudgetExceeded, "the combined lemma suite is capped at 6 vertices");
  }
  CheckReport (*const suites[])(int) = {
      check_clique_oracle,  check_separator_oracle,        check_cc_basics,
      check_dim_cc_oracle,  check_monotonicity,            check_cycle_characterization,
      check_chordality,     check_bounds,                  check_decomposition,
      check_classification,
  };
  CheckReport all;
  all.suite = "lemma_suite";
  for (auto* suite : suites) {
    CheckReport r = suite(max_n);
    all.instances += r.instances;
    all.failures.insert(all.failures.end(), r.failures.begin(), r.failures.end());
  }
  std::sort(all.failures.begin(), all.failures.end(), failure_before);
  return all;
}

}  // namespace ccdim
