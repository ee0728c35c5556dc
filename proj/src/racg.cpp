#include "ccdim/racg.hpp"

#include <algorithm>
#include <limits>
#include <unordered_map>

#include "ccdim/cliques.hpp"
#include "common.hpp"

namespace ccdim {

using detail::Mask;

RacgPresentation presentation(const Graph& g) {
  RacgPresentation p;
  p.generators = g.labels();
  p.relations.reserve(static_cast<std::size_t>(g.size() + g.edge_count()));
  for (const auto& a : p.generators) p.relations.push_back(a + "^2");
  for (const auto& [a, b] : g.edges()) p.relations.push_back("[" + a + "," + b + "]");
  return p;
}

int davis_dimension(const Graph& g) {
  return detail::max_clique_size(g.adjacency(), g.full_mask());
}

std::string_view to_string(DecompKind k) {
  switch (k) {
    case DecompKind::CliqueLeaf: return "CliqueLeaf";
    case DecompKind::FreeProduct: return "FreeProduct";
    case DecompKind::Amalgam: return "Amalgam";
  }
  return "?";
}

VertexSet DecompNode::edge_group_support() const {
  return cut ? cut->cut : VertexSet();
}

std::uint64_t DecompNode::leaf_order() const {
  if (kind != DecompKind::CliqueLeaf) return 0;
  return std::uint64_t{1} << support.size();
}

int DecompNode::leaf_count() const {
  if (children.empty()) return 1;
  int n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

int DecompNode::depth() const {
  int d = 0;
  for (const auto& c : children) d = std::max(d, c.depth() + 1);
  return d;
}

namespace {

DecompNode decompose_within(detail::AdjView adj, Mask sub) {
  DecompNode node;
  node.support = VertexSet(sub);
  if (detail::clique_within(adj, sub)) return node;
  if (!detail::connected_within(adj, sub)) {
    node.kind = DecompKind::FreeProduct;
    detail::MaskList comps;
    detail::components_within(adj, sub, comps);
    for (Mask c : comps) node.children.push_back(decompose_within(adj, c));
    return node;
  }
  node.kind = DecompKind::Amalgam;
  const Mask cut = detail::cc_within(adj, sub).cut;
  node.cut = detail::separator_on(adj, sub, cut);
  for (const VertexSet& part : node.cut->components) {
    node.children.push_back(decompose_within(adj, part.mask() | cut));
  }
  return node;
}

}  // namespace

DecompNode decompose(const Graph& g, int budget) {
  detail::require_within_budget(g, budget);
  return decompose_within(g.adjacency(), g.full_mask());
}

namespace {

struct BoundScan {
  detail::AdjView adj;
  bool optimize;
  std::unordered_map<Mask, int> memo;

  int run(Mask sub) {
    if (auto it = memo.find(sub); it != memo.end()) return it->second;
    int value;
    if (detail::clique_within(adj, sub)) {
      value = 0;
    } else if (!detail::connected_within(adj, sub)) {
      detail::MaskList comps;
      detail::components_within(adj, sub, comps);
      value = 1;
      for (Mask c : comps) value = std::max(value, run(c));
    } else if (optimize) {
      value = std::numeric_limits<int>::max();
      for (Mask s : detail::minimal_cuts(adj, sub)) value = std::min(value, via_cut(sub, s));
    } else {
      value = via_cut(sub, detail::cc_within(adj, sub).cut);
    }
    memo.emplace(sub, value);
    return value;
  }

  int via_cut(Mask sub, Mask s) {
    int value = run(s) + 1;
    detail::MaskList comps;
    detail::components_within(adj, sub & ~s, comps);
    for (Mask c : comps) value = std::max(value, run(c | s));
    return value;
  }
};

}  // namespace

int recursive_bound(const Graph& g, bool optimize, int budget) {
  detail::require_within_budget(g, budget);
  BoundScan scan{g.adjacency(), optimize, {}};
  return scan.run(g.full_mask());
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::Finite: return "Finite";
    case Classification::VirtuallyFree: return "VirtuallyFree";
    case Classification::AsdimExactlyTwo: return "AsdimExactlyTwo";
    case Classification::AsdimAtLeastTwo: return "AsdimAtLeastTwo";
  }
  return "?";
}

AnalysisReport analyze(const Graph& g, int budget) {
  detail::require_within_budget(g, budget);

  AnalysisReport r;
  r.vertex_count = g.size();
  r.edge_count = g.edge_count();
  r.connected = is_connected(g);
  r.m_c = m_c(g);
  r.cc = cc(g);
  r.dim_cc = dim_cc(g, budget);
  r.davis_dimension = davis_dimension(g);
  r.recursive_bound = recursive_bound(g, false, budget);

  // For a disconnected graph the group is an infinite free product, so the
  // dimension bound cannot drop below 1.
  const int dim_bound = r.connected ? r.dim_cc.value : std::max(1, r.dim_cc.value);
  r.combined_upper_bound = std::min({dim_bound, r.davis_dimension, r.recursive_bound});

  r.long_cycle = find_induced_long_cycle(g);
  const bool whole_clique = is_clique(g, g.vertices());
  r.asdim_lower_bound = whole_clique ? 0 : (r.long_cycle ? 2 : 1);
  if (r.asdim_lower_bound == r.combined_upper_bound) r.asdim_exact = r.asdim_lower_bound;

  if (r.connected && r.dim_cc.value == 0) {
    r.classification = Classification::Finite;
  } else if (r.dim_cc.value <= 1) {
    r.classification = Classification::VirtuallyFree;
  } else if (r.asdim_exact && *r.asdim_exact == 2) {
    r.classification = Classification::AsdimExactlyTwo;
  } else {
    r.classification = Classification::AsdimAtLeastTwo;
  }
  return r;
}

}  // namespace ccdim
