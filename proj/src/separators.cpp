#include "ccdim/separators.hpp"

#include "mask_engine.hpp"

namespace ccdim {

namespace {

Separator make_separator(const Graph& g, Mask cut) {
  Separator sep;
  sep.cut = VertexSet(cut);
  detail::MaskList comps;
  detail::components_within(g.adjacency(), g.full_mask() & ~cut, comps);
  sep.components.reserve(static_cast<std::size_t>(comps.size()));
  for (const Mask c : comps) sep.components.emplace_back(c);
  return sep;
}

void require_connected(const Graph& g) {
  if (!is_connected(g)) fail(ErrorKind::NotConnected, "the graph must be connected");
}

}  // namespace

std::vector<Separator> vertex_cuts(const Graph& g) {
  require_connected(g);
  std::vector<Separator> out;
  for (const Mask cut : detail::minimal_cuts(g.adjacency(), g.full_mask())) {
    out.push_back(make_separator(g, cut));
  }
  return out;
}

bool is_vertex_cut(const Graph& g, const VertexSet& s) {
  require_connected(g);
  if (s.mask() & ~g.full_mask()) {
    fail(ErrorKind::UnknownVertex, "cut contains vertices outside the host graph");
  }
  const Mask rest = g.full_mask() & ~s.mask();
  if (!rest || detail::connected_within(g.adjacency(), rest)) return false;
  // Inclusion-minimality is equivalent to every cut vertex having a neighbor
  // in every component: any spared cut vertex would then reconnect the rest.
  detail::MaskList comps;
  detail::components_within(g.adjacency(), rest, comps);
  bool minimal = true;
  detail::for_each_bit(s.mask(), [&](int v) {
    for (const Mask c : comps) {
      if (!(g.adjacency_mask(v) & c)) {
        minimal = false;
        return;
      }
    }
  });
  return minimal;
}

}  // namespace ccdim
