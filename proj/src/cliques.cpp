#include "ccdim/cliques.hpp"

#include "mask_engine.hpp"

namespace ccdim {

CliqueTwin maximal_cliques(const Graph& g) {
  std::vector<Mask> masks;
  detail::collect_max_cliques(g.adjacency(), g.full_mask(), masks);
  CliqueTwin twin;
  twin.cliques.reserve(masks.size());
  for (const Mask m : masks) twin.cliques.emplace_back(m);
  return twin;
}

int m_c(const Graph& g) { return detail::count_max_cliques(g.adjacency(), g.full_mask()); }

}  // namespace ccdim
