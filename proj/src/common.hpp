#pragma once

// Internal glue between the mask kernels and the public witness types.

#include <sstream>

#include "ccdim/errors.hpp"
#include "ccdim/graph.hpp"
#include "ccdim/separators.hpp"
#include "mask_engine.hpp"

namespace ccdim::detail {

inline Separator separator_on(AdjView adj, Mask sub, Mask cut) {
  Separator sep;
  sep.cut = VertexSet(cut);
  MaskList comps;
  components_within(adj, sub & ~cut, comps);
  sep.components.reserve(static_cast<std::size_t>(comps.size()));
  for (Mask c : comps) sep.components.emplace_back(c);
  return sep;
}

inline void require_within_budget(const Graph& g, int budget) {
  if (budget < 1) fail(ErrorKind::BadParams, "budget must be positive");
  if (g.size() > budget) {
    std::ostringstream msg;
    msg << "graph has " << g.size() << " vertices, budget is " << budget;
    fail(ErrorKind::BudgetExceeded, msg.str());
  }
}

}  // namespace ccdim::detail
