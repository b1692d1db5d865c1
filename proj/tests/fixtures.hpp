#pragma once

#include <vector>

#include "tsurf/enumerate.hpp"
#include "tsurf/triangulation.hpp"

namespace fixtures {

// Maximal compatible sets among the given arcs.
inline std::vector<std::vector<tsurf::TaggedArc>> maximal_sets(const tsurf::SurfaceModel& s,
                                                              const std::vector<tsurf::TaggedArc>& arcs) {
  int n = static_cast<int>(arcs.size());
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) adj[i][j] = adj[j][i] = tsurf::compatible(s, arcs[i], arcs[j]);
  std::vector<std::vector<tsurf::TaggedArc>> out;
  for (const auto& c : tsurf::maximal_cliques(adj)) {
    std::vector<tsurf::TaggedArc> set;
    for (int i : c) set.push_back(arcs[i]);
    out.push_back(set);
  }
  return out;
}

}  // namespace fixtures
