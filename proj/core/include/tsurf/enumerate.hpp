#pragma once

#include <functional>
#include <vector>

#include "tsurf/arc.hpp"

namespace tsurf {

// All ideal arcs (including loops around a single puncture) whose reduced walk
// crosses at most `maxCrossings` base edges.
std::vector<IdealArc> enumerate_ideal_arcs(const SurfaceModel& s, int maxCrossings);

// All tagged arcs whose underlying walk crosses at most `maxCrossings` base edges.
std::vector<TaggedArc> enumerate_tagged_arcs(const SurfaceModel& s, int maxCrossings);

// Tagged arcs satisfying `keep`, enumerated with an increasing crossing bound
// until the count is unchanged when the bound grows by `margin`. Returns the
// bound at which the count stabilised through `usedBound`.
std::vector<TaggedArc> enumerate_stable(const SurfaceModel& s, const std::function<bool(const TaggedArc&)>& keep,
                                        int startBound, int margin, int maxBound, int* usedBound = nullptr);

// Maximal cliques of a compatibility graph given as adjacency lists over
// vertices 0..n-1 (Bron-Kerbosch with pivoting).
std::vector<std::vector<int>> maximal_cliques(const std::vector<std::vector<bool>>& adj);

}  // namespace tsurf
