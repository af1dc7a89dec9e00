#pragma once

#include "cyclecover/cover.hpp"

namespace cyclecover {

// Exact k-cycle m-cover search. When 2k = 3m every cycle in a solution is a
// 2-factor, so the engine searches multisets of perfect-matching complements
// (each edge must lie in exactly k−m chosen matchings); otherwise it runs
// general even-subgraph backtracking. Solutions are deduplicated as sorted
// multisets of cycle edge-sets and reported in deterministic order. With
// config.oriented, each cover is passed through orient_cover.
SearchResult search_cycle_cover(const CubicGraph& g, const SearchConfig& cfg);

// o6c4c for the flower snark J_m with every b_i vertex ordered. Base
// solutions for J3/J5 come from constrained search; larger m by repeated
// insertion of the two-column gadget extracted from their difference. The
// result is re-verified end to end; inconsistency throws GraphError.
OrientedCycleCover flower_o6c4c(int m);

}  // namespace cyclecover
