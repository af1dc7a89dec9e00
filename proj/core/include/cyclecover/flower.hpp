#pragma once

#include "cyclecover/cover.hpp"

namespace cyclecover {

// The flower snark graph J_m, kept alive for the covers returned below
// (their graph pointers refer to this storage).
const CubicGraph& flower_graph(int m);

// o6c4c for the flower snark J_m (odd m >= 3) with every b_i vertex
// ordered. Base solutions for J3 and J5 come from constrained search; the
// two-column insertion gadget is read off the J5 solution at a repeated
// interface state and cross-checked by splicing it into the J3 solution
// (which must reproduce a valid J5 solution); larger m are built by
// repeated insertion. Every returned cover has passed verify_oriented_cover
// and the b-ordered classification; any inconsistency throws GraphError.
OrientedCycleCover flower_o6c4c(int m);

}  // namespace cyclecover
