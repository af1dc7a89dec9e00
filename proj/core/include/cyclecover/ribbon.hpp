#pragma once

#include <array>
#include <vector>

#include "cyclecover/cover.hpp"

namespace cyclecover {

// Cyclic order of the 3 incident edges at each vertex.
struct RotationSystem {
    std::vector<std::array<int, 3>> order;  // per vertex, edge ids
};

// At an all-disordered vertex: three ordered pairs of cycle indices (0-based
// into the cover), one per incident edge (the pair of cycles avoiding that
// edge there), in a cyclic order. Reading the six entries as a permutation
// (rotated so the pair containing cycle 0 comes first) is even; of the two
// reference-consistent candidates exactly one qualifies.
struct PairList {
    std::array<std::array<int, 2>, 3> pairs;
    std::array<int, 3> edges;  // incident edge associated with each pair
};

// The local face signature (ab -> cd) + ef, entries are cycle numbers 1..6.
struct Triple {
    std::array<int, 2> in, out, match;
    friend auto operator<=>(const Triple&, const Triple&) = default;
};

struct TripleClasses {
    std::vector<std::vector<Triple>> classes;          // 6 sorted classes
    std::vector<std::vector<Triple>> representatives;  // 10 per class, sorted
    int class_of(const Triple& t) const;               // -1 if unknown
};

// Pair derivation at one vertex of an all-disordered o6c4c; throws if the
// vertex is ordered or the parity rule fails to single out one candidate.
PairList pairlist_at_vertex(const OrientedCycleCover& ocover, int v);

// Standard successor tracing: after arriving at v along edge h, leave along
// the successor of h in v's cyclic order. The walks partition the directed
// edge set (each of the 2|E| directed edges appears exactly once).
std::vector<std::vector<DirectedEdge>> trace_faces(const CubicGraph& g,
                                                   const RotationSystem& rot);

// The deterministic rotation built from the pairlists of an all-disordered
// o6c4c; faces traced on it form an oriented 6-cycle double cover, grouped
// into 6 classes via the triple classification. A non-circuit face violates
// the derivation guarantees and throws with a counterexample description.
OrientedCycleCover derive_o6cdc(const OrientedCycleCover& ocover);

// The rotation system derive_o6cdc uses (exposed for inspection/tests).
RotationSystem rotation_from_pairlists(const OrientedCycleCover& ocover);

// All 360 even triples over {1..6}, closed under the three equivalence
// rules: (ab->cd)+ef ~ (cd->ab)+ef ~ (ab->fe)+dc ~ (ba->ce)+df.
// Exactly 6 classes of 60; representatives are the class members with 1 in
// the first pair, one per ordered first pair, chosen so that 2 (then 3,...)
// sits in the leftmost possible pair.
TripleClasses triple_classes();

// The 4 representative triples of the 3cdc <-> o4cdc reformulation.
std::array<Triple, 4> o4cdc_triples();

}  // namespace cyclecover
