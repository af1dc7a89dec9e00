#pragma once

#include <string>
#include <vector>

#include "cyclecover/graph.hpp"

namespace cyclecover {

// k cycles (even subgraphs) covering every edge exactly m times.
struct CycleCover {
    const CubicGraph* graph = nullptr;
    std::vector<EvenSubgraph> cycles;
    int m = 0;

    int k() const { return static_cast<int>(cycles.size()); }
};

// A cycle cover where every circuit of every cycle carries a direction;
// each edge must be traversed m/2 times in each direction.
struct OrientedCycleCover {
    const CubicGraph* graph = nullptr;
    std::vector<std::vector<Circuit>> cycles;  // per cycle: oriented circuits
    int m = 0;

    int k() const { return static_cast<int>(cycles.size()); }
    CycleCover underlying() const;
    int circuit_count() const;
};

struct VerifyReport {
    std::vector<std::string> failures;
    bool valid() const { return failures.empty(); }
};

enum class SearchMode { first, all, count };
enum class SearchOutcome { completed, budget_exhausted };

struct SearchConfig {
    int k = 6;
    int m = 4;
    bool oriented = false;
    SearchMode mode = SearchMode::first;
    long long node_budget = -1;  // < 0: unlimited
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::completed;
    std::vector<CycleCover> covers;                  // unoriented solutions
    std::vector<OrientedCycleCover> oriented;        // when config.oriented
    long long solution_count = 0;                    // covers or orientations
    long long nodes = 0;
};

// ---- Verification -------------------------------------------------------

// Every cycle must be an even subgraph and every edge covered exactly m
// times. Failures are data, not errors.
VerifyReport verify_cover(const CubicGraph& g,
                          const std::vector<EvenSubgraph>& cycles, int m);

// Underlying cover valid, plus per edge exactly m/2 traversals per direction.
VerifyReport verify_oriented_cover(const CubicGraph& g,
                                   const OrientedCycleCover& ocover);

// ---- Construction -------------------------------------------------------

// Three colour-pair cycles with a fixed orientation, then the same cycles
// reversed: [C12, C13, C23, C12', C13', C23'] — a valid o6c4c for any
// properly 3-edge-coloured cubic graph.
OrientedCycleCover o6c4c_from_colouring(const CubicGraph& g,
                                        const std::vector<int>& colouring);

// All direction assignments of the cover's circuits with exact m/2 + m/2
// balance per edge, in deterministic order. Empty = not orientable.
std::vector<OrientedCycleCover> orient_cover(const CubicGraph& g,
                                             const CycleCover& cover,
                                             SearchMode mode = SearchMode::all);

// A partition of all circuits of a 6c4c into two halves, each of which
// double-covers every edge (each half is a not-necessarily-oriented cycle
// double cover). Circuits are identified as (cycle index, circuit index
// within that cycle). Note a half need not consist of whole cycles: three
// 2-factors double-covering every edge would amount to a 3-edge-colouring,
// which snarks lack, so the split mixes circuits across cycles.
struct CdcSplit {
    std::vector<std::pair<int, int>> first;
    std::vector<std::pair<int, int>> second;
};

// All such partitions, reported once each (the half containing the first
// circuit comes first), in deterministic order.
std::vector<CdcSplit> split_into_two_cdcs(const OrientedCycleCover& ocover);

}  // namespace cyclecover
