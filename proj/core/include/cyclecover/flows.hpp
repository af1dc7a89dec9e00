#pragma once

#include <array>
#include <optional>
#include <vector>

#include "cyclecover/cover.hpp"

namespace cyclecover {

// Integer edge valuation relative to the reference orientation (low vertex
// -> high vertex); positive = along the reference direction.
struct IntFlow {
    const CubicGraph* graph = nullptr;
    std::vector<int> value;  // per edge id
};

// Signed sums vanish at every vertex.
bool flow_conserves(const CubicGraph& g, const IntFlow& flow);

// Conservation plus 0 < |value| < k on every edge.
bool verify_nzk(const CubicGraph& g, const IntFlow& flow, int k);

// Weighted sum of the oriented circuit circulations; conservative for any
// integer weights (one weight per cycle of the cover).
IntFlow flow_from_weights(const OrientedCycleCover& ocover,
                          const std::vector<int>& weights);

// A flow supported on exactly `edges`, nowhere-zero there with |value| < k.
struct SubgraphFlow {
    EdgeSet edges;
    IntFlow flow;
    int k = 0;
};

// Double cover of E(G) by an even cycle with an nz2 flow and two subgraphs
// with nz4 flows.
struct FlowTripleCover {
    SubgraphFlow c2, f4a, f4b;
};

// Conserves everywhere, zero exactly off the support, 0 < |value| < k on it.
bool verify_subgraph_flow(const CubicGraph& g, const SubgraphFlow& part);

// Exhaustive nowhere-zero flow search on a subgraph: values on a spanning
// forest cobasis range over +-[1, k-1], forest edges follow by conservation.
std::optional<IntFlow> find_nz_flow(const CubicGraph& g, const EdgeSet& support,
                                    int k);

// Decomposition induced by a triple of cycles of a 6c4c: C2 = edges the
// triple covers an odd number of times, F4a = edges covered 0, 1 or 2 times,
// F4b = edges covered 0, 2 or 3 times. Each edge lands in exactly two of the
// three parts. Throws GraphError (with the offending subgraph) if an nz4
// flow search fails.
FlowTripleCover flows_244(const CycleCover& cover,
                          const std::array<int, 3>& triple);

// Three subgraph flows whose supports double-cover E(G).
struct FlowDecomposition {
    std::array<SubgraphFlow, 3> parts;
};

struct FlowSearchResult {
    SearchOutcome outcome = SearchOutcome::completed;
    std::vector<FlowDecomposition> solutions;
    long long nodes = 0;
};

// (2,4,4)-flows double cover with the two flows through each edge running
// in opposite directions. First solution unless max_solutions says more.
FlowSearchResult search_oriented_244(const CubicGraph& g,
                                     long long node_budget = 200'000'000,
                                     int max_solutions = 1);

// (3,3,3)-flows double cover; oriented additionally demands opposite
// directions per edge.
FlowSearchResult search_333(const CubicGraph& g, bool oriented,
                            long long node_budget = 200'000'000,
                            int max_solutions = 1);

}  // namespace cyclecover
