#pragma once

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclecover/edgeset.hpp"

namespace cyclecover {

struct GraphError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Directed traversal of an edge: the edge is walked toward `head`.
struct DirectedEdge {
    int edge = -1;
    int head = -1;
    friend bool operator==(const DirectedEdge&, const DirectedEdge&) = default;
};

// Closed walk with pairwise distinct vertices, stored as directed edges.
struct Circuit {
    std::vector<DirectedEdge> directed_edges;

    int length() const { return static_cast<int>(directed_edges.size()); }
    EdgeSet edge_set() const {
        EdgeSet s;
        for (const auto& d : directed_edges) s.add(d.edge);
        return s;
    }
    // Vertex sequence v0, v1, ..., v_{L-1}; edge i goes v_{i-1} -> v_i.
    std::vector<int> vertex_sequence() const {
        std::vector<int> vs;
        vs.reserve(directed_edges.size());
        // start vertex is the head of the last directed edge
        for (const auto& d : directed_edges) vs.push_back(d.head);
        if (!vs.empty()) {
            int start = vs.back();
            vs.pop_back();
            vs.insert(vs.begin(), start);
        }
        return vs;
    }
    Circuit reversed(const class CubicGraph& g) const;
};

using EvenSubgraph = EdgeSet;
using PerfectMatching = EdgeSet;

// Immutable cubic simple graph with index-stable edges.
class CubicGraph {
public:
    static CubicGraph from_edge_list(int n,
                                     std::vector<std::pair<int, int>> edges,
                                     std::string name = "");

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::string& name() const { return name_; }
    void set_name(std::string name) { name_ = std::move(name); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int e) const { return edges_[e]; }
    // The 3 incident edge indices, in construction order.
    const std::array<int, 3>& incident_edges(int v) const {
        return incidence_[v];
    }
    int edge_between(int u, int v) const;  // -1 if not adjacent
    int other_end(int e, int v) const {
        auto [a, b] = edges_[e];
        return a == v ? b : a;
    }
    // Reference direction of an edge is low vertex -> high vertex.
    int reference_head(int e) const { return edges_[e].second; }

    EdgeSet all_edges() const {
        EdgeSet s;
        for (int e = 0; e < edge_count(); ++e) s.add(e);
        return s;
    }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<std::array<int, 3>> incidence_;
    std::vector<int> adjmat_flat_;  // n*n, edge index or -1
    std::string name_;
};

// ---- Structural queries -------------------------------------------------

bool is_bridgeless(const CubicGraph& g);

// Length of a shortest circuit. Throws GraphError on forests (cannot happen
// for cubic graphs, but decode paths construct intermediate graphs).
int girth(const CubicGraph& g);

bool is_connected(const CubicGraph& g);

// Complete, duplicate-free, in increasing EdgeSet order.
std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g);

EvenSubgraph complement_2factor(const CubicGraph& g, const PerfectMatching& pm);

bool is_even_subgraph(const CubicGraph& g, const EdgeSet& s);
bool is_perfect_matching(const CubicGraph& g, const EdgeSet& s);

// Decompose an even subgraph into its circuits. Each circuit starts at its
// lowest vertex and runs toward the lower-indexed neighbour first; circuits
// are listed by increasing start vertex.
std::vector<Circuit> circuits(const CubicGraph& g, const EvenSubgraph& s);

// Proper 3-edge-colouring (values 1..3 per edge), or nullopt if none exists.
std::optional<std::vector<int>> three_edge_colouring(const CubicGraph& g);

// All even subgraphs (the cycle space), in increasing EdgeSet order.
// Intended for small graphs; throws if the cycle space dimension exceeds 30.
std::vector<EvenSubgraph> enumerate_even_subgraphs(const CubicGraph& g);

}  // namespace cyclecover
