#pragma once

#include <array>
#include <string>
#include <vector>

#include "cyclecover/cover.hpp"

namespace cyclecover {

// A corner is a vertex together with an unordered pair of its incident
// edges; in a valid o6c4c every corner is traversed exactly twice.
struct CornerPassage {
    struct Traversal {
        int cycle = -1;      // cycle index in the cover
        int from_edge = -1;  // edge used to enter the vertex
        int to_edge = -1;    // edge used to leave the vertex
    };
    int vertex = -1;
    std::array<int, 2> edge_pair{-1, -1};  // sorted
    std::array<Traversal, 2> traversals;

    // both passes run from the same edge to the same edge
    bool same_direction() const {
        return traversals[0].from_edge == traversals[1].from_edge;
    }
};

enum class VertexClass { ordered, disordered };
enum class EdgeClass { rich, poor };
enum class EdgeSubtype { drd, dro, dpd, opo, unexpected };

struct ClassificationReport {
    std::vector<VertexClass> vertex_class;  // per vertex
    std::vector<EdgeClass> edge_class;      // per edge
    std::vector<EdgeSubtype> edge_subtype;  // per edge
    // edges whose (class, endpoint classes) combination falls outside the
    // rich∈{drd,dro} / poor∈{dpd,opo} taxonomy — a finding, not an error
    std::vector<std::string> taxonomy_counterexamples;

    int ordered_count() const;
    int disordered_count() const;
    int rich_count() const;
    int poor_count() const;
    int subtype_count(EdgeSubtype t) const;
};

// 3 corners per vertex, each with its 2 traversals; sorted by (vertex,
// edge_pair). Throws GraphError if any corner is not traversed exactly twice.
std::vector<CornerPassage> corners(const OrientedCycleCover& ocover);

// Ordered iff all 3 corners are same-direction; disordered iff all 3 are
// opposite. A mixed vertex throws: downstream invariants presume the dichotomy.
std::vector<VertexClass> classify_vertices(const OrientedCycleCover& ocover);

// Rich iff the edge's 4 coverages show 4 distinct neighbour-combinations
// (unordered pair of companion edges at the two endpoints, ignoring
// direction); poor iff exactly 2. Anything else throws.
std::vector<EdgeClass> classify_edges(const OrientedCycleCover& ocover);

// Full report: vertices, edges and subtypes.
ClassificationReport classify(const OrientedCycleCover& ocover);

}  // namespace cyclecover
