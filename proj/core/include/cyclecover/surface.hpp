#pragma once

#include <utility>
#include <vector>

#include "cyclecover/classify.hpp"
#include "cyclecover/cover.hpp"

namespace cyclecover {

// Closed boundary walk; each entry is the label of one unglued polygon side
// (corner id 3·v+slot for the o6c4c surface, edge id for split surfaces).
struct Boundary {
    std::vector<int> side_labels;
    std::vector<int> faces;  // owning face per side
    int length() const { return static_cast<int>(side_labels.size()); }
};

struct SurfaceComponent {
    int V = 0, E = 0, F = 0;
    int boundary_count = 0;
    int chi = 0;    // V − E + F of the bounded complex
    int genus = 0;  // after capping each boundary with a disk
    std::vector<int> face_ids;
    std::vector<int> boundary_ids;
};

struct SurfaceStats {
    int V = 0, E = 0, F = 0;
    std::vector<SurfaceComponent> components;
};

// Polygonal complex: one polygon per circuit of the cover, sides glued in
// orientation-reversing pairs. Side and node labels tie complex elements
// back to the graph (see the factory functions for the labeling scheme).
struct SurfaceGraph {
    std::vector<int> face_len;
    std::vector<std::vector<int>> side_label;  // per face, per position
    std::vector<std::vector<int>> node_label;  // per face, per position
    std::vector<int> partner;  // flat side index -> partner side or -1

    int flat(int f, int i) const { return offsets_[f] + i; }
    int face_of_flat(int s) const;
    void finalize();  // computes offsets after faces are filled

    // populated by finalize(): s-vertex class per node instance
    const std::vector<int>& node_class() const { return node_class_; }
    int node_class_count() const { return node_class_count_; }

private:
    std::vector<int> offsets_;
    std::vector<int> node_class_;
    int node_class_count_ = 0;
    friend SurfaceStats surface_stats(const SurfaceGraph&);
    friend std::vector<Boundary> trace_boundaries(const SurfaceGraph&);
};

// The o6c4c surface: faces are the circuits, polygon sides are corner
// passages, node instances are edge traversals. A corner whose two passages
// run in opposite directions is glued (all corners of disordered vertices);
// corners of ordered vertices stay unglued and produce boundary. Side label
// = corner id (3·vertex + slot); node label = G edge id.
SurfaceGraph glue_surface(const OrientedCycleCover& ocover,
                          const ClassificationReport& report);

// Boundary walks (each unglued side on exactly one walk), canonicalized to
// their lexicographically least rotation. Deterministic order.
std::vector<Boundary> trace_boundaries(const SurfaceGraph& surface);

// Per-component V, E, F, boundary count, Euler characteristic and genus
// (computed after capping boundaries with disks). Throws GraphError if the
// capped characteristic is not of the form 2 − 2g.
SurfaceStats surface_stats(const SurfaceGraph& surface);

// The two surfaces of a 6cdc split: for each half, faces are its circuits,
// polygon sides are edge passages (each edge is covered exactly twice per
// half) glued iff the two passages run oppositely. Side label = G edge id;
// node label = G vertex id.
std::pair<SurfaceGraph, SurfaceGraph> split_surfaces(
    const OrientedCycleCover& ocover, const CdcSplit& split);

// Distinct s-vertex classes among the traversal nodes labeled `label`.
int s_vertex_count_for_label(const SurfaceGraph& surface, int label);

}  // namespace cyclecover
