#include "cyclecover/classify.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cyclecover {

int ClassificationReport::ordered_count() const {
    return static_cast<int>(std::count(vertex_class.begin(),
                                       vertex_class.end(),
                                       VertexClass::ordered));
}
int ClassificationReport::disordered_count() const {
    return static_cast<int>(vertex_class.size()) - ordered_count();
}
int ClassificationReport::rich_count() const {
    return static_cast<int>(
        std::count(edge_class.begin(), edge_class.end(), EdgeClass::rich));
}
int ClassificationReport::poor_count() const {
    return static_cast<int>(edge_class.size()) - rich_count();
}
int ClassificationReport::subtype_count(EdgeSubtype t) const {
    return static_cast<int>(
        std::count(edge_subtype.begin(), edge_subtype.end(), t));
}

std::vector<CornerPassage> corners(const OrientedCycleCover& ocover) {
    const CubicGraph& g = *ocover.graph;
    std::map<std::pair<int, std::array<int, 2>>,
             std::vector<CornerPassage::Traversal>>
        acc;
    for (int ci = 0; ci < ocover.k(); ++ci) {
        for (const auto& circ : ocover.cycles[ci]) {
            int len = circ.length();
            for (int i = 0; i < len; ++i) {
                const auto& in = circ.directed_edges[i];
                const auto& out = circ.directed_edges[(i + 1) % len];
                int v = in.head;
                std::array<int, 2> pair{in.edge, out.edge};
                if (pair[0] > pair[1]) std::swap(pair[0], pair[1]);
                acc[{v, pair}].push_back({ci, in.edge, out.edge});
            }
        }
    }
    std::vector<CornerPassage> out;
    for (auto& [key, trav] : acc) {
        if (trav.size() != 2)
            throw GraphError("corner at vertex " + std::to_string(key.first) +
                             " traversed " + std::to_string(trav.size()) +
                             " times, expected 2");
        CornerPassage c;
        c.vertex = key.first;
        c.edge_pair = key.second;
        c.traversals = {trav[0], trav[1]};
        out.push_back(c);
    }
    // in a 6c4c every vertex has exactly its 3 corners present
    for (int v = 0, idx = 0; v < g.vertex_count(); ++v) {
        int cnt = 0;
        while (idx < static_cast<int>(out.size()) && out[idx].vertex == v) {
            ++idx;
            ++cnt;
        }
        if (cnt != 3)
            throw GraphError("vertex " + std::to_string(v) + " has " +
                             std::to_string(cnt) + " corners, expected 3");
    }
    return out;
}

std::vector<VertexClass> classify_vertices(const OrientedCycleCover& ocover) {
    const CubicGraph& g = *ocover.graph;
    auto cs = corners(ocover);
    std::vector<int> same(g.vertex_count(), 0), total(g.vertex_count(), 0);
    for (const auto& c : cs) {
        ++total[c.vertex];
        if (c.same_direction()) ++same[c.vertex];
    }
    std::vector<VertexClass> out(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (same[v] == total[v])
            out[v] = VertexClass::ordered;
        else if (same[v] == 0)
            out[v] = VertexClass::disordered;
        else
            throw GraphError("mixed vertex " + std::to_string(v) + ": " +
                             std::to_string(same[v]) +
                             " same-direction corners of " +
                             std::to_string(total[v]));
    }
    return out;
}

std::vector<EdgeClass> classify_edges(const OrientedCycleCover& ocover) {
    const CubicGraph& g = *ocover.graph;
    // per edge: the set of distinct companion-edge combinations over its 4
    // coverages; a combination is (companion at lower endpoint, companion at
    // higher endpoint), direction ignored
    std::vector<std::set<std::pair<int, int>>> combos(g.edge_count());
    std::vector<int> coverages(g.edge_count(), 0);
    for (const auto& circs : ocover.cycles) {
        for (const auto& circ : circs) {
            int len = circ.length();
            for (int i = 0; i < len; ++i) {
                int e = circ.directed_edges[i].edge;
                int prev = circ.directed_edges[(i + len - 1) % len].edge;
                int next = circ.directed_edges[(i + 1) % len].edge;
                // prev joins e at its tail, next at its head
                int head = circ.directed_edges[i].head;
                auto [lo, hi] = g.edge(e);
                int at_lo = (head == lo) ? next : prev;
                int at_hi = (head == hi) ? next : prev;
                combos[e].insert({at_lo, at_hi});
                ++coverages[e];
            }
        }
    }
    std::vector<EdgeClass> out(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        if (coverages[e] != 4)
            throw GraphError("edge " + std::to_string(e) + " covered " +
                             std::to_string(coverages[e]) + " times");
        if (combos[e].size() == 4)
            out[e] = EdgeClass::rich;
        else if (combos[e].size() == 2)
            out[e] = EdgeClass::poor;
        else
            throw GraphError("edge " + std::to_string(e) + " has " +
                             std::to_string(combos[e].size()) +
                             " neighbour combinations, expected 2 or 4");
    }
    return out;
}

ClassificationReport classify(const OrientedCycleCover& ocover) {
    const CubicGraph& g = *ocover.graph;
    ClassificationReport rep;
    rep.vertex_class = classify_vertices(ocover);
    rep.edge_class = classify_edges(ocover);
    rep.edge_subtype.resize(g.edge_count());
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edge(e);
        int ordered_ends = (rep.vertex_class[u] == VertexClass::ordered) +
                           (rep.vertex_class[v] == VertexClass::ordered);
        bool rich = rep.edge_class[e] == EdgeClass::rich;
        EdgeSubtype t;
        if (rich && ordered_ends == 0)
            t = EdgeSubtype::drd;
        else if (rich && ordered_ends == 1)
            t = EdgeSubtype::dro;
        else if (!rich && ordered_ends == 0)
            t = EdgeSubtype::dpd;
        else if (!rich && ordered_ends == 2)
            t = EdgeSubtype::opo;
        else {
            t = EdgeSubtype::unexpected;
            rep.taxonomy_counterexamples.push_back(
                "edge " + std::to_string(e) + " is " +
                (rich ? "rich" : "poor") + " with " +
                std::to_string(ordered_ends) + " ordered endpoints");
        }
        rep.edge_subtype[e] = t;
    }
    return rep;
}

}  // namespace cyclecover
