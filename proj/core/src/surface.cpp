#include "cyclecover/surface.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace cyclecover {

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

// flatten circuits of selected cycles into polygons; returns (face, pos) per
// traversal via the callback
template <typename Fn>
void build_polygons(const OrientedCycleCover& ocover,
                    const std::vector<int>& cycle_ids, SurfaceGraph& s,
                    Fn&& per_side) {
    for (int ci : cycle_ids) {
        for (const auto& circ : ocover.cycles[ci]) {
            int f = static_cast<int>(s.face_len.size());
            int len = circ.length();
            s.face_len.push_back(len);
            s.side_label.emplace_back(len, -1);
            s.node_label.emplace_back(len, -1);
            for (int i = 0; i < len; ++i) per_side(f, i, ci, circ);
        }
    }
}

}  // namespace

int SurfaceGraph::face_of_flat(int s) const {
    int f = static_cast<int>(
        std::upper_bound(offsets_.begin(), offsets_.end(), s) -
        offsets_.begin() - 1);
    return f;
}

void SurfaceGraph::finalize() {
    offsets_.clear();
    int total = 0;
    for (int len : face_len) {
        offsets_.push_back(total);
        total += len;
    }
    partner.resize(total, -1);
    // node identification: gluing side (f1,i1)~(f2,i2) identifies nodes
    // crosswise: n(f1,i1) ~ n(f2,i2+1) and n(f1,i1+1) ~ n(f2,i2)
    UnionFind uf(total);
    for (int f = 0; f < static_cast<int>(face_len.size()); ++f) {
        int len = face_len[f];
        for (int i = 0; i < len; ++i) {
            int s1 = flat(f, i);
            int s2 = partner[s1];
            if (s2 < 0 || s2 < s1) continue;
            int f2 = face_of_flat(s2);
            int i2 = s2 - offsets_[f2];
            int l2 = face_len[f2];
            uf.unite(flat(f, i), flat(f2, (i2 + 1) % l2));
            uf.unite(flat(f, (i + 1) % len), flat(f2, i2));
        }
    }
    node_class_.assign(total, -1);
    std::map<int, int> renum;
    for (int x = 0; x < total; ++x) {
        int r = uf.find(x);
        auto [it, fresh] = renum.emplace(r, static_cast<int>(renum.size()));
        node_class_[x] = it->second;
    }
    node_class_count_ = static_cast<int>(renum.size());
}

std::vector<Boundary> trace_boundaries(const SurfaceGraph& s) {
    // side instance navigation: (flat side, end); end 0 sits at node (f,i),
    // end 1 at node (f,i+1)
    int nfaces = static_cast<int>(s.face_len.size());
    std::vector<int> face_of(s.partner.size());
    std::vector<int> pos_of(s.partner.size());
    for (int f = 0; f < nfaces; ++f)
        for (int i = 0; i < s.face_len[f]; ++i) {
            face_of[s.flat(f, i)] = f;
            pos_of[s.flat(f, i)] = i;
        }
    auto wedge = [&](int side, int end) -> std::pair<int, int> {
        int f = face_of[side], i = pos_of[side], len = s.face_len[f];
        int j = (end == 0) ? i : (i + 1) % len;  // node position
        // the two sides at node (f,j) are (f,j-1) with end 1 and (f,j) end 0
        if (end == 0) return {s.flat(f, (j + len - 1) % len), 1};
        return {s.flat(f, j), 0};
    };
    std::vector<char> visited(s.partner.size(), 0);
    std::vector<Boundary> out;
    for (std::size_t s0 = 0; s0 < s.partner.size(); ++s0) {
        if (s.partner[s0] >= 0 || visited[s0]) continue;
        Boundary b;
        int side = static_cast<int>(s0), end = 0;
        do {
            if (visited[side])
                throw GraphError("boundary walk revisits a side");
            visited[side] = 1;
            b.side_labels.push_back(
                s.side_label[face_of[side]][pos_of[side]]);
            b.faces.push_back(face_of[side]);
            // advance: cross to the far end of this boundary side, then
            // rotate through glued wedges until the next unglued side
            auto [t, d] = wedge(side, 1 - end);
            while (s.partner[t] >= 0) {
                t = s.partner[t];
                d = 1 - d;  // crosswise node identification swaps ends
                std::tie(t, d) = wedge(t, d);
            }
            side = t;
            end = d;
        } while (side != static_cast<int>(s0));
        // canonical rotation: lexicographically least label sequence
        int n = b.length();
        int best = 0;
        auto less_rot = [&](int a, int c) {
            for (int k = 0; k < n; ++k) {
                int la = b.side_labels[(a + k) % n],
                    lc = b.side_labels[(c + k) % n];
                if (la != lc) return la < lc;
            }
            return false;
        };
        for (int r = 1; r < n; ++r)
            if (less_rot(r, best)) best = r;
        Boundary canon;
        for (int k = 0; k < n; ++k) {
            canon.side_labels.push_back(b.side_labels[(best + k) % n]);
            canon.faces.push_back(b.faces[(best + k) % n]);
        }
        out.push_back(std::move(canon));
    }
    std::sort(out.begin(), out.end(), [](const Boundary& a, const Boundary& b) {
        return std::pair(a.side_labels, a.faces) <
               std::pair(b.side_labels, b.faces);
    });
    return out;
}

SurfaceStats surface_stats(const SurfaceGraph& s) {
    SurfaceStats st;
    int nfaces = static_cast<int>(s.face_len.size());
    int total_sides = static_cast<int>(s.partner.size());
    // components: faces connected through shared node classes
    UnionFind comp(s.node_class_count());
    for (int f = 0; f < nfaces; ++f)
        for (int i = 1; i < s.face_len[f]; ++i)
            comp.unite(s.node_class()[s.flat(f, 0)],
                       s.node_class()[s.flat(f, i)]);
    std::map<int, int> comp_id;
    auto cid_of_class = [&](int cls) {
        int r = comp.find(cls);
        auto [it, fresh] = comp_id.emplace(r, static_cast<int>(comp_id.size()));
        return it->second;
    };
    std::vector<int> class_comp(s.node_class_count());
    for (int c = 0; c < s.node_class_count(); ++c)
        class_comp[c] = cid_of_class(c);
    st.components.resize(comp_id.size());
    std::vector<int> face_comp(nfaces);
    for (int f = 0; f < nfaces; ++f) {
        face_comp[f] = class_comp[s.node_class()[s.flat(f, 0)]];
        auto& c = st.components[face_comp[f]];
        ++c.F;
        c.face_ids.push_back(f);
    }
    for (int c = 0; c < s.node_class_count(); ++c)
        ++st.components[class_comp[c]].V;
    for (int f = 0; f < nfaces; ++f)
        for (int i = 0; i < s.face_len[f]; ++i) {
            int sd = s.flat(f, i);
            if (s.partner[sd] >= 0 && s.partner[sd] < sd) continue;
            ++st.components[face_comp[f]].E;
        }
    auto bounds = trace_boundaries(s);
    for (std::size_t bi = 0; bi < bounds.size(); ++bi) {
        auto& c = st.components[face_comp[bounds[bi].faces[0]]];
        ++c.boundary_count;
        c.boundary_ids.push_back(static_cast<int>(bi));
    }
    for (auto& c : st.components) {
        c.chi = c.V - c.E + c.F;
        int capped = c.chi + c.boundary_count;
        if ((2 - capped) % 2 != 0 || capped > 2)
            throw GraphError("surface component has invalid characteristic " +
                             std::to_string(capped));
        c.genus = (2 - capped) / 2;
        st.V += c.V;
        st.E += c.E;
        st.F += c.F;
    }
    (void)total_sides;
    return st;
}

SurfaceGraph glue_surface(const OrientedCycleCover& ocover,
                          const ClassificationReport& report) {
    const CubicGraph& g = *ocover.graph;
    if (static_cast<int>(report.vertex_class.size()) != g.vertex_count())
        throw GraphError("classification does not match the graph");
    SurfaceGraph s;
    // corner slot within a vertex: index of the avoided (third) edge in the
    // vertex's incidence list, so corner id = 3·v + slot
    auto corner_id = [&](int v, int e_in, int e_out) {
        auto inc = g.incident_edges(v);
        for (int j = 0; j < 3; ++j)
            if (inc[j] != e_in && inc[j] != e_out) return 3 * v + j;
        throw GraphError("degenerate corner");
    };
    std::map<int, std::vector<std::pair<int, int>>> passages;  // corner -> sides
    std::map<int, std::vector<int>> dirs;  // corner -> from_edge per passage
    std::vector<int> all(ocover.k());
    std::iota(all.begin(), all.end(), 0);
    build_polygons(ocover, all, s,
                   [&](int f, int i, int, const Circuit& circ) {
                       int len = circ.length();
                       const auto& in = circ.directed_edges[i];
                       const auto& out = circ.directed_edges[(i + 1) % len];
                       int cid = corner_id(in.head, in.edge, out.edge);
                       s.side_label[f][i] = cid;
                       s.node_label[f][i] = in.edge;  // node at end 0 = edge
                       passages[cid].push_back({f, i});
                       dirs[cid].push_back(in.edge);
                   });
    s.finalize();
    for (auto& [cid, ps] : passages) {
        if (ps.size() != 2)
            throw GraphError("corner not traversed exactly twice");
        bool opposite = dirs[cid][0] != dirs[cid][1];
        int v = cid / 3;
        bool disordered = report.vertex_class[v] == VertexClass::disordered;
        if (opposite != disordered)
            throw GraphError("classification mismatch at corner " +
                             std::to_string(cid));
        if (opposite) {
            int a = s.flat(ps[0].first, ps[0].second);
            int b = s.flat(ps[1].first, ps[1].second);
            s.partner[a] = b;
            s.partner[b] = a;
        }
    }
    s.finalize();  // recompute node classes with gluings in place
    return s;
}

std::pair<SurfaceGraph, SurfaceGraph> split_surfaces(
    const OrientedCycleCover& ocover, const CdcSplit& split) {
    const CubicGraph& g = *ocover.graph;
    auto make = [&](const std::vector<std::pair<int, int>>& half) {
        SurfaceGraph s;
        std::map<int, std::vector<std::pair<int, int>>> passages;
        std::map<int, std::vector<int>> heads;
        for (auto& [cy, ci] : half) {
            const Circuit& circ = ocover.cycles[cy][ci];
            int f = static_cast<int>(s.face_len.size());
            int len = circ.length();
            s.face_len.push_back(len);
            s.side_label.emplace_back(len, -1);
            s.node_label.emplace_back(len, -1);
            for (int i = 0; i < len; ++i) {
                const auto& d = circ.directed_edges[i];
                s.side_label[f][i] = d.edge;
                // node at end 0 = the vertex this side leaves
                s.node_label[f][i] = g.other_end(d.edge, d.head);
                passages[d.edge].push_back({f, i});
                heads[d.edge].push_back(d.head);
            }
        }
        s.finalize();
        for (auto& [e, ps] : passages) {
            if (ps.size() != 2)
                throw GraphError("split half does not double-cover edge " +
                                 std::to_string(e));
            if (heads[e][0] != heads[e][1]) {  // opposite directions
                int a = s.flat(ps[0].first, ps[0].second);
                int b = s.flat(ps[1].first, ps[1].second);
                s.partner[a] = b;
                s.partner[b] = a;
            }
        }
        if (passages.size() != static_cast<std::size_t>(g.edge_count()))
            throw GraphError("split half misses edges");
        s.finalize();
        return s;
    };
    return {make(split.first), make(split.second)};
}

int s_vertex_count_for_label(const SurfaceGraph& s, int label) {
    std::vector<char> seen(s.node_class_count(), 0);
    int cnt = 0;
    for (std::size_t f = 0; f < s.node_label.size(); ++f)
        for (std::size_t i = 0; i < s.node_label[f].size(); ++i)
            if (s.node_label[f][i] == label) {
                int cls = s.node_class()[s.flat(static_cast<int>(f),
                                                static_cast<int>(i))];
                if (!seen[cls]) {
                    seen[cls] = 1;
                    ++cnt;
                }
            }
    return cnt;
}

}  // namespace cyclecover
