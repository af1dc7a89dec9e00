#include "cyclecover/ribbon.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cyclecover/classify.hpp"

namespace cyclecover {

namespace {

bool is_even_sequence(const std::array<int, 6>& s) {
    int inv = 0;
    for (int i = 0; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j)
            if (s[i] > s[j]) ++inv;
    return inv % 2 == 0;
}

std::array<int, 6> flatten(const Triple& t) {
    return {t.in[0], t.in[1], t.out[0], t.out[1], t.match[0], t.match[1]};
}

struct Passage {
    int in = -1, out = -1, pm = -1;  // edges of the cycle's pass through v
};

// each of the 6 cycles passes an o6c4c vertex exactly once
std::array<Passage, 6> passages_at(const OrientedCycleCover& ocover, int v) {
    const CubicGraph& g = *ocover.graph;
    std::array<Passage, 6> out;
    if (ocover.k() != 6) throw GraphError("pairlist needs a 6-cycle cover");
    for (int c = 0; c < 6; ++c) {
        bool found = false;
        for (const auto& circ : ocover.cycles[c]) {
            int len = circ.length();
            for (int i = 0; i < len; ++i) {
                if (circ.directed_edges[i].head != v) continue;
                if (found)
                    throw GraphError("cycle passes vertex more than once");
                found = true;
                out[c].in = circ.directed_edges[i].edge;
                out[c].out = circ.directed_edges[(i + 1) % len].edge;
                for (int e : g.incident_edges(v))
                    if (e != out[c].in && e != out[c].out) out[c].pm = e;
            }
        }
        if (!found)
            throw GraphError("cycle misses vertex " + std::to_string(v));
    }
    return out;
}

}  // namespace

PairList pairlist_at_vertex(const OrientedCycleCover& ocover, int v) {
    auto pass = passages_at(ocover, v);
    int A = pass[0].in, B = pass[0].out, C = pass[0].pm;
    // reference rotation A -> B -> C; the step that skips edge e
    auto step = [&](int e) -> std::pair<int, int> {
        if (e == C) return {A, B};
        if (e == A) return {B, C};
        return {C, A};
    };
    // pair(e): the two cycles avoiding e at v, consistent-direction first
    auto pair_for = [&](int e) -> std::array<int, 2> {
        std::array<int, 2> p{-1, -1};
        auto [from, to] = step(e);
        for (int c = 0; c < 6; ++c) {
            if (pass[c].pm != e) continue;
            if (pass[c].in == from && pass[c].out == to) {
                if (p[0] != -1) throw GraphError("ordered corner at vertex " +
                                                 std::to_string(v));
                p[0] = c;
            } else if (pass[c].in == to && pass[c].out == from) {
                if (p[1] != -1) throw GraphError("ordered corner at vertex " +
                                                 std::to_string(v));
                p[1] = c;
            } else {
                throw GraphError("cycle avoiding an edge uses it");
            }
        }
        return p;
    };
    // two candidates: pairs along the rotation starting at C (cycle 0's
    // pair), or everything flipped and the rotation reversed
    PairList cand1{{pair_for(C), pair_for(A), pair_for(B)}, {C, A, B}};
    PairList cand2{{{{cand1.pairs[0][1], cand1.pairs[0][0]},
                     {cand1.pairs[2][1], cand1.pairs[2][0]},
                     {cand1.pairs[1][1], cand1.pairs[1][0]}}},
                   {C, B, A}};
    auto sequence = [](const PairList& pl) -> std::array<int, 6> {
        // rotate so the pair containing cycle 0 comes first
        int s = 0;
        for (int i = 0; i < 3; ++i)
            if (pl.pairs[i][0] == 0 || pl.pairs[i][1] == 0) s = i;
        std::array<int, 6> seq{};
        for (int i = 0; i < 3; ++i) {
            seq[2 * i] = pl.pairs[(s + i) % 3][0];
            seq[2 * i + 1] = pl.pairs[(s + i) % 3][1];
        }
        return seq;
    };
    bool e1 = is_even_sequence(sequence(cand1));
    bool e2 = is_even_sequence(sequence(cand2));
    if (e1 == e2)
        throw GraphError("parity rule failed to single out a pairlist at " +
                         std::to_string(v));
    return e1 ? cand1 : cand2;
}

RotationSystem rotation_from_pairlists(const OrientedCycleCover& ocover) {
    const CubicGraph& g = *ocover.graph;
    RotationSystem rot;
    rot.order.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        rot.order[v] = pairlist_at_vertex(ocover, v).edges;
    return rot;
}

std::vector<std::vector<DirectedEdge>> trace_faces(const CubicGraph& g,
                                                   const RotationSystem& rot) {
    if (static_cast<int>(rot.order.size()) != g.vertex_count())
        throw GraphError("rotation does not cover every vertex");
    auto successor = [&](int v, int e) {
        const auto& o = rot.order[v];
        for (int i = 0; i < 3; ++i)
            if (o[i] == e) return o[(i + 1) % 3];
        throw GraphError("rotation at vertex " + std::to_string(v) +
                         " misses edge " + std::to_string(e));
    };
    std::vector<char> used(2 * g.edge_count(), 0);
    auto did = [&](const DirectedEdge& d) {
        return 2 * d.edge + (d.head == g.reference_head(d.edge) ? 0 : 1);
    };
    std::vector<std::vector<DirectedEdge>> faces;
    for (int e = 0; e < g.edge_count(); ++e) {
        for (int h : {g.edge(e).first, g.edge(e).second}) {
            DirectedEdge start{e, h};
            if (used[did(start)]) continue;
            std::vector<DirectedEdge> face;
            DirectedEdge cur = start;
            do {
                used[did(cur)] = 1;
                face.push_back(cur);
                int next = successor(cur.head, cur.edge);
                cur = DirectedEdge{next, g.other_end(next, cur.head)};
            } while (!(cur == start));
            faces.push_back(std::move(face));
        }
    }
    return faces;
}

TripleClasses triple_classes() {
    TripleClasses tc;
    std::array<int, 6> perm{1, 2, 3, 4, 5, 6};
    std::vector<Triple> all;
    std::map<Triple, int> index;
    do {
        if (!is_even_sequence(perm)) continue;
        Triple t{{perm[0], perm[1]}, {perm[2], perm[3]}, {perm[4], perm[5]}};
        index.emplace(t, static_cast<int>(all.size()));
        all.push_back(t);
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (all.size() != 360) throw GraphError("expected 360 even triples");

    std::vector<int> parent(all.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto unite = [&](const Triple& a, const Triple& b) {
        auto ia = index.find(a), ib = index.find(b);
        if (ia == index.end() || ib == index.end())
            throw GraphError("equivalence rule left the even triples");
        parent[find(ia->second)] = find(ib->second);
    };
    for (const auto& t : all) {
        auto [ab, cd, ef] = t;
        unite(t, Triple{cd, ab, ef});
        unite(t, Triple{ab, {ef[1], ef[0]}, {cd[1], cd[0]}});
        unite(t, Triple{{ab[1], ab[0]}, {cd[0], ef[0]}, {cd[1], ef[1]}});
    }
    std::map<int, std::vector<Triple>> groups;
    for (std::size_t i = 0; i < all.size(); ++i)
        groups[find(static_cast<int>(i))].push_back(all[i]);
    for (auto& [root, members] : groups) {
        if (members.size() != 60)
            throw GraphError("triple class of size " +
                             std::to_string(members.size()));
        std::sort(members.begin(), members.end());
        tc.classes.push_back(members);
    }
    if (tc.classes.size() != 6) throw GraphError("expected 6 triple classes");
    // canonical class order: by the representative whose first pair is (1,2)
    auto key12 = [](const std::vector<Triple>& cls) {
        for (const auto& t : cls)
            if (t.in == std::array<int, 2>{1, 2}) return t;
        throw GraphError("class lacks a (12 -> ..) member");
    };
    std::sort(tc.classes.begin(), tc.classes.end(),
              [&](const auto& a, const auto& b) { return key12(a) < key12(b); });
    // representatives: one per ordered first pair containing 1, picking the
    // member whose 2 (then 3, 4, ...) lies in the leftmost possible pair
    auto norm_key = [](const Triple& t) {
        auto s = flatten(t);
        std::array<int, 7> pos{};
        for (int i = 0; i < 6; ++i) pos[s[i]] = i / 2;
        return std::array<int, 5>{pos[2], pos[3], pos[4], pos[5], pos[6]};
    };
    for (const auto& cls : tc.classes) {
        std::map<std::array<int, 2>, Triple> best;
        for (const auto& t : cls) {
            if (t.in[0] != 1 && t.in[1] != 1) continue;
            auto it = best.find(t.in);
            if (it == best.end() || norm_key(t) < norm_key(it->second))
                best.insert_or_assign(t.in, t);
        }
        std::vector<Triple> reps;
        for (auto& [fp, t] : best) reps.push_back(t);
        if (reps.size() != 10)
            throw GraphError("expected 10 representatives per class");
        std::sort(reps.begin(), reps.end());
        tc.representatives.push_back(std::move(reps));
    }
    return tc;
}

int TripleClasses::class_of(const Triple& t) const {
    for (std::size_t c = 0; c < classes.size(); ++c)
        if (std::binary_search(classes[c].begin(), classes[c].end(), t))
            return static_cast<int>(c);
    return -1;
}

OrientedCycleCover derive_o6cdc(const OrientedCycleCover& ocover) {
    const CubicGraph& g = *ocover.graph;
    std::vector<PairList> pls;
    pls.reserve(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        pls.push_back(pairlist_at_vertex(ocover, v));
    RotationSystem rot;
    rot.order.resize(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) rot.order[v] = pls[v].edges;

    auto faces = trace_faces(g, rot);
    auto tc = triple_classes();
    auto pair_at = [&](int v, int e) -> std::array<int, 2> {
        const auto& pl = pls[v];
        for (int i = 0; i < 3; ++i)
            if (pl.edges[i] == e)
                return {pl.pairs[i][0] + 1, pl.pairs[i][1] + 1};
        throw GraphError("edge not incident");
    };
    OrientedCycleCover out;
    out.graph = &g;
    out.m = 2;
    out.cycles.assign(6, {});
    for (const auto& face : faces) {
        // circuit check: the derivation guarantees distinct vertices
        std::vector<int> vs;
        for (const auto& d : face) vs.push_back(d.head);
        auto sorted = vs;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            std::string msg = "derived face is not a circuit:";
            for (int v : vs) msg += " " + std::to_string(v);
            throw GraphError(msg);
        }
        int cls = -1;
        int len = static_cast<int>(face.size());
        for (int i = 0; i < len; ++i) {
            int v = face[i].head;
            int a = face[i].edge, b = face[(i + 1) % len].edge;
            int c = -1;
            for (int e : g.incident_edges(v))
                if (e != a && e != b) c = e;
            Triple t{pair_at(v, a), pair_at(v, b), pair_at(v, c)};
            int here = tc.class_of(t);
            if (here < 0) throw GraphError("face signature not classified");
            if (cls == -1)
                cls = here;
            else if (cls != here)
                throw GraphError("face crosses triple classes");
        }
        out.cycles[cls].push_back(Circuit{face});
    }
    auto rep = verify_oriented_cover(g, out);
    if (!rep.valid())
        throw GraphError("derived o6cdc fails verification: " +
                         rep.failures.front());
    return out;
}

std::array<Triple, 4> o4cdc_triples() {
    return {Triple{{1, 4}, {2, 5}, {6, 3}}, Triple{{4, 1}, {2, 5}, {3, 6}},
            Triple{{1, 4}, {5, 2}, {3, 6}}, Triple{{4, 1}, {5, 2}, {6, 3}}};
}

}  // namespace cyclecover
