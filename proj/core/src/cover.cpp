#include "cyclecover/cover.hpp"

#include <algorithm>

namespace cyclecover {

CycleCover OrientedCycleCover::underlying() const {
    CycleCover c;
    c.graph = graph;
    c.m = m;
    c.cycles.reserve(cycles.size());
    for (const auto& circs : cycles) {
        EvenSubgraph s;
        for (const auto& circ : circs) s |= circ.edge_set();
        c.cycles.push_back(s);
    }
    return c;
}

int OrientedCycleCover::circuit_count() const {
    int total = 0;
    for (const auto& circs : cycles) total += static_cast<int>(circs.size());
    return total;
}

VerifyReport verify_cover(const CubicGraph& g,
                          const std::vector<EvenSubgraph>& cycles, int m) {
    VerifyReport rep;
    for (std::size_t i = 0; i < cycles.size(); ++i)
        if (!is_even_subgraph(g, cycles[i]))
            rep.failures.push_back("cycle " + std::to_string(i) +
                                   " is not an even subgraph");
    for (int e = 0; e < g.edge_count(); ++e) {
        int cnt = 0;
        for (const auto& c : cycles) cnt += c.contains(e);
        if (cnt != m)
            rep.failures.push_back("edge " + std::to_string(e) + " covered " +
                                   std::to_string(cnt) + " times, expected " +
                                   std::to_string(m));
    }
    return rep;
}

VerifyReport verify_oriented_cover(const CubicGraph& g,
                                   const OrientedCycleCover& ocover) {
    VerifyReport rep;
    if (ocover.m % 2 != 0) {
        rep.failures.push_back("odd multiplicity cannot be oriented");
        return rep;
    }
    // circuits well-formed and edge-disjoint within each cycle
    for (std::size_t i = 0; i < ocover.cycles.size(); ++i) {
        EdgeSet seen;
        for (const auto& circ : ocover.cycles[i]) {
            int prev = circ.directed_edges.empty()
                           ? -1
                           : circ.directed_edges.back().head;
            for (const auto& d : circ.directed_edges) {
                if (d.edge < 0 || d.edge >= g.edge_count() ||
                    g.other_end(d.edge, d.head) != prev) {
                    rep.failures.push_back("cycle " + std::to_string(i) +
                                           " contains a broken circuit");
                    break;
                }
                prev = d.head;
                if (seen.contains(d.edge)) {
                    rep.failures.push_back(
                        "cycle " + std::to_string(i) + " reuses edge " +
                        std::to_string(d.edge));
                    break;
                }
                seen.add(d.edge);
            }
        }
        if (!is_even_subgraph(g, seen))
            rep.failures.push_back("cycle " + std::to_string(i) +
                                   " is not an even subgraph");
    }
    auto under = ocover.underlying();
    auto base = verify_cover(g, under.cycles, ocover.m);
    for (auto& f : base.failures) rep.failures.push_back(std::move(f));
    // direction balance
    std::vector<int> fwd(g.edge_count(), 0), bwd(g.edge_count(), 0);
    for (const auto& circs : ocover.cycles)
        for (const auto& circ : circs)
            for (const auto& d : circ.directed_edges)
                (d.head == g.reference_head(d.edge) ? fwd : bwd)[d.edge]++;
    for (int e = 0; e < g.edge_count(); ++e)
        if (fwd[e] != ocover.m / 2 || bwd[e] != ocover.m / 2)
            rep.failures.push_back(
                "edge " + std::to_string(e) + " traversed " +
                std::to_string(fwd[e]) + "+" + std::to_string(bwd[e]) +
                ", expected " + std::to_string(ocover.m / 2) + "+" +
                std::to_string(ocover.m / 2));
    return rep;
}

OrientedCycleCover o6c4c_from_colouring(const CubicGraph& g,
                                        const std::vector<int>& colouring) {
    if (static_cast<int>(colouring.size()) != g.edge_count())
        throw GraphError("colouring size mismatch");
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto inc = g.incident_edges(v);
        int mask = 0;
        for (int e : inc) {
            int c = colouring[e];
            if (c < 1 || c > 3) throw GraphError("colour out of range");
            mask |= 1 << c;
        }
        if (mask != 0b1110)
            throw GraphError("improper colouring at vertex " +
                             std::to_string(v));
    }
    OrientedCycleCover oc;
    oc.graph = &g;
    oc.m = 4;
    for (auto [c1, c2] : {std::pair{1, 2}, {1, 3}, {2, 3}}) {
        EvenSubgraph s;
        for (int e = 0; e < g.edge_count(); ++e)
            if (colouring[e] == c1 || colouring[e] == c2) s.add(e);
        oc.cycles.push_back(circuits(g, s));
    }
    for (int i = 0; i < 3; ++i) {
        std::vector<Circuit> rev;
        for (const auto& circ : oc.cycles[i]) rev.push_back(circ.reversed(g));
        oc.cycles.push_back(std::move(rev));
    }
    return oc;
}

std::vector<OrientedCycleCover> orient_cover(const CubicGraph& g,
                                             const CycleCover& cover,
                                             SearchMode mode) {
    int half = cover.m / 2;
    if (cover.m % 2 != 0) return {};
    // flatten circuits, remembering their owning cycle
    struct Item {
        int cycle;
        Circuit circ;
    };
    std::vector<Item> items;
    for (int i = 0; i < cover.k(); ++i)
        for (auto& circ : circuits(g, cover.cycles[i]))
            items.push_back({i, std::move(circ)});

    std::vector<int> fwd(g.edge_count(), 0), bwd(g.edge_count(), 0);
    std::vector<int> flip(items.size(), 0);
    std::vector<OrientedCycleCover> out;

    auto emit = [&]() {
        OrientedCycleCover oc;
        oc.graph = cover.graph ? cover.graph : &g;
        oc.m = cover.m;
        oc.cycles.assign(cover.k(), {});
        for (std::size_t i = 0; i < items.size(); ++i)
            oc.cycles[items[i].cycle].push_back(
                flip[i] ? items[i].circ.reversed(g) : items[i].circ);
        out.push_back(std::move(oc));
    };

    // try one direction of circuit i; returns false on balance overflow
    auto apply = [&](const Circuit& c, bool rev, int delta) -> bool {
        for (const auto& d : c.directed_edges) {
            bool forward = (d.head == g.reference_head(d.edge)) != rev;
            int& cnt = forward ? fwd[d.edge] : bwd[d.edge];
            cnt += delta;
            if (delta > 0 && cnt > half) {
                // roll back the partial application
                cnt -= delta;
                for (const auto& d2 : c.directed_edges) {
                    if (&d2 == &d) break;
                    bool f2 = (d2.head == g.reference_head(d2.edge)) != rev;
                    (f2 ? fwd : bwd)[d2.edge] -= delta;
                }
                return false;
            }
        }
        return true;
    };

    auto rec = [&](auto&& self, std::size_t i) -> bool {
        if (i == items.size()) {
            emit();
            return mode == SearchMode::first;
        }
        for (int rev = 0; rev < 2; ++rev) {
            if (!apply(items[i].circ, rev, +1)) continue;
            flip[i] = rev;
            bool stop = self(self, i + 1);
            apply(items[i].circ, rev, -1);
            if (stop) return true;
        }
        return false;
    };
    rec(rec, 0);
    return out;
}

std::vector<CdcSplit> split_into_two_cdcs(const OrientedCycleCover& ocover) {
    const CubicGraph& g = *ocover.graph;
    std::vector<CdcSplit> out;
    if (ocover.k() != 6 || ocover.m != 4) return out;
    std::vector<std::pair<int, int>> ids;
    std::vector<EdgeSet> sets;
    for (int i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < ocover.cycles[i].size(); ++j) {
            ids.emplace_back(i, static_cast<int>(j));
            sets.push_back(ocover.cycles[i][j].edge_set());
        }
    int c = static_cast<int>(ids.size());
    if (c > 30) throw GraphError("too many circuits to split");
    // subsets containing circuit 0; backtracking with per-edge counts <= 2
    std::vector<int> cnt(g.edge_count(), 0);
    std::vector<int> pick;
    auto rec = [&](auto&& self, int i) -> void {
        if (i == c) {
            for (int e = 0; e < g.edge_count(); ++e)
                if (cnt[e] != 2) return;
            CdcSplit sp;
            std::vector<char> in(c, 0);
            for (int x : pick) in[x] = 1;
            for (int x = 0; x < c; ++x)
                (in[x] ? sp.first : sp.second).push_back(ids[x]);
            // the complement double-covers too (4 − 2), but assert it
            std::vector<int> cc(g.edge_count(), 0);
            for (auto& [cy, ci] : sp.second)
                ocover.cycles[cy][ci].edge_set().for_each(
                    [&](int e) { ++cc[e]; });
            for (int e = 0; e < g.edge_count(); ++e)
                if (cc[e] != 2)
                    throw GraphError("split complement fails to double-cover");
            out.push_back(std::move(sp));
            return;
        }
        bool ok = true;
        sets[i].for_each([&](int e) {
            if (++cnt[e] > 2) ok = false;
        });
        if (ok) {
            pick.push_back(i);
            self(self, i + 1);
            pick.pop_back();
        }
        sets[i].for_each([&](int e) { --cnt[e]; });
        if (i > 0) self(self, i + 1);  // circuit 0 is pinned to the first half
    };
    rec(rec, 0);
    return out;
}

}  // namespace cyclecover
