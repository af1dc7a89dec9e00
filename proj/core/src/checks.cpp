#include "cyclecover/checks.hpp"

#include <algorithm>
#include <map>

#include "cyclecover/classify.hpp"
#include "cyclecover/search.hpp"
#include "cyclecover/surface.hpp"

namespace cyclecover {

namespace {

std::string solution_tag(const OrientedCycleCover& ocover) {
    std::string s = ocover.graph->name().empty() ? "graph" : ocover.graph->name();
    s += " o" + std::to_string(ocover.k()) + "c" + std::to_string(ocover.m) +
         "c";
    return s;
}

EdgeSet c2_of_triple(const CycleCover& cover, int a, int b, int c) {
    EdgeSet s;
    for (int e = 0; e < cover.graph->edge_count(); ++e) {
        int cnt = cover.cycles[a].contains(e) + cover.cycles[b].contains(e) +
                  cover.cycles[c].contains(e);
        if (cnt % 2 == 1) s.add(e);
    }
    return s;
}

// all circuits of exactly `len` edges, one per undirected cycle
std::vector<EdgeSet> circuits_of_length(const CubicGraph& g, int len) {
    std::vector<EdgeSet> out;
    std::vector<int> path;
    std::vector<char> used(g.vertex_count(), 0);
    auto dfs = [&](auto&& self, int start, int v) -> void {
        if (static_cast<int>(path.size()) > len) return;
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (w == start && static_cast<int>(path.size()) == len - 1) {
                // dedup direction: second vertex smaller than last vertex
                int second = g.other_end(path.front(), start);
                if (second < v) {
                    EdgeSet s;
                    for (int pe : path) s.add(pe);
                    s.add(e);
                    out.push_back(s);
                }
                continue;
            }
            if (w <= start || used[w]) continue;
            used[w] = 1;
            path.push_back(e);
            self(self, start, w);
            path.pop_back();
            used[w] = 0;
        }
    };
    for (int s = 0; s < g.vertex_count(); ++s) {
        path.clear();
        // leave from s toward each neighbour once; dedup handles direction
        for (int e : g.incident_edges(s)) {
            int w = g.other_end(e, s);
            if (w <= s) continue;
            used[w] = 1;
            path.push_back(e);
            dfs(dfs, s, w);
            path.pop_back();
            used[w] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

CheckReport check_reorientation_parity(const OrientedCycleCover& ocover) {
    CheckReport rep{"reorientation-parity", "solution"};
    const CubicGraph& g = *ocover.graph;
    int base = classify(ocover).ordered_count();
    auto all = orient_cover(g, ocover.underlying(), SearchMode::all);
    rep.notes.push_back("reorientations: " + std::to_string(all.size()));
    for (const auto& oc : all) {
        int n = classify(oc).ordered_count();
        if (n % 2 != base % 2) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back(solution_tag(oc) + " ordered=" +
                                    std::to_string(n) + " vs base=" +
                                    std::to_string(base));
        }
    }
    // global reversal keeps the classification bit-for-bit
    OrientedCycleCover rev = ocover;
    for (auto& cyc : rev.cycles)
        for (auto& circ : cyc) circ = circ.reversed(g);
    auto a = classify(ocover), b = classify(rev);
    if (a.vertex_class != b.vertex_class || a.edge_class != b.edge_class) {
        rep.verdict = Verdict::fail;
        rep.witnesses.push_back(solution_tag(ocover) +
                                ": global reversal changed the classification");
    }
    return rep;
}

CheckReport check_ordered_ne_one(
    const std::vector<OrientedCycleCover>& solutions) {
    CheckReport rep{"ordered-count-not-one", "corpus"};
    for (const auto& oc : solutions) {
        auto cls = classify(oc);
        int ord = cls.ordered_count();
        if (ord == 1) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back(solution_tag(oc) + " has exactly 1 ordered");
        }
        // replay the proof mechanism on the underlying 6c4c
        auto cover = oc.underlying();
        const CubicGraph& g = *oc.graph;
        int triples = 0;
        std::map<std::array<int, 3>, EdgeSet> c2_by_triple;
        for (int a = 0; a < 6; ++a)
            for (int b = a + 1; b < 6; ++b)
                for (int c = b + 1; c < 6; ++c) {
                    ++triples;
                    EdgeSet c2 = c2_of_triple(cover, a, b, c);
                    c2_by_triple[{a, b, c}] = c2;
                    int on_c2_ordered = 0;
                    for (int v = 0; v < g.vertex_count(); ++v) {
                        bool on = false;
                        for (int e : g.incident_edges(v))
                            if (c2.contains(e)) on = true;
                        if (on && cls.vertex_class[v] == VertexClass::ordered)
                            ++on_c2_ordered;
                    }
                    if (on_c2_ordered % 2 != 0) {
                        rep.verdict = Verdict::fail;
                        rep.witnesses.push_back(
                            solution_tag(oc) + " triple " + std::to_string(a) +
                            std::to_string(b) + std::to_string(c) +
                            ": odd ordered count on C2");
                    }
                }
        // complementary triples induce the same even cycle, so there are 10
        // possibilities (as edge sets they may coincide for degenerate
        // covers with repeated cycles), and every vertex is off exactly 4
        // of the 10 pairs
        bool pairs_ok = triples == 20;
        for (const auto& [t, c2] : c2_by_triple) {
            std::array<int, 3> comp;
            int k = 0;
            for (int i = 0; i < 6; ++i)
                if (i != t[0] && i != t[1] && i != t[2]) comp[k++] = i;
            if (c2_by_triple.at(comp) != c2) pairs_ok = false;
        }
        if (!pairs_ok) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back(solution_tag(oc) +
                                    ": triples do not pair into 10 even cycles");
        }
        for (int v = 0; v < g.vertex_count(); ++v) {
            int missed = 0;
            for (const auto& [t, c2] : c2_by_triple) {
                bool on = false;
                for (int e : g.incident_edges(v))
                    if (c2.contains(e)) on = true;
                if (!on) ++missed;
            }
            if (missed != 8) {  // 4 of the 10 complementary pairs
                rep.verdict = Verdict::fail;
                rep.witnesses.push_back(solution_tag(oc) + " vertex " +
                                        std::to_string(v) + " off " +
                                        std::to_string(missed / 2) +
                                        " of 10 even cycles, expected 4");
            }
        }
    }
    rep.notes.push_back("solutions: " + std::to_string(solutions.size()));
    return rep;
}

CheckReport check_euler_parity(const OrientedCycleCover& ocover) {
    auto cls = classify(ocover);
    if (cls.ordered_count() != 0)
        throw GraphError("euler parity check needs an all-disordered o6c4c");
    CheckReport rep{"euler-parity", "solution"};
    int rich = cls.rich_count(), circ = ocover.circuit_count();
    rep.notes.push_back("rich=" + std::to_string(rich) +
                        " circuits=" + std::to_string(circ));
    if (rich % 2 != circ % 2) {
        rep.verdict = Verdict::fail;
        rep.witnesses.push_back(solution_tag(ocover) + " rich=" +
                                std::to_string(rich) + " circuits=" +
                                std::to_string(circ));
    }
    return rep;
}

std::vector<CheckReport> check_conjectures(
    const std::vector<OrientedCycleCover>& corpus) {
    CheckReport c1{"conjecture-matching-rich-parity", "corpus"};
    CheckReport c2{"conjecture-split-parities", "corpus"};
    CheckReport c3{"conjecture-all-rich-order", "corpus"};
    CheckReport c4a{"conjecture-boundary-parity-split-scope", "corpus"};
    CheckReport c4b{"conjecture-boundary-parity-all-rich-scope", "corpus"};
    int n1 = 0, n2 = 0, n3 = 0, n4a = 0, n4b = 0;

    std::map<const CubicGraph*, std::vector<PerfectMatching>> pm_cache;
    std::map<const CubicGraph*, bool> snark_cache;
    for (const auto& oc : corpus) {
        const CubicGraph& g = *oc.graph;
        auto cls = classify(oc);
        bool all_disordered = cls.ordered_count() == 0;
        bool all_rich = cls.poor_count() == 0;
        std::vector<CdcSplit> splits;
        if (oc.circuit_count() <= 30) splits = split_into_two_cdcs(oc);
        bool has_split = !splits.empty();

        if (all_disordered) {
            ++n1;
            auto it = pm_cache.find(&g);
            if (it == pm_cache.end())
                it = pm_cache.emplace(&g, enumerate_perfect_matchings(g)).first;
            for (std::size_t i = 0; i < it->second.size(); ++i) {
                int rich = 0;
                it->second[i].for_each([&](int e) {
                    rich += cls.edge_class[e] == EdgeClass::rich;
                });
                if (rich % 2 != 0) {
                    c1.verdict = Verdict::fail;
                    c1.witnesses.push_back(solution_tag(oc) + " matching " +
                                           std::to_string(i) + " rich=" +
                                           std::to_string(rich));
                }
            }
        }
        if (has_split) {
            ++n2;
            auto cover = oc.underlying();
            for (int a = 0; a < 6; ++a)
                for (int b = a + 1; b < 6; ++b)
                    for (int c = b + 1; c < 6; ++c) {
                        int rich = 0;
                        c2_of_triple(cover, a, b, c).for_each([&](int e) {
                            rich += cls.edge_class[e] == EdgeClass::rich;
                        });
                        if (rich % 2 != 0) {
                            c2.verdict = Verdict::fail;
                            c2.witnesses.push_back(
                                solution_tag(oc) + " even cycle " +
                                std::to_string(a) + std::to_string(b) +
                                std::to_string(c) + " rich=" +
                                std::to_string(rich));
                        }
                    }
            int drd = cls.subtype_count(EdgeSubtype::drd);
            if (oc.circuit_count() % 2 != 0 || drd % 2 != 0) {
                c2.verdict = Verdict::fail;
                c2.witnesses.push_back(
                    solution_tag(oc) + " circuits=" +
                    std::to_string(oc.circuit_count()) + " drd=" +
                    std::to_string(drd));
            }
        }
        if (all_rich) {
            auto it = snark_cache.find(&g);
            if (it == snark_cache.end())
                it = snark_cache.emplace(&g, !three_edge_colouring(g)).first;
            if (it->second) {
                ++n3;
                if (g.vertex_count() % 4 != 2) {
                    c3.verdict = Verdict::fail;
                    c3.witnesses.push_back(solution_tag(oc) + " n=" +
                                           std::to_string(g.vertex_count()));
                }
            }
        }
        if (has_split || all_rich) {
            auto surface = glue_surface(oc, cls);
            int boundaries =
                static_cast<int>(trace_boundaries(surface).size());
            bool match = cls.ordered_count() % 2 == boundaries % 2;
            auto note = [&](CheckReport& r) {
                r.verdict = Verdict::fail;
                r.witnesses.push_back(
                    solution_tag(oc) + " ordered=" +
                    std::to_string(cls.ordered_count()) + " boundaries=" +
                    std::to_string(boundaries));
            };
            if (has_split) {
                ++n4a;
                if (!match) note(c4a);
            }
            if (all_rich) {
                ++n4b;
                if (!match) note(c4b);
            }
        }
    }
    c1.notes.push_back("solutions in scope: " + std::to_string(n1));
    c2.notes.push_back("solutions in scope: " + std::to_string(n2));
    c3.notes.push_back("solutions in scope: " + std::to_string(n3));
    c4a.notes.push_back("solutions in scope: " + std::to_string(n4a));
    c4b.notes.push_back("solutions in scope: " + std::to_string(n4b));
    return {c1, c2, c3, c4a, c4b};
}

CheckReport check_six_covers(const CubicGraph& g, long long node_budget) {
    CheckReport rep{"six-covers", "graph"};
    SearchConfig cfg;
    cfg.k = 9;
    cfg.m = 6;
    cfg.node_budget = node_budget;
    cfg.mode = SearchMode::first;
    auto plain = search_cycle_cover(g, cfg);
    if (plain.outcome == SearchOutcome::budget_exhausted) {
        rep.verdict = Verdict::budget;
        rep.notes.push_back("9c6c search budget exhausted");
        return rep;
    }
    bool has_9c6c = plain.solution_count > 0;
    rep.notes.push_back(std::string("9c6c: ") +
                        (has_9c6c ? "exists" : "nonexistent"));
    if (!has_9c6c) {
        // the counting argument: with 6 perfect matchings covering each edge
        // exactly twice, 9 matchings covering thrice are impossible
        auto pms = enumerate_perfect_matchings(g);
        std::vector<int> per_edge(g.edge_count(), 0);
        for (const auto& pm : pms)
            pm.for_each([&](int e) { ++per_edge[e]; });
        bool twice = std::all_of(per_edge.begin(), per_edge.end(),
                                 [](int c) { return c == 2; });
        rep.notes.push_back("matchings: " + std::to_string(pms.size()) +
                            (twice ? ", each edge in exactly 2" : ""));
        if (pms.size() != 6 || !twice) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back(
                "9c6c missing but matching structure unlike the known case");
            return rep;
        }
        // the 9-circuits: two per deleted vertex, each edge on 12 of the 20;
        // picking one per deleted vertex yields 10c6c covers, none orientable
        auto nines = circuits_of_length(g, 9);
        rep.notes.push_back("9-circuits: " + std::to_string(nines.size()));
        std::vector<std::vector<EdgeSet>> by_missed(g.vertex_count());
        for (const auto& s : nines) {
            int missed = -1;
            for (int v = 0; v < g.vertex_count(); ++v) {
                bool on = false;
                for (int e : g.incident_edges(v))
                    if (s.contains(e)) on = true;
                if (!on) missed = v;
            }
            if (missed >= 0) by_missed[missed].push_back(s);
        }
        bool two_each = std::all_of(
            by_missed.begin(), by_missed.end(),
            [](const auto& v) { return v.size() == 2; });
        if (!two_each || g.vertex_count() > 20) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back(
                "9-circuits not two-per-deleted-vertex as expected");
            return rep;
        }
        int valid_ten = 0, orientable_ten = 0;
        for (int mask = 0; mask < (1 << g.vertex_count()); ++mask) {
            std::vector<EvenSubgraph> cycles;
            for (int v = 0; v < g.vertex_count(); ++v)
                cycles.push_back(by_missed[v][(mask >> v) & 1]);
            if (!verify_cover(g, cycles, 6).valid()) continue;
            ++valid_ten;
            CycleCover ten{&g, cycles, 6};
            if (!orient_cover(g, ten, SearchMode::first).empty())
                ++orientable_ten;
        }
        rep.notes.push_back("one-9-circuit-per-vertex 10c6c covers: " +
                            std::to_string(valid_ten) + ", orientable: " +
                            std::to_string(orientable_ten));
        if (valid_ten == 0) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back("no 9-circuit selection forms a 10c6c");
        }
        if (orientable_ten != 0) {
            rep.verdict = Verdict::fail;
            rep.witnesses.push_back(
                "a 9-circuits-only 10c6c unexpectedly admits an orientation");
        }
        return rep;
    }
    cfg.oriented = true;
    auto oriented = search_cycle_cover(g, cfg);
    if (oriented.outcome == SearchOutcome::budget_exhausted) {
        rep.verdict = Verdict::budget;
        rep.notes.push_back("o9c6c search budget exhausted");
    } else if (oriented.solution_count > 0) {
        rep.notes.push_back("o9c6c: exists");
    } else {
        rep.verdict = Verdict::fail;
        rep.witnesses.push_back(
            "9c6c exists but no orientation balances every edge");
    }
    return rep;
}

}  // namespace cyclecover
