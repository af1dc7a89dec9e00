#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"

#include "cyclecover/classify.hpp"
#include "cyclecover/generators.hpp"
#include "cyclecover/graph6.hpp"
#include "cyclecover/ribbon.hpp"
#include "cyclecover/search.hpp"

using namespace cyclecover;

namespace {

// the three closure rules
Triple rule1(const Triple& t) { return {t.out, t.in, t.match}; }
Triple rule2(const Triple& t) {
    return {t.in, {t.match[1], t.match[0]}, {t.out[1], t.out[0]}};
}
Triple rule3(const Triple& t) {
    return {{t.in[1], t.in[0]},
            {t.out[0], t.match[0]},
            {t.out[1], t.match[1]}};
}

std::vector<OrientedCycleCover> all_disordered_orientations(
    const CubicGraph& g) {
    SearchConfig cfg;
    cfg.mode = SearchMode::all;
    auto res = search_cycle_cover(g, cfg);
    std::vector<OrientedCycleCover> out;
    for (const auto& c : res.covers)
        for (auto& oc : orient_cover(g, c, SearchMode::all)) {
            try {
                auto cls = classify_vertices(oc);
                if (std::count(cls.begin(), cls.end(), VertexClass::ordered))
                    continue;
            } catch (const GraphError&) {
                continue;
            }
            out.push_back(std::move(oc));
        }
    return out;
}

}  // namespace

TEST_CASE("six triple classes of sixty, closed under the three rules") {
    auto tc = triple_classes();
    REQUIRE(tc.classes.size() == 6);
    int total = 0;
    std::set<Triple> seen;
    for (const auto& cls : tc.classes) {
        CHECK(cls.size() == 60);
        total += static_cast<int>(cls.size());
        for (const auto& t : cls) {
            CHECK(seen.insert(t).second);
            CHECK(tc.class_of(t) == tc.class_of(rule1(t)));
            CHECK(tc.class_of(t) == tc.class_of(rule2(t)));
            CHECK(tc.class_of(t) == tc.class_of(rule3(t)));
        }
    }
    CHECK(total == 360);  // all even permutations of 6 elements
}

TEST_CASE("representatives: ten per class, each with cycle 1 leading") {
    auto tc = triple_classes();
    for (size_t c = 0; c < tc.representatives.size(); ++c) {
        const auto& reps = tc.representatives[c];
        CHECK(reps.size() == 10);
        std::set<std::array<int, 2>> first_pairs;
        for (const auto& t : reps) {
            CHECK((t.in[0] == 1 || t.in[1] == 1));
            CHECK(tc.class_of(t) == static_cast<int>(c));
            CHECK(first_pairs.insert(t.in).second);  // one per ordered pair
        }
    }
}

TEST_CASE("the four 3cdc reformulation triples sit in distinct classes") {
    auto tc = triple_classes();
    std::set<int> classes;
    for (const auto& t : o4cdc_triples()) {
        int c = tc.class_of(t);
        CHECK(c >= 0);
        classes.insert(c);
    }
    CHECK(classes.size() == 4);
}

TEST_CASE("face tracing partitions the directed edges, random rotations") {
    std::mt19937 rng(20260826);
    std::vector<CubicGraph> graphs;
    for (const char* n : {"petersen", "prism", "blanusa1"})
        graphs.push_back(gen_named(n));
    graphs.push_back(gen_flower_snark(5));
    for (int trial = 0; trial < 1000; ++trial) {
        const auto& g = graphs[rng() % graphs.size()];
        RotationSystem rot;
        rot.order.resize(g.vertex_count());
        for (int v = 0; v < g.vertex_count(); ++v) {
            rot.order[v] = g.incident_edges(v);
            if (rng() & 1) std::swap(rot.order[v][1], rot.order[v][2]);
        }
        auto faces = trace_faces(g, rot);
        std::set<std::pair<int, int>> seen;  // (edge, head)
        int total = 0;
        for (const auto& face : faces)
            for (const auto& d : face) {
                CHECK(seen.insert({d.edge, d.head}).second);
                ++total;
            }
        CHECK(total == 2 * g.edge_count());
    }
}

TEST_CASE("some petersen rotation system embeds with five circuit faces") {
    auto g = gen_named("petersen");
    bool found = false;
    for (int mask = 0; mask < (1 << 10) && !found; ++mask) {
        RotationSystem rot;
        rot.order.resize(10);
        for (int v = 0; v < 10; ++v) {
            rot.order[v] = g.incident_edges(v);
            if ((mask >> v) & 1) std::swap(rot.order[v][1], rot.order[v][2]);
        }
        auto faces = trace_faces(g, rot);
        if (faces.size() != 5) continue;
        OrientedCycleCover oc;
        oc.graph = &g;
        oc.m = 2;
        bool circuits = true;
        for (const auto& face : faces) {
            std::set<int> vs;
            for (const auto& d : face)
                if (!vs.insert(d.head).second) circuits = false;
            if (!circuits) break;
            Circuit c;
            c.directed_edges = face;
            oc.cycles.push_back({c});
        }
        if (circuits && verify_oriented_cover(g, oc).valid()) found = true;
    }
    CHECK(found);  // an oriented 5-cycle double cover from a genus-1 rotation
}

TEST_CASE("pairlist: even permutation, rotation-invariant, throws on ordered") {
    auto g = gen_named("prism");
    auto col = three_edge_colouring(g);
    auto oc = o6c4c_from_colouring(g, *col);
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto pl = pairlist_at_vertex(oc, v);
        std::set<int> cycles;
        for (const auto& p : pl.pairs) {
            cycles.insert(p[0]);
            cycles.insert(p[1]);
        }
        CHECK(cycles.size() == 6);  // the six entries form a permutation
        std::set<int> edges(pl.edges.begin(), pl.edges.end());
        std::set<int> incident(g.incident_edges(v).begin(),
                               g.incident_edges(v).end());
        CHECK(edges == incident);
    }

    auto pg = gen_named("petersen");
    SearchConfig cfg;
    cfg.oriented = true;
    cfg.mode = SearchMode::first;
    auto res = search_cycle_cover(pg, cfg);
    auto& poc = res.oriented.front();
    auto cls = classify_vertices(poc);
    for (int v = 0; v < pg.vertex_count(); ++v)
        if (cls[v] == VertexClass::ordered)
            CHECK_THROWS_AS(pairlist_at_vertex(poc, v), GraphError);
}

TEST_CASE("o6cdc derivation on all-disordered solutions") {
    // colourable fixture through the full pipeline
    auto g = gen_named("prism");
    auto oc = o6c4c_from_colouring(g, *three_edge_colouring(g));
    auto derived = derive_o6cdc(oc);
    CHECK(derived.k() == 6);
    CHECK(derived.m == 2);
    CHECK(verify_oriented_cover(g, derived).valid());

    // 20-vertex snark fixture: the one with all-disordered orientations
    auto snarks = read_graph6_file(std::string(CYCLECOVER_CORPUS_DIR) +
                                   "/snarks20.g6");
    REQUIRE(snarks.size() == 6);
    auto all_dis = all_disordered_orientations(snarks[2]);
    CHECK(all_dis.size() == 4);
    for (const auto& sol : all_dis) {
        auto d = derive_o6cdc(sol);
        CHECK(verify_oriented_cover(snarks[2], d).valid());
        CHECK(d.m == 2);
    }
}

TEST_CASE("derivation refuses solutions with ordered vertices") {
    auto g = gen_named("petersen");
    SearchConfig cfg;
    cfg.oriented = true;
    cfg.mode = SearchMode::first;
    auto res = search_cycle_cover(g, cfg);
    CHECK_THROWS_AS(derive_o6cdc(res.oriented.front()), GraphError);
}
