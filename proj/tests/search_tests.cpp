#include <algorithm>
#include <map>

#include "doctest.h"

#include "cyclecover/generators.hpp"
#include "cyclecover/graph6.hpp"
#include "cyclecover/search.hpp"

using namespace cyclecover;

namespace {

std::vector<EdgeSet> sorted_multiset(const CycleCover& c) {
    std::vector<EdgeSet> s(c.cycles.begin(), c.cycles.end());
    std::sort(s.begin(), s.end());
    return s;
}

// independent oracle: multiset cover over the whole cycle space
std::vector<std::vector<EdgeSet>> naive_6c4c(const CubicGraph& g) {
    auto space = enumerate_even_subgraphs(g);
    std::vector<int> count(g.edge_count(), 0);
    std::vector<std::vector<EdgeSet>> found;
    std::vector<EdgeSet> chosen;
    auto rec = [&](auto&& self, size_t from, int slots) -> void {
        bool done = true;
        int max_deficit = 0, total_deficit = 0;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (count[e] > 4) return;
            if (count[e] < 4) done = false;
            max_deficit = std::max(max_deficit, 4 - count[e]);
            total_deficit += 4 - count[e];
        }
        if (slots == 0) {
            if (done) found.push_back(chosen);
            return;
        }
        // an even subgraph has at most n edges
        if (max_deficit > slots || total_deficit > slots * g.vertex_count())
            return;
        for (size_t i = from; i < space.size(); ++i) {
            chosen.push_back(space[i]);
            for (int e = 0; e < g.edge_count(); ++e)
                count[e] += space[i].contains(e);
            self(self, i, slots - 1);  // repetition allowed
            for (int e = 0; e < g.edge_count(); ++e)
                count[e] -= space[i].contains(e);
            chosen.pop_back();
        }
    };
    rec(rec, 0, 6);
    return found;
}

CubicGraph heawood() {
    // 14-vertex point-line incidence graph of the Fano plane (colourable)
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 14; ++i) edges.push_back({i, (i + 1) % 14});
    for (int i : {0, 2, 4, 6, 8, 10, 12})
        edges.push_back({i, (i + 5) % 14});
    return CubicGraph::from_edge_list(14, edges, "heawood");
}

}  // namespace

TEST_CASE("petersen 6c4c is unique and equals its six 2-factors") {
    auto g = gen_named("petersen");
    SearchConfig cfg;
    cfg.mode = SearchMode::all;
    auto res = search_cycle_cover(g, cfg);
    CHECK(res.outcome == SearchOutcome::completed);
    REQUIRE(res.covers.size() == 1);

    std::vector<EdgeSet> factors;
    for (const auto& pm : enumerate_perfect_matchings(g))
        factors.push_back(complement_2factor(g, pm));
    std::sort(factors.begin(), factors.end());
    CHECK(sorted_multiset(res.covers.front()) == factors);
}

TEST_CASE("petersen orientation count and reversal pairing") {
    auto g = gen_named("petersen");
    SearchConfig cfg;
    cfg.mode = SearchMode::all;
    auto res = search_cycle_cover(g, cfg);
    auto oriented = orient_cover(g, res.covers.front(), SearchMode::all);
    CHECK(oriented.size() == 20);
    for (const auto& oc : oriented)
        CHECK(verify_oriented_cover(g, oc).valid());
}

TEST_CASE("every 6c4c cycle is a 2-factor and meets every vertex") {
    for (const char* name : {"petersen", "blanusa1", "tietze"}) {
        auto g = gen_named(name);
        SearchConfig cfg;
        cfg.mode = SearchMode::all;
        auto res = search_cycle_cover(g, cfg);
        REQUIRE(!res.covers.empty());
        for (const auto& cover : res.covers)
            for (const auto& cyc : cover.cycles) {
                CHECK(cyc.count() == g.vertex_count());
                CHECK(is_even_subgraph(g, cyc));
            }
    }
}

TEST_CASE("orientation count is even whenever nonzero") {
    for (const char* name : {"petersen", "prism", "k4", "tietze"}) {
        auto g = gen_named(name);
        SearchConfig cfg;
        cfg.mode = SearchMode::all;
        auto res = search_cycle_cover(g, cfg);
        for (const auto& cover : res.covers) {
            auto oriented = orient_cover(g, cover, SearchMode::all);
            CHECK(oriented.size() % 2 == 0);
        }
    }
}

TEST_CASE("matching-multiset engine agrees with the cycle-space oracle") {
    std::vector<CubicGraph> graphs;
    for (const char* n : {"k4", "k33", "prism", "petersen", "tietze"})
        graphs.push_back(gen_named(n));
    graphs.push_back(heawood());
    auto corpus = read_graph6_file(std::string(CYCLECOVER_CORPUS_DIR) +
                                   "/cubic10.g6");
    for (size_t i = 0; i < corpus.size(); i += 4)  // sample; all are 10-vertex
        graphs.push_back(corpus[i]);

    for (const auto& g : graphs) {
        REQUIRE(g.vertex_count() <= 14);
        SearchConfig cfg;
        cfg.mode = SearchMode::all;
        auto res = search_cycle_cover(g, cfg);
        std::vector<std::vector<EdgeSet>> fast;
        for (const auto& c : res.covers) fast.push_back(sorted_multiset(c));
        std::sort(fast.begin(), fast.end());

        auto slow = naive_6c4c(g);
        for (auto& s : slow) std::sort(s.begin(), s.end());
        std::sort(slow.begin(), slow.end());
        slow.erase(std::unique(slow.begin(), slow.end()), slow.end());
        CHECK(fast == slow);
    }
}

TEST_CASE("budget exhaustion is distinct from nonexistence") {
    auto g = gen_named("petersen");
    SearchConfig cfg;
    cfg.mode = SearchMode::all;
    cfg.node_budget = 1;
    auto res = search_cycle_cover(g, cfg);
    CHECK(res.outcome == SearchOutcome::budget_exhausted);

    // 9c6c on petersen: genuinely none, search completes
    SearchConfig none;
    none.k = 9;
    none.m = 6;
    none.mode = SearchMode::all;
    auto r2 = search_cycle_cover(g, none);
    CHECK(r2.outcome == SearchOutcome::completed);
    CHECK(r2.covers.empty());
}
