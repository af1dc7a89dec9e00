#include <algorithm>
#include <map>
#include <set>

#include "doctest.h"

#include "cyclecover/generators.hpp"
#include "cyclecover/graph6.hpp"
#include "cyclecover/search.hpp"
#include "cyclecover/surface.hpp"

using namespace cyclecover;

namespace {

OrientedCycleCover first_orientation(const CubicGraph& g) {
    SearchConfig cfg;
    cfg.oriented = true;
    cfg.mode = SearchMode::first;
    auto res = search_cycle_cover(g, cfg);
    REQUIRE(!res.oriented.empty());
    return res.oriented.front();
}

std::multiset<int> boundary_edge_multiset(const SurfaceGraph& sg) {
    std::multiset<int> out;
    for (const auto& b : trace_boundaries(sg))
        for (int side : b.side_labels) out.insert(side);
    return out;
}

std::vector<int> boundary_lengths(const SurfaceGraph& sg) {
    std::vector<int> out;
    for (const auto& b : trace_boundaries(sg)) out.push_back(b.length());
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("petersen surface: one boundary per ordered vertex") {
    auto g = gen_named("petersen");
    auto oc = first_orientation(g);
    auto rep = classify(oc);
    REQUIRE(rep.ordered_count() == 3);
    auto sg = glue_surface(oc, rep);
    auto bounds = trace_boundaries(sg);
    CHECK(bounds.size() == 3);
    // each boundary's sides are the corners of a single ordered vertex
    std::set<int> ordered;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (rep.vertex_class[v] == VertexClass::ordered) ordered.insert(v);
    std::set<int> hit;
    for (const auto& b : bounds) {
        std::set<int> vs;
        for (int side : b.side_labels) vs.insert(side / 3);
        CHECK(vs.size() == 1);
        hit.insert(*vs.begin());
    }
    CHECK(hit == ordered);

    auto stats = surface_stats(sg);
    REQUIRE(stats.components.size() == 1);
    CHECK(stats.components[0].chi == -3);
    CHECK(stats.components[0].genus == 1);
}

TEST_CASE("petersen split: two surfaces, one length-12 boundary each") {
    auto g = gen_named("petersen");
    auto oc = first_orientation(g);
    auto splits = split_into_two_cdcs(oc);
    REQUIRE(splits.size() == 1);
    const auto& sp = splits.front();
    CHECK(sp.first.size() == 6);
    CHECK(sp.second.size() == 6);

    // each half (and so its complement) double-covers every edge
    for (const auto* half : {&sp.first, &sp.second}) {
        std::vector<int> cover(g.edge_count(), 0);
        for (auto [cyc, circ] : *half)
            for (const auto& d : oc.cycles[cyc][circ].directed_edges)
                ++cover[d.edge];
        for (int e = 0; e < g.edge_count(); ++e) CHECK(cover[e] == 2);
    }

    auto [s1, s2] = split_surfaces(oc, sp);
    CHECK(boundary_lengths(s1) == std::vector<int>{12});
    CHECK(boundary_lengths(s2) == std::vector<int>{12});
    CHECK(boundary_edge_multiset(s1) == boundary_edge_multiset(s2));
    for (const auto* s : {&s1, &s2}) {
        auto stats = surface_stats(*s);
        REQUIRE(stats.components.size() == 1);
        CHECK(stats.components[0].genus == 0);
    }
}

TEST_CASE("a 10-vertex girth-4 graph splits into (2x10) and (4x5) boundaries") {
    auto corpus = read_graph6_file(std::string(CYCLECOVER_CORPUS_DIR) +
                                   "/cubic10.g6");
    bool found = false;
    for (const auto& g : corpus) {
        if (girth(g) != 4) continue;
        SearchConfig cfg;
        cfg.mode = SearchMode::all;
        auto res = search_cycle_cover(g, cfg);
        for (const auto& cover : res.covers) {
            for (const auto& oc : orient_cover(g, cover, SearchMode::all)) {
                for (const auto& sp : split_into_two_cdcs(oc)) {
                    auto [s1, s2] = split_surfaces(oc, sp);
                    auto c1 = surface_stats(s1).components.size();
                    auto c2 = surface_stats(s2).components.size();
                    auto b1 = boundary_lengths(s1);
                    auto b2 = boundary_lengths(s2);
                    auto is_a = [](size_t c, const std::vector<int>& b) {
                        return c == 1 && b == std::vector<int>{10, 10};
                    };
                    auto is_b = [](size_t c, const std::vector<int>& b) {
                        return c == 3 && b == std::vector<int>{5, 5, 5, 5};
                    };
                    if ((is_a(c1, b1) && is_b(c2, b2)) ||
                        (is_a(c2, b2) && is_b(c1, b1)))
                        found = true;
                }
                if (found) break;
            }
            if (found) break;
        }
        if (found) break;
    }
    CHECK(found);
}

TEST_CASE("surface stats satisfy the closed-surface constraint") {
    for (const char* name : {"petersen", "prism", "tietze"}) {
        auto g = gen_named(name);
        auto oc = first_orientation(g);
        auto rep = classify(oc);
        auto sg = glue_surface(oc, rep);
        auto stats = surface_stats(sg);
        int total_F = 0;
        for (const auto& c : stats.components) {
            CHECK(c.genus >= 0);
            // capping each boundary with a disk gives chi = 2 - 2g
            CHECK(c.chi + c.boundary_count == 2 - 2 * c.genus);
            total_F += c.F;
        }
        CHECK(total_F == stats.F);
        CHECK(stats.F == oc.circuit_count());
    }
}
