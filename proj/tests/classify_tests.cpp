#include <algorithm>
#include <set>

#include "doctest.h"

#include "cyclecover/classify.hpp"
#include "cyclecover/generators.hpp"
#include "cyclecover/search.hpp"

using namespace cyclecover;

namespace {

std::vector<OrientedCycleCover> all_orientations(const CubicGraph& g) {
    SearchConfig cfg;
    cfg.mode = SearchMode::all;
    auto res = search_cycle_cover(g, cfg);
    std::vector<OrientedCycleCover> out;
    for (const auto& c : res.covers)
        for (auto& oc : orient_cover(g, c, SearchMode::all))
            out.push_back(std::move(oc));
    return out;
}

}  // namespace

TEST_CASE("petersen: 3 ordered vertices, all 15 edges rich") {
    auto g = gen_named("petersen");
    auto oriented = all_orientations(g);
    REQUIRE(oriented.size() == 20);
    std::set<std::set<int>> ordered_sets;
    for (const auto& oc : oriented) {
        auto rep = classify(oc);
        CHECK(rep.ordered_count() == 3);
        CHECK(rep.disordered_count() == 7);
        CHECK(rep.rich_count() == 15);
        CHECK(rep.poor_count() == 0);
        CHECK(rep.taxonomy_counterexamples.empty());
        std::set<int> os;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (rep.vertex_class[v] == VertexClass::ordered) os.insert(v);
        ordered_sets.insert(os);
    }
    // the global reversal keeps the classification: 10 distinct triples
    CHECK(ordered_sets.size() == 10);
}

TEST_CASE("corner passages cover each corner exactly twice") {
    auto g = gen_named("petersen");
    auto oc = all_orientations(g).front();
    auto cs = corners(oc);
    CHECK(cs.size() == 3u * g.vertex_count());
    for (const auto& c : cs) {
        CHECK(c.edge_pair[0] < c.edge_pair[1]);
        for (const auto& t : c.traversals) {
            CHECK(t.cycle >= 0);
            std::set<int> pair{t.from_edge, t.to_edge};
            CHECK(pair == std::set<int>({c.edge_pair[0], c.edge_pair[1]}));
        }
    }
}

TEST_CASE("colouring construction is all-disordered and all-poor") {
    for (const char* name : {"prism", "k4", "k33"}) {
        auto g = gen_named(name);
        auto col = three_edge_colouring(g);
        REQUIRE(col.has_value());
        auto oc = o6c4c_from_colouring(g, *col);
        REQUIRE(verify_oriented_cover(g, oc).valid());
        auto rep = classify(oc);
        CHECK(rep.ordered_count() == 0);
        CHECK(rep.poor_count() == g.edge_count());
        CHECK(rep.subtype_count(EdgeSubtype::dpd) == g.edge_count());
    }
}

TEST_CASE("subtype taxonomy is consistent with the endpoint classes") {
    for (const char* name : {"petersen", "blanusa2", "prism"}) {
        auto g = gen_named(name);
        auto oriented = all_orientations(g);
        REQUIRE(!oriented.empty());
        for (size_t i = 0; i < oriented.size(); i += 3) {
            ClassificationReport rep;
            try {
                rep = classify(oriented[i]);
            } catch (const GraphError&) {
                continue;  // mixed vertex: outside the dichotomy
            }
            CHECK(rep.rich_count() + rep.poor_count() == g.edge_count());
            CHECK(rep.subtype_count(EdgeSubtype::drd) +
                      rep.subtype_count(EdgeSubtype::dro) ==
                  rep.rich_count() - static_cast<int>(
                      rep.taxonomy_counterexamples.size()));
            for (int e = 0; e < g.edge_count(); ++e) {
                auto t = rep.edge_subtype[e];
                if (rep.edge_class[e] == EdgeClass::rich)
                    CHECK((t == EdgeSubtype::drd || t == EdgeSubtype::dro ||
                           t == EdgeSubtype::unexpected));
                else
                    CHECK((t == EdgeSubtype::dpd || t == EdgeSubtype::opo ||
                           t == EdgeSubtype::unexpected));
            }
        }
    }
}

TEST_CASE("an 18-vertex snark orientation with exactly 3 poor edges exists") {
    auto g = gen_named("blanusa2");
    bool found = false;
    for (const auto& oc : all_orientations(g)) {
        ClassificationReport rep;
        try {
            rep = classify(oc);
        } catch (const GraphError&) {
            continue;
        }
        if (rep.poor_count() == 3 && rep.rich_count() == 24) {
            found = true;
            break;
        }
    }
    CHECK(found);
}
