#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>

#include "doctest.h"

#include "cyclecover/generators.hpp"
#include "cyclecover/graph.hpp"
#include "cyclecover/graph6.hpp"

using namespace cyclecover;
namespace fs = std::filesystem;

namespace {

std::vector<fs::path> corpus_files() {
    std::vector<fs::path> out;
    for (const auto& e : fs::directory_iterator(CYCLECOVER_CORPUS_DIR))
        if (e.path().extension() == ".g6" && fs::file_size(e.path()) > 0)
            out.push_back(e.path());
    std::sort(out.begin(), out.end());
    return out;
}

// independent oracle: all perfect matchings by plain recursion on the
// lowest unmatched vertex
void brute_pms(const CubicGraph& g, std::vector<char>& used, int v,
               EdgeSet acc, std::vector<EdgeSet>& out) {
    int n = g.vertex_count();
    while (v < n && used[v]) ++v;
    if (v == n) {
        out.push_back(acc);
        return;
    }
    for (int e : g.incident_edges(v)) {
        int w = g.other_end(e, v);
        if (used[w]) continue;
        used[v] = used[w] = 1;
        acc.add(e);
        brute_pms(g, used, v + 1, acc, out);
        acc.remove(e);
        used[v] = used[w] = 0;
    }
}

std::vector<EdgeSet> brute_pms(const CubicGraph& g) {
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<EdgeSet> out;
    brute_pms(g, used, 0, {}, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace

TEST_CASE("graph6 round-trips on the full corpus") {
    int graphs = 0;
    for (const auto& path : corpus_files()) {
        std::ifstream in(path.string());
        std::string line;
        while (std::getline(in, line)) {
            if (line.empty() || line.rfind(">>", 0) == 0) continue;
            auto g = graph6_decode(line);
            CHECK(graph6_encode(g) == line);
            ++graphs;
        }
    }
    CHECK(graphs >= 25);  // 1+2+6 snarks, 19 cubic graphs, more if present
}

TEST_CASE("graph6 rejects non-cubic input") {
    CHECK_THROWS_AS(graph6_decode("D~{"), GraphError);  // K5 is 4-regular
    CHECK_THROWS_AS(graph6_decode(""), GraphError);
}

TEST_CASE("perfect matching enumeration equals brute force up to 12 vertices") {
    std::vector<CubicGraph> graphs;
    for (const char* n : {"k4", "k33", "prism", "petersen", "tietze"})
        graphs.push_back(gen_named(n));
    for (const auto& path : corpus_files()) {
        if (path.filename() != "cubic10.g6") continue;
        for (auto& g : read_graph6_file(path.string()))
            graphs.push_back(std::move(g));
    }
    for (const auto& g : graphs) {
        REQUIRE(g.vertex_count() <= 12);
        auto fast = enumerate_perfect_matchings(g);
        auto slow = brute_pms(g);
        CHECK(fast == slow);
        for (const auto& pm : fast) {
            CHECK(is_perfect_matching(g, pm));
            CHECK(is_even_subgraph(g, complement_2factor(g, pm)));
        }
    }
}

TEST_CASE("structure of the named fixtures") {
    auto petersen = gen_named("petersen");
    CHECK(petersen.vertex_count() == 10);
    CHECK(girth(petersen) == 5);
    CHECK(is_bridgeless(petersen));
    CHECK(!three_edge_colouring(petersen).has_value());
    CHECK(enumerate_perfect_matchings(petersen).size() == 6);

    for (const char* n : {"k4", "k33", "prism"}) {
        auto g = gen_named(n);
        auto col = three_edge_colouring(g);
        REQUIRE(col.has_value());
        for (int v = 0; v < g.vertex_count(); ++v) {
            std::set<int> seen;
            for (int e : g.incident_edges(v)) seen.insert((*col)[e]);
            CHECK(seen == std::set<int>({1, 2, 3}));
        }
    }

    for (const char* n : {"blanusa1", "blanusa2"}) {
        auto g = gen_named(n);
        CHECK(g.vertex_count() == 18);
        CHECK(girth(g) == 5);
        CHECK(!three_edge_colouring(g).has_value());
    }

    CHECK_THROWS_AS(gen_named("no-such-graph"), GraphError);
}

TEST_CASE("flower snark generator") {
    CHECK_THROWS_AS(gen_flower_snark(4), GraphError);
    CHECK_THROWS_AS(gen_flower_snark(1), GraphError);
    for (int m : {3, 5, 7}) {
        auto g = gen_flower_snark(m);
        CHECK(g.vertex_count() == 4 * m);
        CHECK(g.edge_count() == 6 * m);
        CHECK(is_connected(g));
        CHECK(is_bridgeless(g));
        CHECK(!three_edge_colouring(g).has_value());
    }
    CHECK(girth(gen_flower_snark(5)) == 5);
}

TEST_CASE("circuit decomposition of even subgraphs") {
    auto g = gen_named("petersen");
    for (const auto& pm : enumerate_perfect_matchings(g)) {
        auto f = complement_2factor(g, pm);
        auto cs = circuits(g, f);
        int total = 0;
        EdgeSet seen;
        for (const auto& c : cs) {
            total += c.length();
            // consecutive directed edges share the vertex they meet at
            for (size_t i = 0; i < c.directed_edges.size(); ++i) {
                const auto& cur = c.directed_edges[i];
                const auto& nxt =
                    c.directed_edges[(i + 1) % c.directed_edges.size()];
                CHECK(g.other_end(nxt.edge, nxt.head) == cur.head);
            }
            for (const auto& d : c.directed_edges) {
                CHECK(!seen.contains(d.edge));
                seen.add(d.edge);
            }
        }
        CHECK(total == g.vertex_count());  // 2-factor
    }
}

TEST_CASE("even subgraph enumeration matches the cycle space dimension") {
    auto g = gen_named("petersen");
    auto all = enumerate_even_subgraphs(g);
    CHECK(all.size() == (1u << (g.edge_count() - g.vertex_count() + 1)));
    for (const auto& s : all) CHECK(is_even_subgraph(g, s));
}
