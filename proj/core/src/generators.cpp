#include "cyclecover/generators.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace cyclecover {

CubicGraph gen_flower_snark(int m) {
    if (m < 3 || m % 2 == 0)
        throw GraphError("flower snark needs odd m >= 3, got " +
                         std::to_string(m));
    auto a = [&](int i) { return (i % m + m) % m; };
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < m; ++i) {
        int ai = i, bi = m + i, ci = 2 * m + i, di = 3 * m + i;
        edges.emplace_back(ai, bi);
        edges.emplace_back(bi, ci);
        edges.emplace_back(bi, di);
        edges.emplace_back(ai, a(i + 1));
        edges.emplace_back(ci, 3 * m + a(i + 1));
        edges.emplace_back(di, 2 * m + a(i + 1));
    }
    auto g = CubicGraph::from_edge_list(4 * m, std::move(edges),
                                        "J" + std::to_string(m));
    return g;
}

namespace {

struct Fixture {
    const char* name;
    int n;
    const char* edges;  // "u v" pairs separated by spaces
};

// Petersen: outer 5-circuit 0..4, inner pentagram 5..9, spokes i -- i+5.
// Blanusa edge lists are the two 18-vertex snarks, labeled as produced by
// the corpus generator; blanusa1 is the one with automorphism group of
// order 8, blanusa2 the one of order 4.
const Fixture kFixtures[] = {
    {"petersen", 10,
     "0 1 1 2 2 3 3 4 0 4 0 5 1 6 2 7 3 8 4 9 5 7 7 9 6 9 6 8 5 8"},
    {"k4", 4, "0 1 0 2 0 3 1 2 1 3 2 3"},
    {"k33", 6, "0 3 0 4 0 5 1 3 1 4 1 5 2 3 2 4 2 5"},
    {"prism", 6, "0 1 1 2 0 2 3 4 4 5 3 5 0 3 1 4 2 5"},
    {"blanusa1", 18,
     "0 1 0 2 0 3 1 4 1 5 2 6 4 6 2 7 5 7 3 8 4 8 3 9 5 9 6 10 7 11 8 12 "
     "9 13 10 14 11 14 10 15 12 15 11 16 13 16 15 16 12 17 13 17 14 17"},
    {"blanusa2", 18,
     "0 1 0 2 0 3 1 4 1 5 2 6 4 6 2 7 5 7 3 8 4 8 3 9 6 9 5 10 7 11 8 12 "
     "9 13 10 14 11 14 10 15 12 15 11 16 13 16 15 16 12 17 13 17 14 17"},
};

}  // namespace

CubicGraph gen_named(const std::string& name) {
    std::string key = name;
    for (auto& c : key) c = static_cast<char>(tolower(c));
    if (key == "tietze" || key == "j3") return gen_flower_snark(3);
    if (key == "j5") return gen_flower_snark(5);
    for (const auto& f : kFixtures) {
        if (key == f.name) {
            std::istringstream in(f.edges);
            std::vector<std::pair<int, int>> edges;
            int u, v;
            while (in >> u >> v) edges.emplace_back(u, v);
            return CubicGraph::from_edge_list(f.n, std::move(edges), f.name);
        }
    }
    throw GraphError("unknown graph name: " + name);
}

std::vector<std::string> gen_named_list() {
    std::vector<std::string> out{"tietze", "j5"};
    for (const auto& f : kFixtures) out.emplace_back(f.name);
    return out;
}

CubicGraph read_adjacency_list(const std::string& path, int n) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    std::vector<std::pair<int, int>> edges;
    int maxv = -1;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        int u, v;
        if (!(ls >> u >> v)) throw GraphError("bad fixture line: " + line);
        edges.emplace_back(u, v);
        maxv = std::max({maxv, u, v});
    }
    if (n < 0) n = maxv + 1;
    return CubicGraph::from_edge_list(n, std::move(edges), path);
}

}  // namespace cyclecover
