#include "cyclecover/graph6.hpp"

#include <fstream>

namespace cyclecover {

namespace {

struct BitReader {
    const std::string& s;
    std::size_t pos;
    int bit = 0;
    int take() {
        if (pos >= s.size()) throw GraphError("graph6: truncated line");
        int c = s[pos] - 63;
        if (c < 0 || c > 63) throw GraphError("graph6: byte out of range");
        int b = (c >> (5 - bit)) & 1;
        if (++bit == 6) {
            bit = 0;
            ++pos;
        }
        return b;
    }
};

}  // namespace

CubicGraph graph6_decode(const std::string& line) {
    std::string s = line;
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    while (!s.empty() && (s.back() == '\n' || s.back() == '\r')) s.pop_back();
    if (s.empty()) throw GraphError("graph6: empty line");
    std::size_t pos = 0;
    long n;
    if (s[0] == '~') {
        if (s.size() >= 2 && s[1] == '~')
            throw GraphError("graph6: graphs beyond 2^18 vertices unsupported");
        if (s.size() < 4) throw GraphError("graph6: malformed header");
        n = 0;
        for (int i = 1; i <= 3; ++i) {
            int c = s[i] - 63;
            if (c < 0 || c > 63) throw GraphError("graph6: malformed header");
            n = (n << 6) | c;
        }
        pos = 4;
    } else {
        int c = s[0] - 63;
        if (c < 0 || c > 62) throw GraphError("graph6: malformed header");
        n = c;
        pos = 1;
    }
    BitReader br{s, pos};
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (br.take()) edges.emplace_back(i, j);
    return CubicGraph::from_edge_list(static_cast<int>(n), std::move(edges));
}

std::string graph6_encode(const CubicGraph& g) {
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(63 + n));
    } else {
        out.push_back('~');
        out.push_back(static_cast<char>(63 + ((n >> 12) & 63)));
        out.push_back(static_cast<char>(63 + ((n >> 6) & 63)));
        out.push_back(static_cast<char>(63 + (n & 63)));
    }
    int acc = 0, nb = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.edge_between(i, j) >= 0 ? 1 : 0);
            if (++nb == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = nb = 0;
            }
        }
    if (nb > 0) out.push_back(static_cast<char>(63 + (acc << (6 - nb))));
    return out;
}

std::vector<CubicGraph> read_graph6_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw GraphError("cannot open " + path);
    std::vector<CubicGraph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line == ">>graph6<<") continue;
        out.push_back(graph6_decode(line));
    }
    return out;
}

}  // namespace cyclecover
