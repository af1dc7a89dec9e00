#include "cyclecover/graph.hpp"

#include <algorithm>
#include <functional>
#include <queue>

namespace cyclecover {

Circuit Circuit::reversed(const CubicGraph& g) const {
    Circuit r;
    r.directed_edges.reserve(directed_edges.size());
    for (auto it = directed_edges.rbegin(); it != directed_edges.rend(); ++it) {
        r.directed_edges.push_back(
            DirectedEdge{it->edge, g.other_end(it->edge, it->head)});
    }
    return r;
}

CubicGraph CubicGraph::from_edge_list(int n,
                                      std::vector<std::pair<int, int>> edges,
                                      std::string name) {
    CubicGraph g;
    g.n_ = n;
    g.name_ = std::move(name);
    if (n < 4) throw GraphError("cubic graph needs at least 4 vertices");
    if (static_cast<int>(edges.size()) != 3 * n / 2)
        throw GraphError("cubic graph on " + std::to_string(n) +
                         " vertices needs " + std::to_string(3 * n / 2) +
                         " edges, got " + std::to_string(edges.size()));
    if (edges.size() > EdgeSet::kMaxEdges)
        throw GraphError("graph exceeds the supported edge count");
    for (auto& [u, v] : edges) {
        if (u == v) throw GraphError("loop at vertex " + std::to_string(u));
        if (u > v) std::swap(u, v);
        if (u < 0 || v >= n) throw GraphError("edge endpoint out of range");
    }
    g.edges_ = std::move(edges);
    g.incidence_.assign(n, {-1, -1, -1});
    std::vector<int> deg(n, 0);
    std::vector<std::vector<int>> adjmat(n, std::vector<int>(n, -1));
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.edges_[e];
        if (adjmat[u][v] != -1)
            throw GraphError("parallel edge between " + std::to_string(u) +
                             " and " + std::to_string(v));
        adjmat[u][v] = adjmat[v][u] = e;
        for (int w : {u, v}) {
            if (deg[w] == 3)
                throw GraphError("vertex " + std::to_string(w) +
                                 " has degree > 3");
            g.incidence_[w][deg[w]++] = e;
        }
    }
    for (int v = 0; v < n; ++v)
        if (deg[v] != 3)
            throw GraphError("vertex " + std::to_string(v) + " has degree " +
                             std::to_string(deg[v]) + ", expected 3");
    g.adjmat_flat_.assign(adjmat.size() * n, -1);
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            g.adjmat_flat_[static_cast<std::size_t>(u) * n + v] = adjmat[u][v];
    return g;
}

int CubicGraph::edge_between(int u, int v) const {
    return adjmat_flat_[static_cast<std::size_t>(u) * n_ + v];
}

bool is_connected(const CubicGraph& g) {
    int n = g.vertex_count();
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                stack.push_back(w);
            }
        }
    }
    return cnt == n;
}

bool is_bridgeless(const CubicGraph& g) {
    // standard low-link traversal
    int n = g.vertex_count();
    std::vector<int> disc(n, -1), low(n, 0);
    int timer = 0;
    bool bridge = false;
    std::function<void(int, int)> dfs = [&](int v, int parent_edge) {
        disc[v] = low[v] = timer++;
        for (int e : g.incident_edges(v)) {
            if (e == parent_edge) continue;
            int w = g.other_end(e, v);
            if (disc[w] == -1) {
                dfs(w, e);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) bridge = true;
            } else {
                low[v] = std::min(low[v], disc[w]);
            }
        }
    };
    dfs(0, -1);
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1) return false;  // disconnected counts as bridged
    return !bridge;
}

int girth(const CubicGraph& g) {
    // BFS from every vertex; shortest cycle through the root is found when a
    // non-tree edge closes two branches.
    int n = g.vertex_count();
    int best = -1;
    for (int root = 0; root < n; ++root) {
        std::vector<int> dist(n, -1), parent_edge(n, -1);
        std::queue<int> q;
        dist[root] = 0;
        q.push(root);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g.incident_edges(v)) {
                if (e == parent_edge[v]) continue;
                int w = g.other_end(e, v);
                if (dist[w] == -1) {
                    dist[w] = dist[v] + 1;
                    parent_edge[w] = e;
                    q.push(w);
                } else {
                    int len = dist[v] + dist[w] + 1;
                    if (best == -1 || len < best) best = len;
                }
            }
        }
    }
    if (best == -1) throw GraphError("girth undefined: graph is a forest");
    return best;
}

bool is_even_subgraph(const CubicGraph& g, const EdgeSet& s) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = 0;
        for (int e : g.incident_edges(v))
            if (s.contains(e)) ++d;
        if (d % 2 != 0) return false;
    }
    return true;
}

bool is_perfect_matching(const CubicGraph& g, const EdgeSet& s) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        int d = 0;
        for (int e : g.incident_edges(v))
            if (s.contains(e)) ++d;
        if (d != 1) return false;
    }
    return true;
}

std::vector<PerfectMatching> enumerate_perfect_matchings(const CubicGraph& g) {
    std::vector<PerfectMatching> out;
    int n = g.vertex_count();
    std::vector<char> covered(n, 0);
    EdgeSet cur;
    std::function<void(int)> rec = [&](int v) {
        while (v < n && covered[v]) ++v;
        if (v == n) {
            out.push_back(cur);
            return;
        }
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (covered[w]) continue;
            covered[v] = covered[w] = 1;
            cur.add(e);
            rec(v + 1);
            cur.remove(e);
            covered[v] = covered[w] = 0;
        }
    };
    rec(0);
    std::sort(out.begin(), out.end());
    return out;
}

EvenSubgraph complement_2factor(const CubicGraph& g,
                                const PerfectMatching& pm) {
    if (!is_perfect_matching(g, pm))
        throw GraphError("complement_2factor: input is not a perfect matching");
    return g.all_edges() ^ pm;
}

std::vector<Circuit> circuits(const CubicGraph& g, const EvenSubgraph& s) {
    if (!is_even_subgraph(g, s))
        throw GraphError("circuits: input is not an even subgraph");
    std::vector<Circuit> out;
    EdgeSet remaining = s;
    for (int start = 0; start < g.vertex_count(); ++start) {
        // pick the lowest vertex still carrying unused subgraph edges
        std::vector<int> inc;
        for (int e : g.incident_edges(start))
            if (remaining.contains(e)) inc.push_back(e);
        if (inc.empty()) continue;
        // direction: toward the lower-indexed neighbour first
        std::sort(inc.begin(), inc.end(), [&](int a, int b) {
            return g.other_end(a, start) < g.other_end(b, start);
        });
        Circuit c;
        int v = start;
        int e = inc[0];
        while (true) {
            int w = g.other_end(e, v);
            c.directed_edges.push_back(DirectedEdge{e, w});
            remaining.remove(e);
            if (w == start) break;
            int next = -1;
            for (int f : g.incident_edges(w))
                if (f != e && remaining.contains(f)) {
                    next = f;
                    break;
                }
            if (next == -1)
                throw GraphError("circuits: walk did not close (degree > 2?)");
            v = w;
            e = next;
        }
        out.push_back(std::move(c));
        --start;  // the same vertex may carry another circuit
    }
    return out;
}

std::optional<std::vector<int>> three_edge_colouring(const CubicGraph& g) {
    int m = g.edge_count();
    std::vector<int> colour(m, 0);
    // order edges so each new edge touches the coloured prefix when possible
    std::vector<int> order;
    {
        std::vector<char> used(m, 0);
        std::vector<int> stack;
        for (int e0 = 0; e0 < m; ++e0) {
            if (used[e0]) continue;
            stack.push_back(e0);
            used[e0] = 1;
            while (!stack.empty()) {
                int e = stack.back();
                stack.pop_back();
                order.push_back(e);
                auto [u, v] = g.edge(e);
                for (int w : {u, v})
                    for (int f : g.incident_edges(w))
                        if (!used[f]) {
                            used[f] = 1;
                            stack.push_back(f);
                        }
            }
        }
    }
    std::function<bool(int)> rec = [&](int idx) -> bool {
        if (idx == m) return true;
        int e = order[idx];
        auto [u, v] = g.edge(e);
        for (int c = 1; c <= 3; ++c) {
            bool ok = true;
            for (int w : {u, v})
                for (int f : g.incident_edges(w))
                    if (f != e && colour[f] == c) ok = false;
            if (!ok) continue;
            colour[e] = c;
            if (rec(idx + 1)) return true;
            colour[e] = 0;
        }
        return false;
    };
    if (!rec(0)) return std::nullopt;
    return colour;
}

std::vector<EvenSubgraph> enumerate_even_subgraphs(const CubicGraph& g) {
    // spanning tree + fundamental cycles
    int n = g.vertex_count(), m = g.edge_count();
    std::vector<int> parent(n, -1), parent_edge(n, -1), depth(n, 0);
    std::vector<char> tree_edge(m, 0);
    std::vector<int> stack{0};
    std::vector<char> seen(n, 0);
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int e : g.incident_edges(v)) {
            int w = g.other_end(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                parent[w] = v;
                parent_edge[w] = e;
                depth[w] = depth[v] + 1;
                tree_edge[e] = 1;
                stack.push_back(w);
            }
        }
    }
    std::vector<EdgeSet> basis;
    for (int e = 0; e < m; ++e) {
        if (tree_edge[e]) continue;
        EdgeSet cyc;
        cyc.add(e);
        auto [u, v] = g.edge(e);
        while (u != v) {
            if (depth[u] < depth[v]) std::swap(u, v);
            cyc.add(parent_edge[u]);
            u = parent[u];
        }
        basis.push_back(cyc);
    }
    if (basis.size() > 30)
        throw GraphError("cycle space too large to enumerate");
    std::vector<EvenSubgraph> out;
    out.reserve(std::size_t{1} << basis.size());
    for (std::uint32_t mask = 0; mask < (1u << basis.size()); ++mask) {
        EdgeSet s;
        for (std::size_t i = 0; i < basis.size(); ++i)
            if ((mask >> i) & 1) s ^= basis[i];
        out.push_back(s);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace cyclecover
