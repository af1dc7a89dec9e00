#include "cyclecover/flows.hpp"

#include <algorithm>
#include <cstdlib>
#include <queue>

namespace cyclecover {

bool flow_conserves(const CubicGraph& g, const IntFlow& flow) {
    if (static_cast<int>(flow.value.size()) != g.edge_count()) return false;
    std::vector<long long> net(g.vertex_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.edge(e);  // reference direction a -> b
        net[b] += flow.value[e];
        net[a] -= flow.value[e];
    }
    return std::all_of(net.begin(), net.end(),
                       [](long long x) { return x == 0; });
}

bool verify_nzk(const CubicGraph& g, const IntFlow& flow, int k) {
    if (!flow_conserves(g, flow)) return false;
    return std::all_of(flow.value.begin(), flow.value.end(), [&](int v) {
        return v != 0 && std::abs(v) < k;
    });
}

IntFlow flow_from_weights(const OrientedCycleCover& ocover,
                          const std::vector<int>& weights) {
    const CubicGraph& g = *ocover.graph;
    if (static_cast<int>(weights.size()) != ocover.k())
        throw GraphError("need one weight per cycle");
    IntFlow f{&g, std::vector<int>(g.edge_count(), 0)};
    for (int c = 0; c < ocover.k(); ++c)
        for (const auto& circ : ocover.cycles[c])
            for (const auto& d : circ.directed_edges)
                f.value[d.edge] +=
                    d.head == g.reference_head(d.edge) ? weights[c] : -weights[c];
    return f;
}

bool verify_subgraph_flow(const CubicGraph& g, const SubgraphFlow& part) {
    if (!flow_conserves(g, part.flow)) return false;
    for (int e = 0; e < g.edge_count(); ++e) {
        int v = part.flow.value[e];
        if (part.edges.contains(e)) {
            if (v == 0 || std::abs(v) >= part.k) return false;
        } else if (v != 0) {
            return false;
        }
    }
    return true;
}

std::optional<IntFlow> find_nz_flow(const CubicGraph& g, const EdgeSet& support,
                                    int k) {
    IntFlow f{&g, std::vector<int>(g.edge_count(), 0)};
    if (support.empty()) return f;
    auto edges = support.to_vector();

    // spanning forest of the support
    std::vector<int> parent_edge(g.vertex_count(), -1);
    std::vector<int> parent(g.vertex_count(), -1);
    std::vector<int> depth(g.vertex_count(), -1);
    std::vector<char> in_tree(g.edge_count(), 0);
    for (int e : edges) {
        for (int root : {g.edge(e).first, g.edge(e).second}) {
            if (depth[root] >= 0) continue;
            depth[root] = 0;
            std::queue<int> q;
            q.push(root);
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int ie : g.incident_edges(v)) {
                    if (!support.contains(ie)) continue;
                    int w = g.other_end(ie, v);
                    if (depth[w] >= 0) continue;
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    parent_edge[w] = ie;
                    in_tree[ie] = 1;
                    q.push(w);
                }
            }
        }
    }

    std::vector<int> cobasis, tree;
    for (int e : edges) (in_tree[e] ? tree : cobasis).push_back(e);
    std::vector<int> tree_idx(g.edge_count(), -1);
    for (std::size_t i = 0; i < tree.size(); ++i) tree_idx[tree[i]] = i;

    // fundamental cycle of each cobasis edge: the edge (low -> high) plus
    // the tree path high -> low; signs are relative to reference directions
    int dim = static_cast<int>(cobasis.size());
    if (dim > 26) throw GraphError("flow search space too large");
    std::vector<std::vector<std::pair<int, int>>> var_rows(dim);  // (tree, ±1)
    for (int c = 0; c < dim; ++c) {
        auto [lo, hi] = g.edge(cobasis[c]);
        int x = hi, y = lo;
        auto climb = [&](int& v, int sign) {
            int te = parent_edge[v];
            int toward = sign > 0 ? parent[v] : v;  // head along the path
            var_rows[c].push_back(
                {tree_idx[te],
                 toward == g.reference_head(te) ? 1 : -1});
            v = parent[v];
        };
        while (depth[x] > depth[y]) climb(x, 1);
        while (depth[y] > depth[x]) climb(y, -1);
        while (x != y) {
            climb(x, 1);
            climb(y, -1);
        }
    }
    std::vector<int> remaining(tree.size(), 0), last_var(tree.size(), -1);
    for (int c = 0; c < dim; ++c)
        for (auto [t, s] : var_rows[c]) {
            ++remaining[t];
            last_var[t] = std::max(last_var[t], c);
        }
    // a tree edge no fundamental cycle crosses can only carry 0
    if (std::find(remaining.begin(), remaining.end(), 0) != remaining.end())
        return std::nullopt;
    std::vector<std::vector<int>> finalize(dim);
    for (std::size_t t = 0; t < tree.size(); ++t)
        finalize[last_var[t]].push_back(t);

    std::vector<int> partial(tree.size(), 0), x(dim, 0);
    auto rec = [&](auto&& self, int i) -> bool {
        if (i == dim) return true;
        for (int mag = 1; mag < k; ++mag) {
            for (int sign : {1, -1}) {
                int val = sign * mag;
                x[i] = val;
                for (auto [t, s] : var_rows[i]) partial[t] += s * val;
                bool ok = true;
                for (int t : finalize[i])
                    if (partial[t] == 0 || std::abs(partial[t]) >= k) {
                        ok = false;
                        break;
                    }
                if (ok && self(self, i + 1)) return true;
                for (auto [t, s] : var_rows[i]) partial[t] -= s * val;
            }
        }
        return false;
    };
    if (!rec(rec, 0)) return std::nullopt;
    for (int c = 0; c < dim; ++c) f.value[cobasis[c]] = x[c];
    for (std::size_t t = 0; t < tree.size(); ++t) f.value[tree[t]] = partial[t];
    return f;
}

FlowTripleCover flows_244(const CycleCover& cover,
                          const std::array<int, 3>& triple) {
    const CubicGraph& g = *cover.graph;
    FlowTripleCover out;
    for (int e = 0; e < g.edge_count(); ++e) {
        int c = 0;
        for (int i : triple) c += cover.cycles[i].contains(e);
        if (c % 2 == 1) out.c2.edges.add(e);
        if (c <= 2) out.f4a.edges.add(e);
        if (c != 1) out.f4b.edges.add(e);
    }
    if (!is_even_subgraph(g, out.c2.edges))
        throw GraphError("odd-coverage edge set is not an even subgraph");
    // nz2 on C2: value +1 along each circuit's traversal direction
    out.c2.k = 2;
    out.c2.flow = {&g, std::vector<int>(g.edge_count(), 0)};
    for (const auto& circ : circuits(g, out.c2.edges))
        for (const auto& d : circ.directed_edges)
            out.c2.flow.value[d.edge] =
                d.head == g.reference_head(d.edge) ? 1 : -1;
    auto attach = [&](SubgraphFlow& part, const char* which) {
        part.k = 4;
        auto flow = find_nz_flow(g, part.edges, 4);
        if (!flow) {
            std::string msg = "no nz4 flow on ";
            msg += which;
            msg += ", edges:";
            part.edges.for_each(
                [&](int e) { msg += " " + std::to_string(e); });
            throw GraphError(msg);
        }
        part.flow = *flow;
    };
    attach(out.f4a, "F4a");
    attach(out.f4b, "F4b");
    return out;
}

namespace {

// joint backtracking over the edges: each edge gets one value per flow,
// exactly one of them zero, conservation per flow at every vertex
struct TripleSearch {
    const CubicGraph& g;
    int kflow;               // 4 for (2,4,4) parts, 3 for (3,3,3)
    bool c2_first;           // part 0 restricted to ±1 (the nz2 part)
    bool oriented;
    long long budget;
    int max_solutions;

    std::vector<std::array<int, 3>> combos;
    std::vector<int> order;  // edge visit order (BFS, closes vertices early)
    std::vector<std::array<long long, 3>> sum;  // per vertex per flow
    std::vector<int> seen;                      // assigned edges per vertex
    std::vector<std::array<int, 3>> val;        // per edge
    long long nodes = 0;
    std::vector<FlowDecomposition> found;

    TripleSearch(const CubicGraph& graph, int k, bool c2, bool orient,
                 long long b, int maxs)
        : g(graph), kflow(k), c2_first(c2), oriented(orient), budget(b),
          max_solutions(maxs) {
        for (int zero = 0; zero < 3; ++zero) {
            auto lim = [&](int part) { return part == 0 && c2_first ? 2 : kflow; };
            int p1 = (zero + 1) % 3, p2 = (zero + 2) % 3;
            for (int a = -(lim(p1) - 1); a < lim(p1); ++a) {
                if (a == 0) continue;
                for (int b2 = -(lim(p2) - 1); b2 < lim(p2); ++b2) {
                    if (b2 == 0) continue;
                    if (oriented && (a > 0) == (b2 > 0)) continue;
                    std::array<int, 3> v{};
                    v[p1] = a;
                    v[p2] = b2;
                    combos.push_back(v);
                }
            }
        }
        std::vector<char> ve(g.edge_count(), 0), vv(g.vertex_count(), 0);
        std::queue<int> q;
        q.push(0);
        vv[0] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int e : g.incident_edges(v)) {
                if (ve[e]) continue;
                ve[e] = 1;
                order.push_back(e);
                int w = g.other_end(e, v);
                if (!vv[w]) {
                    vv[w] = 1;
                    q.push(w);
                }
            }
        }
        sum.assign(g.vertex_count(), {0, 0, 0});
        seen.assign(g.vertex_count(), 0);
        val.assign(g.edge_count(), {0, 0, 0});
    }

    bool feasible(int v, const std::array<int, 3>& s) const {
        // v just closed: all three flows must balance
        return s[0] == 0 && s[1] == 0 && s[2] == 0;
    }

    bool rec(std::size_t i) {
        if (budget >= 0 && nodes > budget) return false;
        if (i == order.size()) {
            FlowDecomposition d;
            for (int p = 0; p < 3; ++p) {
                d.parts[p].k = p == 0 && c2_first ? 2 : kflow;
                d.parts[p].flow = {&g, std::vector<int>(g.edge_count(), 0)};
                for (int e = 0; e < g.edge_count(); ++e)
                    if (val[e][p] != 0) {
                        d.parts[p].edges.add(e);
                        d.parts[p].flow.value[e] = val[e][p];
                    }
            }
            found.push_back(std::move(d));
            return static_cast<int>(found.size()) >= max_solutions;
        }
        int e = order[i];
        auto [a, b] = g.edge(e);
        for (const auto& cb : combos) {
            ++nodes;
            bool ok = true;
            for (int p = 0; p < 3 && ok; ++p) {
                long long sa = sum[a][p] - cb[p];  // a is the tail
                long long sb = sum[b][p] + cb[p];
                // residual must stay reachable by the unassigned edges
                int lim = (p == 0 && c2_first ? 2 : kflow) - 1;
                if (seen[a] == 2 && sa != 0) ok = false;
                if (seen[b] == 2 && sb != 0) ok = false;
                if (seen[a] < 2 &&
                    std::abs(sa) > static_cast<long long>(lim) * (2 - seen[a]))
                    ok = false;
                if (seen[b] < 2 &&
                    std::abs(sb) > static_cast<long long>(lim) * (2 - seen[b]))
                    ok = false;
            }
            if (!ok) continue;
            val[e] = cb;
            for (int p = 0; p < 3; ++p) {
                sum[a][p] -= cb[p];
                sum[b][p] += cb[p];
            }
            ++seen[a];
            ++seen[b];
            if (rec(i + 1)) return true;
            --seen[a];
            --seen[b];
            for (int p = 0; p < 3; ++p) {
                sum[a][p] += cb[p];
                sum[b][p] -= cb[p];
            }
        }
        val[e] = {0, 0, 0};
        return false;
    }
};

FlowSearchResult run_triple_search(const CubicGraph& g, int k, bool c2,
                                   bool oriented, long long budget, int maxs) {
    TripleSearch s(g, k, c2, oriented, budget, maxs);
    s.rec(0);
    FlowSearchResult out;
    out.nodes = s.nodes;
    out.solutions = std::move(s.found);
    out.outcome = (budget >= 0 && s.nodes > budget)
                      ? SearchOutcome::budget_exhausted
                      : SearchOutcome::completed;
    return out;
}

}  // namespace

FlowSearchResult search_oriented_244(const CubicGraph& g, long long node_budget,
                                     int max_solutions) {
    return run_triple_search(g, 4, true, true, node_budget, max_solutions);
}

FlowSearchResult search_333(const CubicGraph& g, bool oriented,
                            long long node_budget, int max_solutions) {
    return run_triple_search(g, 3, false, oriented, node_budget, max_solutions);
}

}  // namespace cyclecover
