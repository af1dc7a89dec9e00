// gencub: exhaustive generator for connected cubic graphs with a girth
// floor, with optional snark filtering (not 3-edge-colourable, cyclically
// 4-edge-connected). Output is one graph6 line per isomorphism class, in
// canonical order. Intended for rebuilding the small-snark corpus offline;
// the library itself never generates corpora.
//
// Method: grow adjacency lists by always completing the smallest vertex of
// degree < 3, connecting it either to a later incomplete vertex or to the
// single smallest untouched vertex. Neighbour lists are forced increasing.
// This is not isomorph-free, so survivors are deduplicated by a canonical
// adjacency encoding (backtracking maximisation). The search tree is split
// at a fixed depth and the subtrees run on worker threads.

#include <algorithm>
#include <array>
#include <atomic>
#include <cstdint>
#include <cstring>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "cyclecover/graph.hpp"
#include "cyclecover/graph6.hpp"

using cyclecover::CubicGraph;

namespace {

constexpr int kMaxN = 32;

// canonical encoding: lexicographically largest adjacency bitstring over
// all vertex labelings, found by prefix-pruned branch and bound.
// (Largest, not smallest: early 1-bits force early labels to be mutually
// adjacent, which prunes the labeling tree hard on sparse graphs.)
struct Canon {
    const CubicGraph* g;
    int n;
    std::vector<int> best;     // flattened upper triangle
    std::vector<int> cur_lab;  // position -> original vertex
    std::vector<int> cur_inv;  // original vertex -> position or -1
    long long autos = 0;
    bool counting = false;

    std::vector<int> encode(const std::vector<int>& lab) const {
        std::vector<int> bits;
        bits.reserve(n * (n - 1) / 2);
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i)
                bits.push_back(g->edge_between(lab[i], lab[j]) >= 0 ? 1 : 0);
        return bits;
    }

    // compare the column for position j (rows 0..j-1) against best:
    // -1 better, 0 equal, 1 worse
    int cmp_col(int j, int off) const {
        for (int i = 0; i < j; ++i) {
            int bit = g->edge_between(cur_lab[i], cur_lab[j]) >= 0 ? 1 : 0;
            if (bit != best[off + i]) return bit > best[off + i] ? -1 : 1;
        }
        return 0;
    }

    void rec(int j, int off) {
        if (j == n) {
            if (counting) ++autos;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (cur_inv[v] != -1) continue;
            cur_lab[j] = v;
            cur_inv[v] = j;
            int c = cmp_col(j, off);
            if (c < 0 && !counting) {
                // a strictly larger column beats best regardless of suffix:
                // promote an arbitrary completion to the new best, then keep
                // descending with ordinary equal-prefix pruning against it
                std::vector<char> used(n, 0);
                for (int i = 0; i <= j; ++i) used[cur_lab[i]] = 1;
                auto lab = cur_lab;
                int pos = j + 1;
                for (int u = 0; u < n; ++u)
                    if (!used[u]) lab[pos++] = u;
                best = encode(lab);
                c = 0;
            }
            if (c == 0) rec(j + 1, off + j);
            cur_inv[v] = -1;
        }
        cur_lab[j] = -1;
    }

    std::vector<int> run(const CubicGraph& graph, long long* aut_count) {
        g = &graph;
        n = g->vertex_count();
        std::vector<int> id(n);
        for (int i = 0; i < n; ++i) id[i] = i;
        best = encode(id);
        cur_lab.assign(n, -1);
        cur_inv.assign(n, -1);
        counting = false;
        rec(0, 0);
        if (aut_count) {
            counting = true;
            autos = 0;
            rec(0, 0);
            *aut_count = autos;
        }
        return best;
    }
};

struct ClassEntry {
    std::vector<std::pair<int, int>> edges;  // original labeling
    long long aut;
};

struct Shared {
    std::mutex mu;
    std::map<std::vector<int>, ClassEntry> classes;
    std::atomic<long long> leaves{0}, kept{0};
    bool count_aut = false;
};

struct Gen {
    int n;
    int min_girth;
    bool snarks_only;
    Shared* shared;
    std::array<std::array<int, 3>, kMaxN> adj{};
    std::array<int, kMaxN> deg{};
    int touched = 0;   // vertices 0..touched-1 have at least one edge
    int ecount = 0;
    int split_edges = -1;            // when >= 0, park states here
    std::vector<Gen>* park = nullptr;
    long long leaves = 0, kept = 0;

    bool adjacent(int u, int v) const {
        for (int i = 0; i < deg[u]; ++i)
            if (adj[u][i] == v) return true;
        return false;
    }

    // distance from u to v in the partial graph, capped
    int dist(int u, int v, int cap) const {
        if (u == v) return 0;
        std::array<int, kMaxN> d{};
        d.fill(-1);
        std::array<int, kMaxN> q;
        int qh = 0, qt = 0;
        d[u] = 0;
        q[qt++] = u;
        while (qh < qt) {
            int x = q[qh++];
            if (d[x] >= cap) break;
            for (int i = 0; i < deg[x]; ++i) {
                int y = adj[x][i];
                if (d[y] == -1) {
                    d[y] = d[x] + 1;
                    if (y == v) return d[y];
                    q[qt++] = y;
                }
            }
        }
        return d[v] == -1 ? cap + 1 : d[v];
    }

    void add_edge(int u, int v) {
        adj[u][deg[u]++] = v;
        adj[v][deg[v]++] = u;
        ++ecount;
    }
    void del_edge(int u, int v) {
        --deg[u];
        --deg[v];
        --ecount;
    }

    bool connected_raw() const {
        std::array<char, kMaxN> seen{};
        std::array<int, kMaxN> stack;
        int sp = 0, cnt = 1;
        seen[0] = 1;
        stack[sp++] = 0;
        while (sp) {
            int v = stack[--sp];
            for (int i = 0; i < 3; ++i) {
                int w = adj[v][i];
                if (!seen[w]) {
                    seen[w] = 1;
                    ++cnt;
                    stack[sp++] = w;
                }
            }
        }
        return cnt == n;
    }

    // fast proper 3-edge-colouring existence test on the raw arrays
    bool edge_3_colourable() const {
        int m = 3 * n / 2;
        std::array<std::pair<int, int>, 48> edges;
        std::array<std::array<int, 3>, kMaxN> einc{};  // edge ids per vertex
        std::array<int, kMaxN> ecnt{};
        int id = 0;
        for (int u = 0; u < n; ++u)
            for (int i = 0; i < 3; ++i) {
                int v = adj[u][i];
                if (v > u) {
                    edges[id] = {u, v};
                    einc[u][ecnt[u]++] = id;
                    einc[v][ecnt[v]++] = id;
                    ++id;
                }
            }
        std::array<int, 48> colour;
        colour.fill(-1);
        // DFS edge order keeps each new edge adjacent to coloured ones
        std::array<int, 48> order;
        std::array<char, 48> inorder{};
        int no = 0;
        std::array<int, kMaxN> vq;
        std::array<char, kMaxN> vseen{};
        int qh = 0, qt = 0;
        vq[qt++] = 0;
        vseen[0] = 1;
        while (qh < qt) {
            int v = vq[qh++];
            for (int i = 0; i < 3; ++i) {
                int e = einc[v][i];
                if (!inorder[e]) {
                    inorder[e] = 1;
                    order[no++] = e;
                }
                int w = adj[v][i];
                if (!vseen[w]) {
                    vseen[w] = 1;
                    vq[qt++] = w;
                }
            }
        }
        if (no != m) return false;  // disconnected; caller filters anyway
        auto rec = [&](auto&& self, int idx) -> bool {
            if (idx == m) return true;
            int e = order[idx];
            auto [u, v] = edges[e];
            int used = 0;
            for (int i = 0; i < 3; ++i) {
                int c1 = colour[einc[u][i]], c2 = colour[einc[v][i]];
                if (c1 >= 0) used |= 1 << c1;
                if (c2 >= 0) used |= 1 << c2;
            }
            for (int c = 0; c < 3; ++c) {
                if (used & (1 << c)) continue;
                colour[e] = c;
                if (self(self, idx + 1)) return true;
                colour[e] = -1;
            }
            return false;
        };
        return rec(rec, 0);
    }

    static bool has_cycle_component(const CubicGraph& g,
                                    const std::vector<char>& removed_edge,
                                    const std::vector<int>& comp, int which) {
        int v_cnt = 0, e_cnt = 0;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (comp[v] == which) ++v_cnt;
        for (int e = 0; e < g.edge_count(); ++e)
            if (!removed_edge[e] && comp[g.edge(e).first] == which) ++e_cnt;
        return e_cnt >= v_cnt;  // a component with |E| >= |V| contains a cycle
    }

    static bool cyclically_4_connected(const CubicGraph& g) {
        // no edge cut of size <= 3 separating two cycle-containing parts
        int m = g.edge_count();
        std::vector<char> removed(m, 0);
        auto check = [&]() {
            std::vector<int> comp(g.vertex_count(), -1);
            int ncomp = 0;
            for (int s = 0; s < g.vertex_count(); ++s) {
                if (comp[s] != -1) continue;
                std::vector<int> stack{s};
                comp[s] = ncomp;
                while (!stack.empty()) {
                    int v = stack.back();
                    stack.pop_back();
                    for (int e : g.incident_edges(v)) {
                        if (removed[e]) continue;
                        int w = g.other_end(e, v);
                        if (comp[w] == -1) {
                            comp[w] = ncomp;
                            stack.push_back(w);
                        }
                    }
                }
                ++ncomp;
            }
            if (ncomp < 2) return true;
            int cyclic = 0;
            for (int c = 0; c < ncomp; ++c)
                if (has_cycle_component(g, removed, comp, c)) ++cyclic;
            return cyclic < 2;
        };
        for (int a = 0; a < m; ++a) {
            removed[a] = 1;
            if (!check()) return false;
            for (int b = a + 1; b < m; ++b) {
                removed[b] = 1;
                if (!check()) return false;
                for (int c = b + 1; c < m; ++c) {
                    removed[c] = 1;
                    if (!check()) return false;
                    removed[c] = 0;
                }
                removed[b] = 0;
            }
            removed[a] = 0;
        }
        return true;
    }

    void leaf() {
        ++leaves;
        if (!connected_raw()) return;
        if (snarks_only && edge_3_colourable()) return;
        std::vector<std::pair<int, int>> edges;
        for (int u = 0; u < n; ++u)
            for (int i = 0; i < 3; ++i)
                if (adj[u][i] > u) edges.emplace_back(u, adj[u][i]);
        auto g = CubicGraph::from_edge_list(n, edges);
        if (snarks_only && !cyclically_4_connected(g)) return;
        ++kept;
        Canon canon;
        long long aut = 0;
        auto bits = canon.run(g, shared->count_aut ? &aut : nullptr);
        std::lock_guard<std::mutex> lock(shared->mu);
        if (!shared->classes.count(bits))
            shared->classes.emplace(bits, ClassEntry{std::move(edges), aut});
    }

    void extend() {
        if (ecount == split_edges && park) {
            park->push_back(*this);
            return;
        }
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (deg[u] < 3) {
                v = u;
                break;
            }
        if (v == -1) {
            leaf();
            return;
        }
        int last = deg[v] ? adj[v][deg[v] - 1] : v;
        // existing incomplete vertices after `last`
        int fresh = std::max(touched, v + 1);
        for (int w = std::max(last, v) + 1; w < fresh && w < n; ++w) {
            if (deg[w] >= 3 || adjacent(v, w)) continue;
            if (min_girth > 3 && dist(v, w, min_girth - 1) < min_girth - 1)
                continue;
            add_edge(v, w);
            extend();
            del_edge(v, w);
        }
        // one fresh vertex (smallest untouched)
        if (fresh < n) {
            int w = fresh;
            int saved = touched;
            touched = fresh + 1;
            add_edge(v, w);
            extend();
            del_edge(v, w);
            touched = saved;
        }
    }
};

CubicGraph relabel_canonical(int n, const std::vector<int>& bits) {
    std::vector<std::pair<int, int>> edges;
    int idx = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (bits[idx++]) edges.emplace_back(i, j);
    return CubicGraph::from_edge_list(n, std::move(edges));
}

}  // namespace

int main(int argc, char** argv) {
    int n = 0, min_girth = 3, jobs = int(std::thread::hardware_concurrency());
    bool snarks = false, count_aut = false;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "-n" && i + 1 < argc)
            n = std::atoi(argv[++i]);
        else if (a == "-g" && i + 1 < argc)
            min_girth = std::atoi(argv[++i]);
        else if (a == "-j" && i + 1 < argc)
            jobs = std::atoi(argv[++i]);
        else if (a == "--snarks")
            snarks = true;
        else if (a == "--aut")
            count_aut = true;
        else {
            std::cerr
                << "usage: gencub -n N [-g GIRTH] [-j JOBS] [--snarks] [--aut]\n";
            return 1;
        }
    }
    if (n < 4 || n % 2 != 0 || n > kMaxN) {
        std::cerr << "gencub: n must be even, 4 <= n <= " << kMaxN << "\n";
        return 1;
    }
    if (jobs < 1) jobs = 1;

    Shared shared;
    shared.count_aut = count_aut;

    Gen root;
    root.n = n;
    root.min_girth = min_girth;
    root.snarks_only = snarks;
    root.shared = &shared;
    root.touched = 1;

    std::vector<Gen> work;
    root.split_edges = n;  // split once two thirds of the edges are placed
    root.park = &work;
    root.extend();
    shared.leaves += root.leaves;
    shared.kept += root.kept;

    std::atomic<size_t> next{0};
    auto worker = [&]() {
        long long leaves = 0, kept = 0;
        for (;;) {
            size_t i = next.fetch_add(1);
            if (i >= work.size()) break;
            Gen g = work[i];
            g.split_edges = -1;
            g.park = nullptr;
            g.leaves = g.kept = 0;
            g.extend();
            leaves += g.leaves;
            kept += g.kept;
        }
        shared.leaves += leaves;
        shared.kept += kept;
    };
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    for (auto& [bits, entry] : shared.classes) {
        std::cout << cyclecover::graph6_encode(relabel_canonical(n, bits));
        if (count_aut) std::cout << " # |Aut|=" << entry.aut;
        std::cout << "\n";
    }
    std::cerr << "gencub: n=" << n << " girth>=" << min_girth
              << (snarks ? " snarks" : "") << ": leaves=" << shared.leaves
              << " kept=" << shared.kept
              << " classes=" << shared.classes.size() << "\n";
    return 0;
}
