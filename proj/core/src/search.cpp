#include "cyclecover/search.hpp"

#include <algorithm>

namespace cyclecover {

namespace {

// Multiset-cover backtracking over a fixed pool of candidate edge sets with
// non-decreasing indices; each edge must be hit exactly `target` times.
// `on_solution` returns true to stop the whole search.
struct PoolSearch {
    const CubicGraph& g;
    const std::vector<EdgeSet>& pool;
    int k;
    int target;
    long long budget;  // < 0: unlimited
    long long nodes = 0;
    bool exhausted_budget = false;

    std::vector<int> cnt;
    std::vector<int> chosen;
    // suffix_hits[e][i] = how many pool members with index >= i contain e
    std::vector<std::vector<int>> suffix_hits;

    template <typename Fn>
    bool rec(int j, int min_idx, Fn&& on_solution) {
        if (budget >= 0 && nodes >= budget) {
            exhausted_budget = true;
            return true;
        }
        ++nodes;
        if (j == k) {
            for (int e = 0; e < g.edge_count(); ++e)
                if (cnt[e] != target) return false;
            return on_solution(chosen);
        }
        int remaining = k - j;
        for (int e = 0; e < g.edge_count(); ++e) {
            int need = target - cnt[e];
            if (need < 0) return false;
            // members may repeat, so one containing member suffices for any
            // need that fits in the remaining slots
            if (need > remaining || (need > 0 && suffix_hits[e][min_idx] == 0))
                return false;
        }
        for (int idx = min_idx; idx < static_cast<int>(pool.size()); ++idx) {
            bool ok = true;
            pool[idx].for_each([&](int e) {
                if (++cnt[e] > target) ok = false;
            });
            if (ok) {
                chosen.push_back(idx);
                bool stop = rec(j + 1, idx, on_solution);
                chosen.pop_back();
                if (stop) {
                    pool[idx].for_each([&](int e) { --cnt[e]; });
                    return true;
                }
            }
            pool[idx].for_each([&](int e) { --cnt[e]; });
        }
        return false;
    }

    template <typename Fn>
    void run(Fn&& on_solution) {
        cnt.assign(g.edge_count(), 0);
        int p = static_cast<int>(pool.size());
        suffix_hits.assign(g.edge_count(), std::vector<int>(p + 1, 0));
        for (int e = 0; e < g.edge_count(); ++e)
            for (int i = p - 1; i >= 0; --i)
                suffix_hits[e][i] =
                    suffix_hits[e][i + 1] + (pool[i].contains(e) ? 1 : 0);
        rec(0, 0, on_solution);
    }
};

}  // namespace

SearchResult search_cycle_cover(const CubicGraph& g, const SearchConfig& cfg) {
    if (cfg.k < 1 || cfg.m < 1 || cfg.k < cfg.m)
        throw GraphError("search needs k >= m >= 1");
    if (cfg.oriented && cfg.m % 2 != 0)
        throw GraphError("oriented search needs even m");

    SearchResult res;
    bool pm_engine = 2 * cfg.k == 3 * cfg.m;

    std::vector<EdgeSet> pool;
    int target;
    if (pm_engine) {
        // every cycle is a 2-factor; an edge lies in m of the k cycles iff
        // it lies in k−m of the chosen perfect matchings
        pool = enumerate_perfect_matchings(g);
        target = cfg.k - cfg.m;
    } else {
        for (auto& s : enumerate_even_subgraphs(g))
            if (!s.empty()) pool.push_back(std::move(s));
        target = cfg.m;
    }

    PoolSearch ps{g, pool, cfg.k, target, cfg.node_budget};
    auto on_solution = [&](const std::vector<int>& chosen) -> bool {
        CycleCover cover;
        cover.graph = &g;
        cover.m = cfg.m;
        for (int idx : chosen)
            cover.cycles.push_back(pm_engine ? complement_2factor(g, pool[idx])
                                             : pool[idx]);
        if (!cfg.oriented) {
            ++res.solution_count;
            if (cfg.mode != SearchMode::count) res.covers.push_back(cover);
            return cfg.mode == SearchMode::first;
        }
        auto oriented = orient_cover(
            g, cover,
            cfg.mode == SearchMode::first ? SearchMode::first : SearchMode::all);
        res.solution_count += static_cast<long long>(oriented.size());
        if (cfg.mode == SearchMode::first) {
            if (!oriented.empty()) {
                res.oriented.push_back(std::move(oriented.front()));
                return true;
            }
            return false;
        }
        if (cfg.mode == SearchMode::all)
            for (auto& oc : oriented) res.oriented.push_back(std::move(oc));
        return false;
    };
    ps.run(on_solution);
    res.nodes = ps.nodes;
    res.outcome = ps.exhausted_budget ? SearchOutcome::budget_exhausted
                                      : SearchOutcome::completed;
    return res;
}

}  // namespace cyclecover
