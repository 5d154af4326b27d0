#include "certidom/independence.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <vector>

namespace certidom {

namespace {

using u64 = std::uint64_t;

struct MisSearch {
    const std::vector<u64>& adj;
    int best = 0;

    void dfs(u64 candidates, int size) {
        if (size + std::popcount(candidates) <= best) return;
        if (candidates == 0) {
            best = std::max(best, size);
            return;
        }
        // branch on the candidate with most candidate neighbors
        int pick = -1, pick_deg = -1;
        for (u64 it = candidates; it; it &= it - 1) {
            int v = std::countr_zero(it);
            int deg = std::popcount(adj[static_cast<std::size_t>(v)] & candidates);
            if (deg > pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        u64 bit = u64{1} << pick;
        dfs(candidates & ~bit & ~adj[static_cast<std::size_t>(pick)], size + 1);
        dfs(candidates & ~bit, size);
    }
};

int greedy_lower_bound(const std::vector<u64>& adj, int n) {
    u64 available = n >= 64 ? ~u64{0} : (u64{1} << n) - 1;
    int size = 0;
    while (available) {
        int pick = -1, pick_deg = n + 1;
        for (u64 it = available; it; it &= it - 1) {
            int v = std::countr_zero(it);
            int deg = std::popcount(adj[static_cast<std::size_t>(v)] & available);
            if (deg < pick_deg) {
                pick_deg = deg;
                pick = v;
            }
        }
        ++size;
        available &= ~(u64{1} << pick);
        available &= ~adj[static_cast<std::size_t>(pick)];
    }
    return size;
}

}  // namespace

int max_independent_set_size(const Graph& g) {
    const int n = g.order();
    std::vector<u64> adj(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) adj[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
    MisSearch search{adj};
    search.best = greedy_lower_bound(adj, n) - 1;  // dfs must be able to re-confirm it
    search.dfs(n >= 64 ? ~u64{0} : (u64{1} << n) - 1, 0);
    return search.best;
}

}  // namespace certidom
