// Naive reference implementations used as independent oracles. Everything
// here works on a plain adjacency matrix with index loops and full subset
// scans; none of it shares code with the solvers under test.
#pragma once

#include <algorithm>
#include <vector>

#include "certidom/graph.hpp"

namespace oracle {

struct Adj {
    int n = 0;
    std::vector<std::vector<char>> m;
};

inline Adj from(const certidom::Graph& g) {
    Adj a;
    a.n = g.order();
    a.m.assign(static_cast<std::size_t>(a.n), std::vector<char>(static_cast<std::size_t>(a.n), 0));
    for (auto [u, v] : g.edge_list()) {
        a.m[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = 1;
        a.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = 1;
    }
    return a;
}

inline bool in_set(unsigned mask, int v) { return (mask >> v) & 1u; }

inline bool dominating(const Adj& a, unsigned mask) {
    for (int v = 0; v < a.n; ++v) {
        if (in_set(mask, v)) continue;
        bool covered = false;
        for (int u = 0; u < a.n && !covered; ++u)
            if (in_set(mask, u) && a.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                covered = true;
        if (!covered) return false;
    }
    return true;
}

inline bool certified(const Adj& a, unsigned mask) {
    if (!dominating(a, mask)) return false;
    for (int v = 0; v < a.n; ++v) {
        if (!in_set(mask, v)) continue;
        int outside = 0;
        for (int u = 0; u < a.n; ++u)
            if (!in_set(mask, u) && a.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                ++outside;
        if (outside == 1) return false;
    }
    return true;
}

// Minimality straight from the definition: no proper subset qualifies.
inline bool minimal_dominating(const Adj& a, unsigned mask) {
    if (!dominating(a, mask)) return false;
    for (unsigned sub = (mask - 1) & mask; ; sub = (sub - 1) & mask) {
        if (sub != mask && dominating(a, sub)) return false;
        if (sub == 0) break;
    }
    return true;
}

inline bool minimal_certified(const Adj& a, unsigned mask) {
    if (!certified(a, mask)) return false;
    for (unsigned sub = (mask - 1) & mask; ; sub = (sub - 1) & mask) {
        if (sub != mask && certified(a, sub)) return false;
        if (sub == 0) break;
    }
    return true;
}

inline int popcount(unsigned mask) {
    int c = 0;
    while (mask) {
        mask &= mask - 1;
        ++c;
    }
    return c;
}

inline int gamma(const Adj& a) {
    int best = a.n;
    for (unsigned mask = 0; mask < (1u << a.n); ++mask)
        if (dominating(a, mask)) best = std::min(best, popcount(mask));
    return best;
}

inline int gamma_cer(const Adj& a) {
    int best = a.n;
    for (unsigned mask = 0; mask < (1u << a.n); ++mask)
        if (certified(a, mask)) best = std::min(best, popcount(mask));
    return best;
}

inline int upper_gamma(const Adj& a) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << a.n); ++mask)
        if (minimal_dominating(a, mask)) best = std::max(best, popcount(mask));
    return best;
}

inline int upper_gamma_cer(const Adj& a) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << a.n); ++mask)
        if (minimal_certified(a, mask)) best = std::max(best, popcount(mask));
    return best;
}

inline bool independent(const Adj& a, unsigned mask) {
    for (int v = 0; v < a.n; ++v)
        for (int u = v + 1; u < a.n; ++u)
            if (in_set(mask, v) && in_set(mask, u) &&
                a.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)])
                return false;
    return true;
}

inline int beta0(const Adj& a) {
    int best = 0;
    for (unsigned mask = 0; mask < (1u << a.n); ++mask)
        if (independent(a, mask)) best = std::max(best, popcount(mask));
    return best;
}

// Private neighborhood straight from the definition.
inline std::vector<int> private_neighborhood(const Adj& a, int v, unsigned x_mask, bool closed) {
    std::vector<int> out;
    for (int w = 0; w < a.n; ++w) {
        bool in_base = closed ? (w == v || a.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)])
                              : a.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(w)] != 0;
        if (!in_base) continue;
        bool near_other = false;
        for (int u = 0; u < a.n && !near_other; ++u) {
            if (u == v || !in_set(x_mask, u)) continue;
            if (w == u || a.m[static_cast<std::size_t>(w)][static_cast<std::size_t>(u)]) near_other = true;
        }
        if (!near_other) out.push_back(w);
    }
    return out;
}

// P4-freeness by trying every ordered labeling of every 4-subset.
inline bool p4_free(const Adj& a) {
    std::vector<int> vs(4);
    for (int q0 = 0; q0 < a.n; ++q0)
        for (int q1 = q0 + 1; q1 < a.n; ++q1)
            for (int q2 = q1 + 1; q2 < a.n; ++q2)
                for (int q3 = q2 + 1; q3 < a.n; ++q3) {
                    vs = {q0, q1, q2, q3};
                    std::sort(vs.begin(), vs.end());
                    do {
                        auto edge = [&](int i, int j) {
                            return a.m[static_cast<std::size_t>(vs[static_cast<std::size_t>(i)])]
                                      [static_cast<std::size_t>(vs[static_cast<std::size_t>(j)])] != 0;
                        };
                        if (edge(0, 1) && edge(1, 2) && edge(2, 3) && !edge(0, 2) && !edge(0, 3) &&
                            !edge(1, 3))
                            return false;
                    } while (std::next_permutation(vs.begin(), vs.end()));
                }
    return true;
}

inline bool connected(const Adj& a) {
    std::vector<char> seen(static_cast<std::size_t>(a.n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u = 0; u < a.n; ++u)
            if (a.m[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] && !seen[static_cast<std::size_t>(u)]) {
                seen[static_cast<std::size_t>(u)] = 1;
                stack.push_back(u);
            }
    }
    return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

}  // namespace oracle
