#include "certidom/domination.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <climits>
#include <cstdint>

namespace certidom {

namespace {

using u64 = std::uint64_t;

void check_set(const Graph& g, const VertexSet& d) {
    if (d.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph order");
}

u64 all_mask(int n) { return n >= 64 ? ~u64{0} : (u64{1} << n) - 1; }

/// Word-level adjacency snapshot used by the search kernels.
struct Rows {
    int n;
    u64 all;
    std::array<u64, 64> closed;  // N[v]
    std::array<u64, 64> open;    // N(v)

    explicit Rows(const Graph& g) : n(g.order()), all(all_mask(g.order())) {
        for (int v = 0; v < n; ++v) {
            open[static_cast<std::size_t>(v)] = g.neighbors(v).bits();
            closed[static_cast<std::size_t>(v)] = open[static_cast<std::size_t>(v)] | (u64{1} << v);
        }
    }
};

/// Greedy disjoint-closed-neighborhood packing over the undominated vertices.
/// Every packed vertex needs its own dominator, so the packing size is a
/// lower bound on the number of vertices still to add. Returns -1 when some
/// undominated vertex has no available dominator at all.
int packing_bound(const Rows& r, u64 undominated, u64 excluded) {
    int lb = 0;
    u64 blocked = 0;
    for (u64 it = undominated; it; it &= it - 1) {
        int v = std::countr_zero(it);
        u64 row = r.closed[static_cast<std::size_t>(v)];
        if ((row & ~excluded) == 0) return -1;
        if ((row & blocked) == 0) {
            ++lb;
            blocked |= row;
        }
    }
    return lb;
}

int greedy_dominating_size(const Rows& r) {
    u64 undominated = r.all;
    int size = 0;
    while (undominated) {
        int pick = -1, gain = -1;
        for (int v = 0; v < r.n; ++v) {
            int c = std::popcount(r.closed[static_cast<std::size_t>(v)] & undominated);
            if (c > gain) {
                gain = c;
                pick = v;
            }
        }
        undominated &= ~r.closed[static_cast<std::size_t>(pick)];
        ++size;
    }
    return size;
}

struct GammaValueSearch {
    const Rows& r;
    int best;

    void dfs(int size, u64 dominated, u64 excluded) {
        if (dominated == r.all) {
            best = std::min(best, size);
            return;
        }
        int lb = packing_bound(r, r.all & ~dominated, excluded);
        if (lb < 0 || size + lb >= best) return;
        int pick = -1, fewest = INT_MAX;
        for (u64 it = r.all & ~dominated; it; it &= it - 1) {
            int v = std::countr_zero(it);
            int c = std::popcount(r.closed[static_cast<std::size_t>(v)] & ~excluded);
            if (c < fewest) {
                fewest = c;
                pick = v;
            }
        }
        u64 ex = excluded;
        for (u64 it = r.closed[static_cast<std::size_t>(pick)] & ~excluded; it; it &= it - 1) {
            int u = std::countr_zero(it);
            dfs(size + 1, dominated | r.closed[static_cast<std::size_t>(u)], ex);
            ex |= u64{1} << u;
        }
    }
};

int gamma_value_masks(const Rows& r) {
    GammaValueSearch s{r, greedy_dominating_size(r)};
    s.dfs(0, 0, 0);
    return s.best;
}

/// Enumerates every dominating set of exactly k vertices once. The search
/// branches on dominators of the undominated vertex with the fewest
/// candidates; once domination is complete the remaining quota is padded with
/// every combination of free vertices.
struct LevelEnum {
    const Rows& r;
    int k;
    const std::function<bool(u64)>& f;
    bool stop = false;

    void emit(u64 mask) {
        if (!stop && !f(mask)) stop = true;
    }

    void pad(u64 in, const std::array<int, 64>& elems, int count, int start, int need) {
        if (stop) return;
        if (need == 0) {
            emit(in);
            return;
        }
        for (int i = start; i <= count - need && !stop; ++i)
            pad(in | (u64{1} << elems[static_cast<std::size_t>(i)]), elems, count, i + 1, need - 1);
    }

    void dfs(u64 in, int size, u64 dominated, u64 excluded) {
        if (stop) return;
        if (dominated == r.all) {
            int need = k - size;
            if (need == 0) {
                emit(in);
                return;
            }
            u64 free = r.all & ~in & ~excluded;
            if (std::popcount(free) < need) return;
            std::array<int, 64> elems{};
            int count = 0;
            for (u64 it = free; it; it &= it - 1) elems[static_cast<std::size_t>(count++)] = std::countr_zero(it);
            pad(in, elems, count, 0, need);
            return;
        }
        if (size == k) return;
        int lb = packing_bound(r, r.all & ~dominated, excluded);
        if (lb < 0 || size + lb > k) return;
        int pick = -1, fewest = INT_MAX;
        for (u64 it = r.all & ~dominated; it; it &= it - 1) {
            int v = std::countr_zero(it);
            int c = std::popcount(r.closed[static_cast<std::size_t>(v)] & ~excluded);
            if (c < fewest) {
                fewest = c;
                pick = v;
            }
        }
        u64 ex = excluded;
        for (u64 it = r.closed[static_cast<std::size_t>(pick)] & ~excluded; it && !stop; it &= it - 1) {
            int u = std::countr_zero(it);
            dfs(in | (u64{1} << u), size + 1, dominated | r.closed[static_cast<std::size_t>(u)], ex);
            ex |= u64{1} << u;
        }
    }
};

void for_each_dominating_mask(const Rows& r, int k, const std::function<bool(u64)>& f) {
    if (k < 0 || k > r.n) return;
    LevelEnum e{r, k, f};
    e.dfs(0, 0, 0, 0);
}

bool certified_mask(const Rows& r, u64 d) {
    u64 covered = d;
    for (u64 it = d; it; it &= it - 1)
        covered |= r.open[static_cast<std::size_t>(std::countr_zero(it))];
    if (covered != r.all) return false;
    for (u64 it = d; it; it &= it - 1)
        if (std::popcount(r.open[static_cast<std::size_t>(std::countr_zero(it))] & ~d) == 1)
            return false;
    return true;
}

bool minimal_dominating_mask(const Rows& r, u64 d) {
    u64 covered = 0;
    for (u64 it = d; it; it &= it - 1)
        covered |= r.closed[static_cast<std::size_t>(std::countr_zero(it))];
    if (covered != r.all) return false;
    for (u64 it = d; it; it &= it - 1) {
        int v = std::countr_zero(it);
        u64 others = 0;
        for (u64 jt = d & ~(u64{1} << v); jt; jt &= jt - 1)
            others |= r.closed[static_cast<std::size_t>(std::countr_zero(jt))];
        if ((r.closed[static_cast<std::size_t>(v)] & ~others) == 0) return false;
    }
    return true;
}

/// Scans every proper subset of d (smallest first) for a certified dominating
/// set; true when none exists and d itself is certified dominating.
bool minimal_certified_mask(const Rows& r, u64 d) {
    if (!certified_mask(r, d)) return false;
    std::array<int, 64> elems{};
    int count = 0;
    for (u64 it = d; it; it &= it - 1) elems[static_cast<std::size_t>(count++)] = std::countr_zero(it);
    for (int size = 1; size < count; ++size) {
        // combinations of `size` members via the ascending-positions walk
        std::array<int, 64> idx{};
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            u64 sub = 0;
            for (int i = 0; i < size; ++i)
                sub |= u64{1} << elems[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
            if (certified_mask(r, sub)) return false;
            int pos = size - 1;
            while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == count - size + pos) --pos;
            if (pos < 0) break;
            ++idx[static_cast<std::size_t>(pos)];
            for (int i = pos + 1; i < size; ++i)
                idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
        }
    }
    return true;
}

std::optional<u64> lex_min_level_mask(const Rows& r, int k,
                                      const std::function<bool(u64)>& pred) {
    std::optional<u64> best;
    // lex order on ascending member lists of same-size masks: compare the
    // lowest differing bit
    auto lex_less_mask = [](u64 a, u64 b) {
        u64 diff = a ^ b;
        if (diff == 0) return false;
        return ((a >> std::countr_zero(diff)) & 1u) != 0;
    };
    for_each_dominating_mask(r, k, [&](u64 mask) {
        if (pred(mask) && (!best || lex_less_mask(mask, *best))) best = mask;
        return true;
    });
    return best;
}

struct OneResult {
    int value = 0;
    u64 witness = 0;
};

OneResult solve_gamma_one(const Rows& r) {
    int value = gamma_value_masks(r);
    auto best = lex_min_level_mask(r, value, [](u64) { return true; });
    return OneResult{value, *best};
}

OneResult solve_gamma_cer_one(const Rows& r) {
    int lo = gamma_value_masks(r);
    for (int k = lo; k <= r.n; ++k) {
        if (k == r.n - 1) continue;  // no n-1 vertices form a certified dominating set
        auto best = lex_min_level_mask(r, k, [&](u64 m) { return certified_mask(r, m); });
        if (best) return OneResult{k, *best};
    }
    return OneResult{r.n, r.all};  // unreachable: V itself is certified dominating
}

OneResult solve_upper_gamma_one(const Rows& r) {
    for (int s = r.n; s >= 1; --s) {
        auto best = lex_min_level_mask(r, s, [&](u64 m) { return minimal_dominating_mask(r, m); });
        if (best) return OneResult{s, *best};
    }
    return OneResult{0, 0};  // unreachable
}

OneResult solve_upper_gamma_cer_one(const Rows& r) {
    for (int s = r.n; s >= 1; --s) {
        if (s == r.n - 1) continue;
        auto best = lex_min_level_mask(r, s, [&](u64 m) { return minimal_certified_mask(r, m); });
        if (best) return OneResult{s, *best};
    }
    return OneResult{0, 0};  // unreachable
}

template <typename SolveOne>
InvariantResult solve_by_components(const Graph& g, InvariantKind kind, SolveOne one) {
    InvariantResult out;
    out.kind = kind;
    out.witness = VertexSet(g.order());
    if (g.is_connected()) {
        Rows r(g);
        OneResult res = one(r);
        out.value = res.value;
        out.witness = VertexSet(g.order(), res.witness);
    } else {
        for (const Graph::Component& c : g.components()) {
            Rows r(c.graph);
            OneResult res = one(r);
            out.value += res.value;
            for (u64 it = res.witness; it; it &= it - 1)
                out.witness.add(c.to_parent[static_cast<std::size_t>(std::countr_zero(it))]);
        }
    }
    return out;
}

template <typename PerComponent>
int sum_over_components(const Graph& g, PerComponent per) {
    if (g.is_connected()) {
        Rows r(g);
        return per(r);
    }
    int total = 0;
    for (const Graph::Component& c : g.components()) {
        Rows r(c.graph);
        total += per(r);
    }
    return total;
}

int gamma_cer_value_masks(const Rows& r) {
    int lo = gamma_value_masks(r);
    for (int k = lo; k <= r.n; ++k) {
        if (k == r.n - 1) continue;
        bool found = false;
        for_each_dominating_mask(r, k, [&](u64 m) {
            found = certified_mask(r, m);
            return !found;
        });
        if (found) return k;
    }
    return r.n;
}

int upper_gamma_value_masks(const Rows& r) {
    for (int s = r.n; s >= 1; --s) {
        bool found = false;
        for_each_dominating_mask(r, s, [&](u64 m) {
            found = minimal_dominating_mask(r, m);
            return !found;
        });
        if (found) return s;
    }
    return 0;  // unreachable
}

int upper_gamma_cer_value_masks(const Rows& r) {
    for (int s = r.n; s >= 1; --s) {
        if (s == r.n - 1) continue;
        bool found = false;
        for_each_dominating_mask(r, s, [&](u64 m) {
            found = minimal_certified_mask(r, m);
            return !found;
        });
        if (found) return s;
    }
    return 0;  // unreachable
}

}  // namespace

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

bool is_dominating(const Graph& g, const VertexSet& d) {
    check_set(g, d);
    VertexSet covered = d;
    for (int v : d) covered |= g.neighbors(v);
    return covered == g.vertices();
}

bool is_certified_dominating(const Graph& g, const VertexSet& d) {
    check_set(g, d);
    if (!is_dominating(g, d)) return false;
    for (int v : d)
        if ((g.neighbors(v) - d).size() == 1) return false;
    return true;
}

bool is_minimal_dominating(const Graph& g, const VertexSet& d) {
    check_set(g, d);
    Rows r(g);
    return minimal_dominating_mask(r, d.bits());
}

bool is_minimal_certified_dominating(const Graph& g, const VertexSet& d) {
    check_set(g, d);
    Rows r(g);
    return minimal_certified_mask(r, d.bits());
}

DeficiencyReport deficiency(const Graph& g, const VertexSet& d) {
    check_set(g, d);
    DeficiencyReport rep{VertexSet(g.order()), VertexSet(g.order())};
    for (int v : d) {
        int outside = (g.neighbors(v) - d).size();
        if (outside == 1) rep.exactly_one.add(v);
        if (outside <= 1) rep.at_most_one.add(v);
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Solvers
// ---------------------------------------------------------------------------

const char* to_string(InvariantKind kind) {
    switch (kind) {
        case InvariantKind::Gamma: return "gamma";
        case InvariantKind::GammaCer: return "gamma_cer";
        case InvariantKind::UpperGamma: return "upper_gamma";
        case InvariantKind::UpperGammaCer: return "upper_gamma_cer";
    }
    return "gamma";
}

InvariantResult gamma(const Graph& g) {
    InvariantResult out = solve_by_components(g, InvariantKind::Gamma,
                                              [](const Rows& r) { return solve_gamma_one(r); });
    out.exhausted_up_to = out.value - 1;
    return out;
}

InvariantResult gamma_cer(const Graph& g) {
    InvariantResult out = solve_by_components(g, InvariantKind::GammaCer,
                                              [](const Rows& r) { return solve_gamma_cer_one(r); });
    out.exhausted_up_to = out.value - 1;
    return out;
}

InvariantResult upper_gamma(const Graph& g) {
    InvariantResult out = solve_by_components(g, InvariantKind::UpperGamma,
                                              [](const Rows& r) { return solve_upper_gamma_one(r); });
    out.minimality_checked = is_minimal_dominating(g, out.witness);
    return out;
}

InvariantResult upper_gamma_cer(const Graph& g) {
    InvariantResult out = solve_by_components(
        g, InvariantKind::UpperGammaCer, [](const Rows& r) { return solve_upper_gamma_cer_one(r); });
    out.minimality_checked = is_minimal_certified_dominating(g, out.witness);
    return out;
}

int gamma_value(const Graph& g) {
    return sum_over_components(g, [](const Rows& r) { return gamma_value_masks(r); });
}

int gamma_cer_value(const Graph& g) {
    return sum_over_components(g, [](const Rows& r) { return gamma_cer_value_masks(r); });
}

int upper_gamma_value(const Graph& g) {
    return sum_over_components(g, [](const Rows& r) { return upper_gamma_value_masks(r); });
}

int upper_gamma_cer_value(const Graph& g) {
    return sum_over_components(g, [](const Rows& r) { return upper_gamma_cer_value_masks(r); });
}

void for_each_dominating_set(const Graph& g, int k,
                             const std::function<bool(const VertexSet&)>& f) {
    Rows r(g);
    for_each_dominating_mask(r, k, [&](u64 m) { return f(VertexSet(g.order(), m)); });
}

std::vector<VertexSet> gamma_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for_each_dominating_set(g, gamma_value(g), [&](const VertexSet& s) {
        out.push_back(s);
        return true;
    });
    return out;
}

bool exists_certified_dominating_of_size(const Graph& g, int k) {
    Rows r(g);
    bool found = false;
    for_each_dominating_mask(r, k, [&](u64 m) {
        found = certified_mask(r, m);
        return !found;
    });
    return found;
}

void enumerate_minimal_sets(const Graph& g, bool certified,
                            const std::function<void(const VertexSet&)>& f) {
    const int n = g.order();
    if (n > 24) throw std::invalid_argument("enumerate_minimal_sets: order above the scan limit of 24");
    Rows r(g);
    const u64 top = u64{1} << n;
    for (u64 mask = 0; mask < top; ++mask) {
        bool keep = certified ? minimal_certified_mask(r, mask) : minimal_dominating_mask(r, mask);
        if (keep) f(VertexSet(n, mask));
    }
}

std::vector<VertexSet> minimal_sets(const Graph& g, bool certified) {
    std::vector<VertexSet> out;
    enumerate_minimal_sets(g, certified, [&](const VertexSet& s) { out.push_back(s); });
    return out;
}

std::optional<VertexSet> gamma_equality_witness(const Graph& g) {
    if (!g.is_connected() || g.order() < 3)
        throw std::invalid_argument("gamma_equality_witness requires a connected graph of order >= 3");
    Rows r(g);
    auto best = lex_min_level_mask(r, gamma_value_masks(r), [&](u64 m) {
        for (u64 it = m; it; it &= it - 1)
            if (std::popcount(r.open[static_cast<std::size_t>(std::countr_zero(it))] & ~m) <= 1)
                return false;
        return true;
    });
    if (!best) return std::nullopt;
    return VertexSet(g.order(), *best);
}

std::optional<VertexSet> unique_gamma_set(const Graph& g) {
    Rows r(g);
    int value = gamma_value_masks(r);
    int seen = 0;
    u64 only = 0;
    for_each_dominating_mask(r, value, [&](u64 m) {
        only = m;
        return ++seen < 2;
    });
    if (seen != 1) return std::nullopt;
    return VertexSet(g.order(), only);
}

std::vector<int> gamma_vertex_deleted_profile(const Graph& g) {
    if (g.order() < 2)
        throw std::invalid_argument("vertex-deleted profile requires order >= 2");
    std::vector<int> out(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        out[static_cast<std::size_t>(v)] = gamma_value(g.without_vertex(v));
    return out;
}

}  // namespace certidom
