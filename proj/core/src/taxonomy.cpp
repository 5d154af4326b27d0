#include "certidom/taxonomy.hpp"

#include <algorithm>

namespace certidom {

LeafSupportReport leaf_support_report(const Graph& g) {
    const int n = g.order();
    LeafSupportReport r{VertexSet(n), VertexSet(n), VertexSet(n), VertexSet(n)};
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) r.leaves.add(v);
    for (int v = 0; v < n; ++v) {
        int leaf_neighbors = (g.neighbors(v) & r.leaves).size();
        if (leaf_neighbors >= 1) r.supports.add(v);
        if (leaf_neighbors == 1) r.weak_supports.add(v);
        if (leaf_neighbors >= 2) r.strong_supports.add(v);
    }
    return r;
}

VertexSet private_neighborhood(const Graph& g, int v, const VertexSet& within, bool closed) {
    if (within.universe() != g.order())
        throw std::invalid_argument("vertex set universe does not match graph order");
    if (!within.contains(v))
        throw std::invalid_argument("private neighborhood requires v to be a member of the set");
    VertexSet others = within;
    others.remove(v);
    VertexSet covered = others;  // N[others]
    for (int u : others) covered |= g.neighbors(u);
    VertexSet base = closed ? g.closed_neighborhood(v) : g.neighbors(v);
    return base - covered;
}

bool is_p4_free(const Graph& g) {
    const int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d) {
                    VertexSet sub = VertexSet::of(n, {a, b, c, d});
                    int deg_min = 4, deg_max = 0, twice_edges = 0;
                    for (int v : sub) {
                        int deg = (g.neighbors(v) & sub).size();
                        deg_min = std::min(deg_min, deg);
                        deg_max = std::max(deg_max, deg);
                        twice_edges += deg;
                    }
                    // three edges with degrees {1,1,2,2} is exactly an induced P4
                    if (twice_edges == 6 && deg_min == 1 && deg_max == 2) return false;
                }
    return true;
}

const char* to_string(StructureLabel label) {
    switch (label) {
        case StructureLabel::Corona: return "Corona";
        case StructureLabel::SimpleDiadem: return "SimpleDiadem";
        case StructureLabel::Diadem: return "Diadem";
        case StructureLabel::JoinK2: return "JoinK2";
        case StructureLabel::JoinK2bar: return "JoinK2bar";
        case StructureLabel::Other: return "Other";
    }
    return "Other";
}

std::optional<CoronaMatching> corona_matching(const Graph& g) {
    const int n = g.order();
    LeafSupportReport ls = leaf_support_report(g);
    CoronaMatching m;
    for (int v = 0; v < n; ++v) {
        if (ls.leaves.contains(v)) continue;
        VertexSet pendant = g.neighbors(v) & ls.leaves;
        if (pendant.size() != 1) return std::nullopt;
        m.pairs.emplace_back(v, pendant.first());
    }
    // two adjacent leaves form a K2 component; the lower index is the crown
    for (int v : ls.leaves) {
        int s = g.neighbors(v).first();
        if (ls.leaves.contains(s) && v < s) m.pairs.emplace_back(v, s);
    }
    if (2 * m.pairs.size() != static_cast<std::size_t>(n)) return std::nullopt;
    std::sort(m.pairs.begin(), m.pairs.end());
    return m;
}

namespace {

// Remaps a matching computed on G - x back to G's vertex ids.
CoronaMatching unmap_deleted(const CoronaMatching& m, int x) {
    CoronaMatching out;
    out.pairs.reserve(m.pairs.size());
    for (auto [a, b] : m.pairs)
        out.pairs.emplace_back(a >= x ? a + 1 : a, b >= x ? b + 1 : b);
    return out;
}

std::optional<StructureReport> try_diadem_kinds(const Graph& g) {
    const int n = g.order();
    if (n < 2) return std::nullopt;
    // simple diadem: a degree-1 vertex whose removal leaves a corona and whose
    // neighbor is a support of that corona
    for (int x = 0; x < n; ++x) {
        if (g.degree(x) != 1) continue;
        Graph h = g.without_vertex(x);
        auto cm = corona_matching(h);
        if (!cm) continue;
        int s_old = g.neighbors(x).first();
        int s_new = s_old > x ? s_old - 1 : s_old;
        if (leaf_support_report(h).supports.contains(s_new)) {
            StructureReport r;
            r.label = StructureLabel::SimpleDiadem;
            r.added_vertex = x;
            r.corona = unmap_deleted(*cm, x);
            return r;
        }
    }
    // diadem: a degree-2 vertex joined to a leaf of the remaining corona and
    // to that leaf's neighbor
    for (int x = 0; x < n; ++x) {
        if (g.degree(x) != 2) continue;
        Graph h = g.without_vertex(x);
        auto cm = corona_matching(h);
        if (!cm) continue;
        auto nbrs = g.neighbors(x).to_vector();
        int a = nbrs[0] > x ? nbrs[0] - 1 : nbrs[0];
        int b = nbrs[1] > x ? nbrs[1] - 1 : nbrs[1];
        LeafSupportReport ls = leaf_support_report(h);
        bool ok = (ls.leaves.contains(a) && h.neighbors(a).contains(b)) ||
                  (ls.leaves.contains(b) && h.neighbors(b).contains(a));
        if (ok) {
            StructureReport r;
            r.label = StructureLabel::Diadem;
            r.added_vertex = x;
            r.corona = unmap_deleted(*cm, x);
            return r;
        }
    }
    return std::nullopt;
}

std::optional<StructureReport> try_joins(const Graph& g) {
    const int n = g.order();
    if (n < 3) return std::nullopt;
    auto rest_independent = [&](int u, int w) {
        VertexSet rest = g.vertices();
        rest.remove(u);
        rest.remove(w);
        for (int v : rest)
            if ((g.neighbors(v) & rest).size() != 0) return false;
        return true;
    };
    for (bool adjacent_pair : {true, false}) {
        for (int u = 0; u < n; ++u) {
            for (int w = u + 1; w < n; ++w) {
                if (g.has_edge(u, w) != adjacent_pair) continue;
                int want = adjacent_pair ? n - 1 : n - 2;
                if (g.degree(u) != want || g.degree(w) != want) continue;
                VertexSet rest = g.vertices();
                rest.remove(u);
                rest.remove(w);
                if (!rest.subset_of(g.neighbors(u)) || !rest.subset_of(g.neighbors(w))) continue;
                if (!rest_independent(u, w)) continue;
                StructureReport r;
                r.label = adjacent_pair ? StructureLabel::JoinK2 : StructureLabel::JoinK2bar;
                r.join_pair = std::make_pair(u, w);
                return r;
            }
        }
    }
    return std::nullopt;
}

}  // namespace

StructureReport classify_structure(const Graph& g) {
    if (auto cm = corona_matching(g)) {
        StructureReport r;
        r.label = StructureLabel::Corona;
        r.corona = std::move(cm);
        return r;
    }
    if (!g.is_connected()) return StructureReport{};
    if (auto r = try_diadem_kinds(g)) return *r;
    if (auto r = try_joins(g)) return *r;
    return StructureReport{};
}

}  // namespace certidom
