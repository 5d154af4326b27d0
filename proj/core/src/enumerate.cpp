#include "certidom/enumerate.hpp"

#include <vector>

namespace certidom {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
    std::vector<std::uint64_t> rows(static_cast<std::size_t>(n), 0);
    int bit = 0;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row, ++bit)
            if ((mask >> bit) & 1u) {
                rows[static_cast<std::size_t>(row)] |= std::uint64_t{1} << col;
                rows[static_cast<std::size_t>(col)] |= std::uint64_t{1} << row;
            }
    return Graph::from_adjacency_rows(rows);
}

void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<bool(const Graph&, std::uint64_t)>& f) {
    if (n < 1 || n > 10)
        throw std::invalid_argument("labeled enumeration supports orders 1..10");
    const std::uint64_t top = std::uint64_t{1} << pair_count(n);
    for (std::uint64_t mask = 0; mask < top; ++mask) {
        Graph g = graph_from_edge_mask(n, mask);
        if (connected_only && !g.is_connected()) continue;
        if (!f(g, mask)) return;
    }
}

long long labeled_graph_count(int n, bool connected_only) {
    long long count = 0;
    for_each_labeled_graph(n, connected_only, [&](const Graph&, std::uint64_t) {
        ++count;
        return true;
    });
    return count;
}

Graph random_graph(int n, double p, Rng& rng) {
    std::uint64_t mask = 0;
    for (long long bit = 0; bit < pair_count(n); ++bit)
        if (rng.chance(p)) mask |= std::uint64_t{1} << bit;
    return graph_from_edge_mask(n, mask);
}

}  // namespace certidom
