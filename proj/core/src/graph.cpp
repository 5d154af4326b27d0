#include "certidom/graph.hpp"

#include <algorithm>
#include <sstream>

namespace certidom {

namespace {

std::vector<VertexSet> empty_rows(int n) {
    if (n < 1 || n > Graph::kMaxOrder)
        throw std::invalid_argument("graph order must be in [1, 64], got " + std::to_string(n));
    return std::vector<VertexSet>(static_cast<std::size_t>(n), VertexSet(n));
}

}  // namespace

Graph Graph::from_edge_list(int n, std::span<const std::pair<int, int>> edges) {
    std::vector<VertexSet> adj = empty_rows(n);
    int m = 0;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
        if (!adj[static_cast<std::size_t>(u)].contains(v)) {
            adj[static_cast<std::size_t>(u)].add(v);
            adj[static_cast<std::size_t>(v)].add(u);
            ++m;
        }
    }
    return Graph(std::move(adj), m);
}

Graph Graph::from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges) {
    return from_edge_list(n, std::span<const std::pair<int, int>>(edges.begin(), edges.size()));
}

Graph Graph::from_adjacency_rows(const std::vector<std::uint64_t>& rows) {
    const int n = static_cast<int>(rows.size());
    std::vector<VertexSet> adj = empty_rows(n);
    int twice_m = 0;
    for (int v = 0; v < n; ++v) {
        std::uint64_t row = rows[static_cast<std::size_t>(v)];
        if (n < 64 && (row >> n) != 0)
            throw std::invalid_argument("adjacency row has bits outside the vertex range");
        if ((row >> v) & 1u)
            throw std::invalid_argument("loop edge at vertex " + std::to_string(v));
        adj[static_cast<std::size_t>(v)] = VertexSet(n, row);
        twice_m += std::popcount(row);
    }
    for (int v = 0; v < n; ++v)
        for (int u : adj[static_cast<std::size_t>(v)])
            if (!adj[static_cast<std::size_t>(u)].contains(v))
                throw std::invalid_argument("adjacency rows are not symmetric");
    return Graph(std::move(adj), twice_m / 2);
}

int Graph::min_degree() const {
    int best = kMaxOrder + 1;
    for (const VertexSet& row : adj_) best = std::min(best, row.size());
    return best;
}

int Graph::max_degree() const {
    int best = 0;
    for (const VertexSet& row : adj_) best = std::max(best, row.size());
    return best;
}

std::vector<std::pair<int, int>> Graph::edge_list() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[static_cast<std::size_t>(u)])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::component_of(int v) const {
    check_vertex(v);
    VertexSet seen(order());
    seen.add(v);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(order());
        for (int u : frontier) next |= neighbors(u);
        frontier = next - seen;
        seen |= frontier;
    }
    return seen;
}

bool Graph::is_connected() const {
    return component_of(0).size() == order();
}

std::vector<Graph::Component> Graph::components() const {
    std::vector<Component> out;
    VertexSet remaining = vertices();
    while (!remaining.empty()) {
        VertexSet comp = component_of(remaining.first());
        std::vector<int> to_parent;
        Graph sub = induced_subgraph(comp, &to_parent);
        out.push_back(Component{comp, std::move(sub), std::move(to_parent)});
        remaining -= comp;
    }
    return out;
}

Graph Graph::induced_subgraph(const VertexSet& keep, std::vector<int>* to_parent) const {
    if (keep.universe() != order())
        throw std::invalid_argument("vertex set universe does not match graph order");
    if (keep.empty())
        throw std::invalid_argument("induced subgraph needs at least one vertex");
    std::vector<int> old_ids = keep.to_vector();
    const int k = static_cast<int>(old_ids.size());
    std::vector<VertexSet> adj(static_cast<std::size_t>(k), VertexSet(k));
    int twice_m = 0;
    for (int i = 0; i < k; ++i) {
        VertexSet row = neighbors(old_ids[static_cast<std::size_t>(i)]) & keep;
        for (int old_u : row) {
            int j = static_cast<int>(std::lower_bound(old_ids.begin(), old_ids.end(), old_u) -
                                     old_ids.begin());
            adj[static_cast<std::size_t>(i)].add(j);
        }
        twice_m += adj[static_cast<std::size_t>(i)].size();
    }
    if (to_parent) *to_parent = std::move(old_ids);
    return Graph(std::move(adj), twice_m / 2);
}

Graph Graph::without_vertex(int v) const {
    check_vertex(v);
    if (order() < 2)
        throw std::invalid_argument("cannot delete the only vertex");
    VertexSet keep = vertices();
    keep.remove(v);
    return induced_subgraph(keep);
}

Graph parse_edge_list_text(std::string_view text) {
    std::string cleaned;
    cleaned.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '\\' && i + 1 < text.size() && text[i + 1] == 'n') {
            cleaned += ' ';
            ++i;
        } else {
            cleaned += text[i];
        }
    }
    std::istringstream in(cleaned);
    long long n = 0, m = 0;
    if (!(in >> n >> m)) throw ParseError("edge list: expected header \"n m\"");
    if (n < 1 || n > Graph::kMaxOrder)
        throw ParseError("edge list: order " + std::to_string(n) + " out of range [1, 64]");
    if (m < 0) throw ParseError("edge list: negative edge count");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i) {
        long long u = 0, v = 0;
        if (!(in >> u >> v))
            throw ParseError("edge list: expected " + std::to_string(m) + " edges, got " +
                             std::to_string(i));
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
    }
    std::string extra;
    if (in >> extra) throw ParseError("edge list: trailing input \"" + extra + "\"");
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("edge list: ") + e.what());
    }
}

std::string to_edge_list_text(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.edge_count()) + "\n";
    for (auto [u, v] : g.edge_list())
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    return out;
}

}  // namespace certidom
