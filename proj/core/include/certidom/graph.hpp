#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "certidom/vertex_set.hpp"

namespace certidom {

/// Raised when textual graph input (edge lists, graph6 lines, partition
/// families, family specs) cannot be decoded.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphComponent;

/// Immutable simple undirected graph on vertices 0..order()-1, order <= 64.
/// Adjacency is one VertexSet per vertex (the open neighborhood).
class Graph {
public:
    static constexpr int kMaxOrder = VertexSet::kMaxUniverse;

    /// Builds from a list of unordered pairs; duplicate edges collapse.
    /// Throws std::invalid_argument on loops, out-of-range endpoints, or
    /// order outside [1, kMaxOrder].
    static Graph from_edge_list(int n, std::span<const std::pair<int, int>> edges);
    static Graph from_edge_list(int n, std::initializer_list<std::pair<int, int>> edges);

    /// Builds from raw adjacency rows (rows[v] = open-neighborhood mask).
    /// Throws std::invalid_argument unless the rows are symmetric and loop-free.
    static Graph from_adjacency_rows(const std::vector<std::uint64_t>& rows);

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return m_; }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<std::size_t>(v)];
    }
    VertexSet closed_neighborhood(int v) const {
        VertexSet s = neighbors(v);
        s.add(v);
        return s;
    }
    int degree(int v) const { return neighbors(v).size(); }
    int min_degree() const;
    int max_degree() const;
    bool has_edge(int u, int v) const { return u != v && neighbors(u).contains(v); }

    VertexSet vertices() const { return VertexSet::all(order()); }

    /// Edges as (u, v) with u < v, ascending lexicographic.
    std::vector<std::pair<int, int>> edge_list() const;

    bool is_connected() const;

    /// Connected component containing v, as a vertex set.
    VertexSet component_of(int v) const;

    using Component = GraphComponent;
    /// Components ordered by smallest member.
    std::vector<GraphComponent> components() const;

    /// Induced subgraph on `keep`; vertices renumbered 0..|keep|-1 in
    /// ascending order of their original index (reported via to_parent).
    Graph induced_subgraph(const VertexSet& keep, std::vector<int>* to_parent = nullptr) const;

    /// G - v; remaining vertices keep their relative order.
    Graph without_vertex(int v) const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    Graph(std::vector<VertexSet> adj, int m) : adj_(std::move(adj)), m_(m) {}
    void check_vertex(int v) const {
        if (v < 0 || v >= order()) throw std::out_of_range("vertex index out of range");
    }

    std::vector<VertexSet> adj_;
    int m_ = 0;
};

struct GraphComponent {
    VertexSet vertices;          ///< members in the parent graph
    Graph graph;                 ///< induced subgraph, reindexed 0..k-1
    std::vector<int> to_parent;  ///< new index -> parent index (ascending)
};

/// Plain text format: first line "n m", then m lines "u v" (0-indexed).
/// Tokens may be separated by any whitespace; the literal two-character
/// sequence "\n" is accepted as a separator so edge lists can be passed as
/// single-line command arguments.
Graph parse_edge_list_text(std::string_view text);
std::string to_edge_list_text(const Graph& g);

}  // namespace certidom
