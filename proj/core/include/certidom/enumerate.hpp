#pragma once

#include <cstdint>
#include <functional>

#include "certidom/graph.hpp"
#include "certidom/rng.hpp"

namespace certidom {

/// Number of vertex pairs, i.e. bits in an edge mask.
inline long long pair_count(int n) { return static_cast<long long>(n) * (n - 1) / 2; }

/// Graph of the given order whose edges are the set bits of `mask`; bit k
/// corresponds to the k-th pair in graph6 order (columns ascending, rows
/// within a column ascending).
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Streams all 2^(n choose 2) labeled graphs of one order in lexicographic
/// edge-mask order, optionally only the connected ones. Return false from f
/// to stop. Throws std::invalid_argument above order 10 (the mask space is
/// astronomically large well before that).
void for_each_labeled_graph(int n, bool connected_only,
                            const std::function<bool(const Graph&, std::uint64_t mask)>& f);

long long labeled_graph_count(int n, bool connected_only);

/// Erdős–Rényi draw: each pair is an edge independently with probability p.
Graph random_graph(int n, double p, Rng& rng);

}  // namespace certidom
