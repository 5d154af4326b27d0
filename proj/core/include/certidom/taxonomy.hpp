#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "certidom/graph.hpp"

namespace certidom {

/// Leaf and support classification. Vertices that are neither leaves nor
/// supports appear in no set. A support with exactly one leaf neighbor is
/// weak, with two or more strong.
struct LeafSupportReport {
    VertexSet leaves;
    VertexSet supports;
    VertexSet weak_supports;
    VertexSet strong_supports;
};

LeafSupportReport leaf_support_report(const Graph& g);

/// Private neighborhood of v with respect to `within` (v must be a member):
/// closed variant  N[v] - N[within - {v}], open variant  N(v) - N[within - {v}].
/// Throws std::invalid_argument when v is not in `within`.
VertexSet private_neighborhood(const Graph& g, int v, const VertexSet& within, bool closed);

/// True when no 4-vertex subset induces a path on four vertices.
bool is_p4_free(const Graph& g);

enum class StructureLabel { Corona, SimpleDiadem, Diadem, JoinK2, JoinK2bar, Other };
const char* to_string(StructureLabel label);

/// Pairing between crown vertices and their pendant leaves that exhibits a
/// corona: every vertex of the graph occurs in exactly one pair. For a
/// two-leaf (K2) component the lower-numbered vertex plays the crown role.
struct CoronaMatching {
    std::vector<std::pair<int, int>> pairs;  // (crown vertex, pendant leaf)
};

/// The pairing when the graph is a corona (each vertex is a leaf or adjacent
/// to exactly one leaf), otherwise nullopt. Valid for disconnected graphs.
std::optional<CoronaMatching> corona_matching(const Graph& g);

struct StructureReport {
    StructureLabel label = StructureLabel::Other;
    /// Corona: the pairing for the whole graph.
    /// Diadem kinds: the pairing of G - added_vertex, in original vertex ids.
    std::optional<CoronaMatching> corona;
    std::optional<int> added_vertex;                  // diadem kinds
    std::optional<std::pair<int, int>> join_pair;     // join kinds: the two cover vertices
};

/// Labels the graph by the first matching shape, in the precedence
/// Corona > SimpleDiadem > Diadem > JoinK2 > JoinK2bar > Other.
/// The corona test applies to any graph; the diadem and join tests require a
/// connected graph and otherwise fall through to Other.
StructureReport classify_structure(const Graph& g);

}  // namespace certidom
