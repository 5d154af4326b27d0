#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "certidom/graph.hpp"
#include "certidom/rng.hpp"

namespace certidom {

/// Per-vertex partition of each open neighborhood: blocks[v] is a list of
/// disjoint non-empty vertex sets whose union is N(v); isolated vertices get
/// an empty block list.
struct PartitionFamily {
    std::vector<std::vector<VertexSet>> blocks;

    /// The one-block family {N(v)}.
    static PartitionFamily trivial(const Graph& g);
    /// The all-singletons family.
    static PartitionFamily singletons(const Graph& g);

    int block_count(int v) const { return static_cast<int>(blocks[static_cast<std::size_t>(v)].size()); }
    int total_blocks() const;
    bool operator==(const PartitionFamily&) const = default;
};

struct FamilyValidation {
    bool ok = true;
    int vertex = -1;       // first violating vertex
    std::string reason;    // overlap / missing element / foreign element / empty block
};
FamilyValidation validate_partition_family(const Graph& g, const PartitionFamily& p);

/// Vertex role in a P-corona: either a base vertex (v,1) or the vertex added
/// for one block A of the partition of N(v). corona_k1 attaches a pendant to
/// isolated base vertices too; those pendants carry an empty block.
struct PCoronaLabel {
    int base = 0;
    bool is_base = false;
    VertexSet block;  // over the base graph's vertices; meaningful when !is_base
};
std::string to_string(const PCoronaLabel& label);

struct PCoronaGraph {
    Graph graph;
    std::vector<PCoronaLabel> labels;  // labels[i] describes vertex i
    int base_order = 0;
};

/// The P-corona: base vertices keep indices 0..n-1; block vertices follow,
/// grouped by base vertex in ascending order and, within one vertex, in the
/// family's stated block order. Edges are the spokes (v,1)-(v,A) plus one
/// cross edge (v,A)-(u,B) per base edge uv with u in A and v in B.
/// Throws std::invalid_argument when the family does not validate.
PCoronaGraph p_corona(const Graph& g, const PartitionFamily& p);

/// The corona G∘K1: the trivial-family P-corona, except that isolated base
/// vertices also receive a pendant leaf (one new vertex per base vertex, the
/// pendant of v sitting at index n+v).
PCoronaGraph corona_k1(const Graph& g);

/// The 2-subdivision: the all-singletons P-corona; every edge uv becomes the
/// path u, (u,{v}), (v,{u}), v.
PCoronaGraph two_subdivision(const Graph& g);

/// Whether `fine` refines `coarse`: every block of fine(v) is contained in
/// some block of coarse(v). Reflexive. Throws std::invalid_argument when the
/// two families live on different vertex counts or fail validation against
/// that count's universes.
bool is_refinement(const PartitionFamily& fine, const PartitionFamily& coarse);

/// Right-hand side of the equality characterization: the vertices with at
/// least two blocks form a dominating set of G.
bool equality_predicate(const Graph& g, const PartitionFamily& p);

struct MaximalFamilyCertificate {
    bool maximal = false;
    VertexSet two_block_vertices;   // D = {v : |P(v)| = 2}
    bool d_is_minimal_dominating = false;
    int violating_vertex = -1;      // first vertex with more than two blocks, if any
};
/// Maximality with respect to the equality gamma = gamma_cer of the P-corona:
/// every vertex has at most two blocks and D = {v : |P(v)| = 2} is a minimal
/// dominating set. Throws std::invalid_argument on an invalid family.
MaximalFamilyCertificate is_maximal_family(const Graph& g, const PartitionFamily& p);

/// Text format, one line per vertex: "v: {a,b}|{c}"; a bare "v:" line for an
/// isolated vertex. Every vertex must appear exactly once.
PartitionFamily parse_partition_family(const Graph& g, std::string_view text);
std::string to_text(const PartitionFamily& p);

/// Uniformly random partition of each neighborhood, drawn by indexing the
/// restricted-growth strings of each N(v).
PartitionFamily random_partition_family(const Graph& g, Rng& rng);

/// Uniformly random refinement: each block is independently re-partitioned.
PartitionFamily random_refinement(const Graph& g, const PartitionFamily& p, Rng& rng);

/// Every family of partitions of the neighborhoods of g (Bell-number product;
/// keep to small graphs).
void for_each_partition_family(const Graph& g, const std::function<void(const PartitionFamily&)>& f);

/// Every family strictly coarser than p (obtained by merging blocks, not
/// equal to p itself).
void for_each_proper_coarsening(const Graph& g, const PartitionFamily& p,
                                const std::function<void(const PartitionFamily&)>& f);

}  // namespace certidom
