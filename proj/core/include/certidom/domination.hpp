#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "certidom/graph.hpp"

namespace certidom {

// ---------------------------------------------------------------------------
// Predicates
// ---------------------------------------------------------------------------

/// N[D] = V: every vertex outside D has a neighbor in D.
bool is_dominating(const Graph& g, const VertexSet& d);

/// Dominating, and every member has zero or at least two neighbors outside D.
bool is_certified_dominating(const Graph& g, const VertexSet& d);

/// Dominating, and every member keeps a private neighbor (the classical
/// minimality criterion).
bool is_minimal_dominating(const Graph& g, const VertexSet& d);

/// Certified dominating with no certified dominating proper subset. Single
/// deletions are not enough here (certified domination is not monotone), so
/// all proper subsets are scanned, smallest first.
bool is_minimal_certified_dominating(const Graph& g, const VertexSet& d);

/// p(D) = members with exactly one neighbor outside D;
/// q(D) = members with at most one neighbor outside D.
struct DeficiencyReport {
    VertexSet exactly_one;
    VertexSet at_most_one;
};
DeficiencyReport deficiency(const Graph& g, const VertexSet& d);

// ---------------------------------------------------------------------------
// Exact solvers
// ---------------------------------------------------------------------------

enum class InvariantKind { Gamma, GammaCer, UpperGamma, UpperGammaCer };
const char* to_string(InvariantKind kind);

struct InvariantResult {
    InvariantKind kind;
    int value = 0;
    VertexSet witness;  // lexicographically smallest optimal set
    /// Minimum kinds: every size <= exhausted_up_to was shown to admit no
    /// qualifying set. Upper kinds: every size above `value` admits none and
    /// the witness was re-checked against the minimality predicate.
    int exhausted_up_to = -1;
    bool minimality_checked = false;
};

/// Domination number. Value by branch and bound (branch on the undominated
/// vertex with fewest remaining dominators, greedy upper bound, packing lower
/// bound); witness from the enumeration layer. Disconnected graphs are solved
/// per component and summed.
InvariantResult gamma(const Graph& g);

/// Certified domination number: deepen k from gamma(G), skipping k = n-1
/// (no n-1 vertices ever form a certified dominating set).
InvariantResult gamma_cer(const Graph& g);

/// Upper domination number: descending scan for the largest minimal
/// dominating set.
InvariantResult upper_gamma(const Graph& g);

/// Upper certified domination number: descending scan skipping size n-1.
InvariantResult upper_gamma_cer(const Graph& g);

/// Value-only solvers, no witness reconstruction. Same exact algorithms with
/// early exit as soon as a level is known feasible; the sweep engine leans on
/// these when it only needs numbers.
int gamma_value(const Graph& g);
int gamma_cer_value(const Graph& g);
int upper_gamma_value(const Graph& g);
int upper_gamma_cer_value(const Graph& g);

/// Invokes f with every dominating set of exactly k vertices, each exactly
/// once. Return false from f to stop early. Enumeration is search-ordered,
/// not lexicographic.
void for_each_dominating_set(const Graph& g, int k,
                             const std::function<bool(const VertexSet&)>& f);

/// All minimum dominating sets.
std::vector<VertexSet> gamma_sets(const Graph& g);

/// Whether some certified dominating set of exactly k vertices exists.
bool exists_certified_dominating_of_size(const Graph& g, int k);

/// Streams every minimal dominating (certified = false) or minimal certified
/// dominating (certified = true) set once, in ascending bit-mask order, by a
/// full subset scan. Intended for small graphs; throws std::invalid_argument
/// above order 24.
void enumerate_minimal_sets(const Graph& g, bool certified,
                            const std::function<void(const VertexSet&)>& f);
std::vector<VertexSet> minimal_sets(const Graph& g, bool certified);

/// Some gamma-set whose members all have at least two neighbors outside it
/// (lexicographically smallest such), or nullopt. Requires a connected graph
/// of order at least three; throws std::invalid_argument otherwise.
std::optional<VertexSet> gamma_equality_witness(const Graph& g);

/// The unique minimum dominating set when exactly one exists.
std::optional<VertexSet> unique_gamma_set(const Graph& g);

/// gamma(G - v) for every vertex v. Requires order >= 2; throws
/// std::invalid_argument on a single-vertex graph.
std::vector<int> gamma_vertex_deleted_profile(const Graph& g);

}  // namespace certidom
