#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "certidom/domination.hpp"
#include "certidom/graph.hpp"
#include "certidom/rng.hpp"
#include "certidom/taxonomy.hpp"

namespace certidom {

/// Knobs shared by the registered checks.
struct HarnessConfig {
    std::uint64_t seed = kDefaultSeed;
    /// Partition families drawn per graph by the sampled construction checks.
    int family_samples = 3;
    /// Scope caps for the construction-based checks (the constructions blow
    /// the order up, so their base graphs stay small).
    int pcorona_base_max = 5;
    int maximal_base_max = 4;
    int maximal_max_degree = 3;
    int corona_strict_base_max = 5;
    int subdivision_base_max = 6;
    /// Lifts the per-theorem order caps that keep sweep costs predictable.
    bool force = false;
};

/// Lazily memoized per-graph facts, shared by every check run on one graph.
class GraphFacts {
public:
    explicit GraphFacts(const Graph& g) : g_(g) {}
    const Graph& graph() const { return g_; }

    bool connected();
    int min_degree();
    int gamma();
    int gamma_cer();
    int upper_gamma();
    int upper_gamma_cer();
    int beta0();
    bool p4_free();
    const LeafSupportReport& leaf_support();
    const StructureReport& structure();

    const std::vector<VertexSet>& gamma_set_list();
    const std::vector<VertexSet>& upper_gamma_set_list();
    /// Number of gamma-sets, counted up to the cap (cheaper than the list).
    int gamma_set_count_capped(int cap);
    /// Some gamma-set has every member with two or more neighbors outside it.
    bool has_gamma_set_with_empty_q();
    /// gamma(G - v), memoized per vertex.
    int gamma_without(int v);

    /// Stable fingerprint of the adjacency structure, used to derive
    /// per-graph sampling seeds independent of sweep partitioning.
    std::uint64_t fingerprint();

private:
    const Graph& g_;
    std::optional<bool> connected_;
    std::optional<int> min_degree_, gamma_, gamma_cer_, upper_gamma_, upper_gamma_cer_, beta0_;
    std::optional<bool> p4_free_, empty_q_;
    std::optional<LeafSupportReport> leaf_support_;
    std::optional<StructureReport> structure_;
    std::optional<std::vector<VertexSet>> gamma_sets_, upper_gamma_sets_;
    std::map<int, int> gamma_without_;
    std::optional<std::uint64_t> fingerprint_;
};

enum class CheckOutcome { Pass, Fail, Skipped };
const char* to_string(CheckOutcome outcome);

struct CheckResult {
    CheckOutcome outcome = CheckOutcome::Skipped;
    std::string detail;  // computed values, "key=value" pairs
};

struct TheoremCheck {
    std::string id;
    enum class Kind { Implication, Biconditional, Invariant } kind;
    std::string statement;  // registry documentation, including reading notes
    /// Graphs above this order are skipped unless HarnessConfig::force; keeps
    /// sweep costs predictable on arbitrary graph6 input.
    int order_cap;
    std::function<bool(GraphFacts&, const HarnessConfig&)> in_scope;
    std::function<CheckResult(GraphFacts&, const HarnessConfig&)> run;
};

/// All registered checks, in report order.
const std::vector<TheoremCheck>& theorem_registry();
std::vector<std::string> theorem_ids();
const TheoremCheck* find_theorem(std::string_view id);

/// Scope-aware single evaluation. Throws std::invalid_argument for an
/// unknown id.
CheckResult check_theorem(std::string_view id, const Graph& g, const HarnessConfig& cfg);
CheckResult run_check(const TheoremCheck& check, GraphFacts& facts, const HarnessConfig& cfg);

}  // namespace certidom
