#include "certidom/theorems.hpp"

#include <algorithm>

#include "certidom/corona.hpp"
#include "certidom/independence.hpp"

namespace certidom {

namespace {

bool set_independent(const Graph& g, const VertexSet& s) {
    for (int v : s)
        if (g.neighbors(v).intersects(s)) return false;
    return true;
}

std::string kv(std::string_view key, int value) {
    return std::string(key) + "=" + std::to_string(value);
}
std::string kv(std::string_view key, bool value) {
    return std::string(key) + "=" + (value ? "yes" : "no");
}
std::string kv(std::string_view key, const VertexSet& value) {
    return std::string(key) + "=" + value.to_string();
}

CheckResult pass(std::string detail) { return {CheckOutcome::Pass, std::move(detail)}; }
CheckResult fail(std::string detail) { return {CheckOutcome::Fail, std::move(detail)}; }

CheckResult verdict(bool ok, std::string detail) {
    return ok ? pass(std::move(detail)) : fail(std::move(detail));
}

/// Every vertex is isolated, a leaf, or adjacent to exactly one leaf; this is
/// exactly "every non-trivial component is a corona".
bool nontrivial_components_are_coronas(GraphFacts& f) {
    const Graph& g = f.graph();
    const VertexSet& leaves = f.leaf_support().leaves;
    for (int v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) continue;
        if (leaves.contains(v)) continue;
        if ((g.neighbors(v) & leaves).size() != 1) return false;
    }
    return true;
}

Rng check_rng(GraphFacts& f, const HarnessConfig& cfg, std::string_view id) {
    return Rng(mix_seed(cfg.seed, id, f.fingerprint()));
}

// ---------------------------------------------------------------------------
// Individual checks
// ---------------------------------------------------------------------------

CheckResult check_thm_2_1(GraphFacts& f, const HarnessConfig&) {
    bool equal = f.gamma() == f.gamma_cer();
    bool witnessed = f.has_gamma_set_with_empty_q();
    std::string detail = kv("gamma", f.gamma()) + " " + kv("gamma_cer", f.gamma_cer()) + " " +
                         kv("q_empty_gamma_set", witnessed);
    return verdict(equal == witnessed, std::move(detail));
}

CheckResult check_cor_2_2(GraphFacts& f, const HarnessConfig&) {
    const Graph& g = f.graph();
    const VertexSet& leaves = f.leaf_support().leaves;
    bool hyp = false;
    for (const VertexSet& s : f.gamma_set_list())
        if (!s.intersects(leaves) && set_independent(g, s)) {
            hyp = true;
            break;
        }
    std::string detail = kv("independent_leaf_free_gamma_set", hyp) + " " +
                         kv("gamma", f.gamma()) + " " + kv("gamma_cer", f.gamma_cer());
    if (!hyp) return pass(std::move(detail));
    return verdict(f.gamma() == f.gamma_cer(), std::move(detail));
}

CheckResult check_cor_2_3(GraphFacts& f, const HarnessConfig&) {
    bool part1 = f.has_gamma_set_with_empty_q();
    bool part2 = f.gamma() == f.gamma_cer();
    std::string detail = kv("q_empty_gamma_set", part1) + " " + kv("gamma", f.gamma()) + " " +
                         kv("gamma_cer", f.gamma_cer());
    return verdict(part1 && part2, std::move(detail));
}

CheckResult check_cor_2_4(GraphFacts& f, const HarnessConfig&) {
    bool unique = f.gamma_set_count_capped(2) == 1;
    std::string detail = kv("unique_gamma_set", unique) + " " + kv("gamma", f.gamma()) + " " +
                         kv("gamma_cer", f.gamma_cer());
    if (!unique) return pass(std::move(detail));
    return verdict(f.gamma() == f.gamma_cer(), std::move(detail));
}

CheckResult check_cor_2_5(GraphFacts& f, const HarnessConfig&) {
    bool hyp = false;
    for (const VertexSet& s : f.gamma_set_list()) {
        bool all_grow = true;
        for (int v : s)
            if (f.gamma_without(v) <= f.gamma()) {
                all_grow = false;
                break;
            }
        if (all_grow) {
            hyp = true;
            break;
        }
    }
    std::string detail = kv("gamma_set_with_all_deletions_growing", hyp) + " " +
                         kv("gamma", f.gamma()) + " " + kv("gamma_cer", f.gamma_cer());
    if (!hyp) return pass(std::move(detail));
    return verdict(f.gamma() == f.gamma_cer(), std::move(detail));
}

CheckResult check_thm_2_6(GraphFacts& f, const HarnessConfig&) {
    VertexSet in_any(f.graph().order());
    for (const VertexSet& s : f.gamma_set_list()) in_any |= s;
    bool hyp = true;
    for (int v : in_any)
        if (f.gamma_without(v) < f.gamma()) {
            hyp = false;
            break;
        }
    std::string detail = kv("deleted_gamma_never_drops", hyp) + " " + kv("gamma", f.gamma()) +
                         " " + kv("gamma_cer", f.gamma_cer());
    if (!hyp) return pass(std::move(detail));
    return verdict(f.gamma() == f.gamma_cer(), std::move(detail));
}

CheckResult check_thm_2_7(GraphFacts& f, const HarnessConfig&) {
    std::string detail = kv("p4_free", f.p4_free()) + " " + kv("gamma", f.gamma()) + " " +
                         kv("gamma_cer", f.gamma_cer());
    if (!f.p4_free()) return pass(std::move(detail));
    return verdict(f.gamma() == f.gamma_cer(), std::move(detail));
}

CheckResult check_cor_2_8(GraphFacts& f, const HarnessConfig&) {
    const Graph& g = f.graph();
    const int n = g.order();
    bool perfect = true;
    VertexSet bad(n);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n) && perfect; ++mask) {
        VertexSet sub(n, mask);
        Graph h = g.induced_subgraph(sub);
        if (h.order() == 2 && h.edge_count() == 1) continue;  // H = K2 is exempt
        if (!h.is_connected()) continue;
        if (gamma_value(h) != gamma_cer_value(h)) {
            perfect = false;
            bad = sub;
        }
    }
    std::string detail = kv("gamma_gamma_cer_perfect", perfect) + " " + kv("p4_free", f.p4_free());
    if (!perfect) detail += " " + kv("violating_subgraph", bad);
    return verdict(perfect == f.p4_free(), std::move(detail));
}

CheckResult check_lem_2_9(GraphFacts& f, const HarnessConfig&) {
    const Graph& g = f.graph();
    const LeafSupportReport& ls = f.leaf_support();
    bool equal = f.gamma() == f.gamma_cer();
    bool ok = true;
    VertexSet bad(g.order());
    for_each_dominating_set(g, f.gamma_cer(), [&](const VertexSet& d) {
        if (!is_certified_dominating(g, d)) return true;
        if (equal && (d.intersects(ls.leaves) || !ls.supports.subset_of(d))) {
            ok = false;
            bad = d;
            return false;
        }
        return true;
    });
    std::string detail = kv("gamma", f.gamma()) + " " + kv("gamma_cer", f.gamma_cer());
    if (!ok) detail += " " + kv("offending_gamma_cer_set", bad);
    return verdict(ok, std::move(detail));
}

CheckResult check_lem_2_10(GraphFacts& f, const HarnessConfig& cfg) {
    const Graph& g = f.graph();
    Rng rng = check_rng(f, cfg, "lem-2.10");
    for (int i = 0; i < cfg.family_samples; ++i) {
        PartitionFamily p = random_partition_family(g, rng);
        int got = gamma_value(p_corona(g, p).graph);
        if (got != g.order())
            return fail(kv("sample", i) + " " + kv("gamma_of_p_corona", got) + " " +
                        kv("base_order", g.order()));
    }
    return pass(kv("samples", cfg.family_samples));
}

CheckResult check_thm_2_11(GraphFacts& f, const HarnessConfig& cfg) {
    const Graph& g = f.graph();
    Rng rng = check_rng(f, cfg, "thm-2.11");
    for (int i = 0; i < cfg.family_samples; ++i) {
        PartitionFamily p = random_partition_family(g, rng);
        bool lhs = equality_predicate(g, p);
        Graph pc = p_corona(g, p).graph;
        bool rhs = exists_certified_dominating_of_size(pc, gamma_value(pc));
        if (lhs != rhs)
            return fail(kv("sample", i) + " " + kv("two_block_set_dominates", lhs) + " " +
                        kv("corona_gamma_equals_gamma_cer", rhs));
    }
    return pass(kv("samples", cfg.family_samples));
}

CheckResult check_refinement_monotonicity(GraphFacts& f, const HarnessConfig& cfg) {
    const Graph& g = f.graph();
    Rng rng = check_rng(f, cfg, "refinement-monotonicity");
    int exercised = 0;
    for (int i = 0; i < cfg.family_samples; ++i) {
        PartitionFamily p = random_partition_family(g, rng);
        if (!equality_predicate(g, p)) continue;
        PartitionFamily finer = random_refinement(g, p, rng);
        if (!is_refinement(finer, p))
            return fail(kv("sample", i) + " refinement_constructor_broken=yes");
        ++exercised;
        if (!equality_predicate(g, finer))
            return fail(kv("sample", i) + " refined_family_lost_equality=yes");
        Graph pc = p_corona(g, finer).graph;
        if (!exists_certified_dominating_of_size(pc, gamma_value(pc)))
            return fail(kv("sample", i) + " refined_corona_gamma_gap=yes");
    }
    return pass(kv("samples_with_equality", exercised));
}

CheckResult check_cor_corona_strict(GraphFacts& f, const HarnessConfig&) {
    const Graph& g = f.graph();
    Graph c = corona_k1(g).graph;
    int gamma_c = gamma_value(c);
    bool strict = !exists_certified_dominating_of_size(c, gamma_c);
    return verdict(strict, kv("gamma_of_corona", gamma_c) + " " + kv("strictly_below_gamma_cer", strict));
}

CheckResult check_cor_2subdivision(GraphFacts& f, const HarnessConfig&) {
    const Graph& g = f.graph();
    Graph s = two_subdivision(g).graph;
    int gamma_s = gamma_value(s);
    bool equal = exists_certified_dominating_of_size(s, gamma_s);
    return verdict(equal, kv("gamma_of_subdivision", gamma_s) + " " + kv("gamma_equals_gamma_cer", equal));
}

CheckResult check_thm_maximal_family(GraphFacts& f, const HarnessConfig&) {
    const Graph& g = f.graph();
    CheckResult result = pass("all families agree");
    long families = 0;
    for_each_partition_family(g, [&](const PartitionFamily& p) {
        if (result.outcome == CheckOutcome::Fail) return;
        ++families;
        bool lhs = is_maximal_family(g, p).maximal;
        bool equality = equality_predicate(g, p);
        bool coarser_equality = false;
        for_each_proper_coarsening(g, p, [&](const PartitionFamily& q) {
            if (!coarser_equality && equality_predicate(g, q)) coarser_equality = true;
        });
        bool rhs = equality && !coarser_equality;
        if (lhs != rhs)
            result = fail(kv("family_is_maximal", lhs) + " " + kv("equality", equality) + " " +
                          kv("some_coarsening_keeps_equality", coarser_equality) + " family=" +
                          to_text(p));
    });
    if (result.outcome == CheckOutcome::Pass)
        result.detail = kv("families", static_cast<int>(families));
    return result;
}

CheckResult check_lem_3_1(GraphFacts& f, const HarnessConfig&) {
    const Graph& g = f.graph();
    const LeafSupportReport& ls = f.leaf_support();
    VertexSet allowed = ls.leaves | ls.weak_supports;
    CheckResult result = pass("");
    int sets = 0;
    enumerate_minimal_sets(g, /*certified=*/true, [&](const VertexSet& d) {
        if (result.outcome == CheckOutcome::Fail) return;
        ++sets;
        VertexSet enclosed(g.order());
        for (int v : d)
            if (g.closed_neighborhood(v).subset_of(d)) enclosed.add(v);
        if (!enclosed.subset_of(allowed)) {
            result = fail(kv("set", d) + " " + kv("enclosed", enclosed) +
                          " enclosed_outside_leaves_and_weak_supports=yes");
            return;
        }
        if (!enclosed.empty() && !corona_matching(g.induced_subgraph(enclosed))) {
            result = fail(kv("set", d) + " " + kv("enclosed", enclosed) +
                          " enclosed_induces_corona=no");
        }
    });
    if (result.outcome == CheckOutcome::Pass) result.detail = kv("minimal_certified_sets", sets);
    return result;
}

CheckResult check_thm_3_2(GraphFacts& f, const HarnessConfig&) {
    const int n = f.graph().order();
    bool coronas = nontrivial_components_are_coronas(f);
    bool cer_full = f.gamma_cer() == n;
    bool upper_full = f.upper_gamma_cer() == n;
    std::string detail = kv("nontrivial_components_are_coronas", coronas) + " " +
                         kv("gamma_cer", f.gamma_cer()) + " " +
                         kv("upper_gamma_cer", f.upper_gamma_cer()) + " " + kv("order", n);
    return verdict(coronas == cer_full && cer_full == upper_full, std::move(detail));
}

CheckResult check_thm_3_3(GraphFacts& f, const HarnessConfig&) {
    const int n = f.graph().order();
    bool lhs = f.upper_gamma_cer() == n - 2;
    StructureLabel label = f.structure().label;
    bool rhs = label == StructureLabel::SimpleDiadem || label == StructureLabel::Diadem ||
               label == StructureLabel::JoinK2 || label == StructureLabel::JoinK2bar;
    std::string detail = kv("upper_gamma_cer", f.upper_gamma_cer()) + " " + kv("order", n) +
                         " label=" + to_string(label);
    return verdict(lhs == rhs, std::move(detail));
}

CheckResult check_gap_law(GraphFacts& f, const HarnessConfig&) {
    const int n = f.graph().order();
    int value = f.upper_gamma_cer();
    return verdict(value == n || value <= n - 2,
                   kv("upper_gamma_cer", value) + " " + kv("order", n));
}

CheckResult check_lem_3_4(GraphFacts& f, const HarnessConfig&) {
    return verdict(f.upper_gamma_cer() <= f.upper_gamma(),
                   kv("upper_gamma", f.upper_gamma()) + " " +
                       kv("upper_gamma_cer", f.upper_gamma_cer()));
}

CheckResult check_thm_3_5(GraphFacts& f, const HarnessConfig&) {
    const Graph& g = f.graph();
    bool hyp = false;
    for (const VertexSet& s : f.upper_gamma_set_list())
        if (set_independent(g, s)) {
            hyp = true;
            break;
        }
    std::string detail = kv("independent_upper_gamma_set", hyp) + " " +
                         kv("upper_gamma", f.upper_gamma()) + " " +
                         kv("upper_gamma_cer", f.upper_gamma_cer());
    if (!hyp) return pass(std::move(detail));
    return verdict(f.upper_gamma() == f.upper_gamma_cer(), std::move(detail));
}

CheckResult check_cor_3_6(GraphFacts& f, const HarnessConfig&) {
    bool hyp = f.beta0() == f.upper_gamma();
    std::string detail = kv("beta0", f.beta0()) + " " + kv("upper_gamma", f.upper_gamma()) + " " +
                         kv("upper_gamma_cer", f.upper_gamma_cer());
    if (!hyp) return pass(std::move(detail));
    return verdict(f.upper_gamma() == f.upper_gamma_cer(), std::move(detail));
}

}  // namespace

// ---------------------------------------------------------------------------
// GraphFacts
// ---------------------------------------------------------------------------

bool GraphFacts::connected() {
    if (!connected_) connected_ = g_.is_connected();
    return *connected_;
}
int GraphFacts::min_degree() {
    if (!min_degree_) min_degree_ = g_.min_degree();
    return *min_degree_;
}
int GraphFacts::gamma() {
    if (!gamma_) gamma_ = gamma_value(g_);
    return *gamma_;
}
int GraphFacts::gamma_cer() {
    if (!gamma_cer_) gamma_cer_ = gamma_cer_value(g_);
    return *gamma_cer_;
}
int GraphFacts::upper_gamma() {
    if (!upper_gamma_) upper_gamma_ = upper_gamma_value(g_);
    return *upper_gamma_;
}
int GraphFacts::upper_gamma_cer() {
    if (!upper_gamma_cer_) upper_gamma_cer_ = upper_gamma_cer_value(g_);
    return *upper_gamma_cer_;
}
int GraphFacts::beta0() {
    if (!beta0_) beta0_ = max_independent_set_size(g_);
    return *beta0_;
}
bool GraphFacts::p4_free() {
    if (!p4_free_) p4_free_ = is_p4_free(g_);
    return *p4_free_;
}
const LeafSupportReport& GraphFacts::leaf_support() {
    if (!leaf_support_) leaf_support_ = leaf_support_report(g_);
    return *leaf_support_;
}
const StructureReport& GraphFacts::structure() {
    if (!structure_) structure_ = classify_structure(g_);
    return *structure_;
}
const std::vector<VertexSet>& GraphFacts::gamma_set_list() {
    if (!gamma_sets_) {
        std::vector<VertexSet> sets;
        for_each_dominating_set(g_, gamma(), [&](const VertexSet& s) {
            sets.push_back(s);
            return true;
        });
        gamma_sets_ = std::move(sets);
    }
    return *gamma_sets_;
}
const std::vector<VertexSet>& GraphFacts::upper_gamma_set_list() {
    if (!upper_gamma_sets_) {
        std::vector<VertexSet> sets;
        for_each_dominating_set(g_, upper_gamma(), [&](const VertexSet& s) {
            if (is_minimal_dominating(g_, s)) sets.push_back(s);
            return true;
        });
        upper_gamma_sets_ = std::move(sets);
    }
    return *upper_gamma_sets_;
}
int GraphFacts::gamma_set_count_capped(int cap) {
    if (gamma_sets_) return std::min<int>(cap, static_cast<int>(gamma_sets_->size()));
    int count = 0;
    for_each_dominating_set(g_, gamma(), [&](const VertexSet&) { return ++count < cap; });
    return count;
}
bool GraphFacts::has_gamma_set_with_empty_q() {
    if (!empty_q_) {
        bool found = false;
        for_each_dominating_set(g_, gamma(), [&](const VertexSet& s) {
            bool all_two = true;
            for (int v : s)
                if ((g_.neighbors(v) - s).size() < 2) {
                    all_two = false;
                    break;
                }
            found = all_two;
            return !found;
        });
        empty_q_ = found;
    }
    return *empty_q_;
}
int GraphFacts::gamma_without(int v) {
    auto it = gamma_without_.find(v);
    if (it != gamma_without_.end()) return it->second;
    int value = gamma_value(g_.without_vertex(v));
    gamma_without_.emplace(v, value);
    return value;
}
std::uint64_t GraphFacts::fingerprint() {
    if (!fingerprint_) {
        std::uint64_t h = mix_seed(0x9e3779b97f4a7c15ull, "graph", static_cast<std::uint64_t>(g_.order()));
        for (int v = 0; v < g_.order(); ++v) h = mix_seed(h, "row", g_.neighbors(v).bits());
        fingerprint_ = h;
    }
    return *fingerprint_;
}

// ---------------------------------------------------------------------------
// Registry
// ---------------------------------------------------------------------------

const char* to_string(CheckOutcome outcome) {
    switch (outcome) {
        case CheckOutcome::Pass: return "pass";
        case CheckOutcome::Fail: return "fail";
        case CheckOutcome::Skipped: return "skipped";
    }
    return "skipped";
}

const std::vector<TheoremCheck>& theorem_registry() {
    using Kind = TheoremCheck::Kind;
    auto connected3 = [](GraphFacts& f, const HarnessConfig&) {
        return f.connected() && f.graph().order() >= 3;
    };
    auto min_deg2 = [](GraphFacts& f, const HarnessConfig&) { return f.min_degree() >= 2; };
    auto any = [](GraphFacts&, const HarnessConfig&) { return true; };

    static const std::vector<TheoremCheck> registry = {
        {"thm-2.1", Kind::Biconditional,
         "connected, order >= 3: gamma = gamma_cer iff some gamma-set has every member with "
         "at least two neighbors outside it",
         20, connected3, check_thm_2_1},
        {"cor-2.2", Kind::Implication,
         "connected, order >= 3: an independent gamma-set without leaves forces gamma = gamma_cer",
         16, connected3, check_cor_2_2},
        {"cor-2.3", Kind::Implication,
         "min degree >= 2: some gamma-set has all members with two outside neighbors, and "
         "gamma = gamma_cer",
         20, min_deg2, check_cor_2_3},
        {"cor-2.4", Kind::Implication,
         "a unique gamma-set forces gamma = gamma_cer",
         16, any, check_cor_2_4},
        {"cor-2.5", Kind::Implication,
         "a gamma-set whose every deletion raises gamma forces gamma = gamma_cer",
         12,
         [](GraphFacts& f, const HarnessConfig&) { return f.graph().order() >= 2; },
         check_cor_2_5},
        {"thm-2.6", Kind::Implication,
         "connected, order >= 3: if gamma(G-v) >= gamma(G) for every v in any gamma-set then "
         "gamma = gamma_cer ('any' is read universally: all vertices of all gamma-sets)",
         12, connected3, check_thm_2_6},
        {"thm-2.7", Kind::Implication,
         "connected, not K2: P4-free forces gamma = gamma_cer",
         16,
         [](GraphFacts& f, const HarnessConfig&) {
             const Graph& g = f.graph();
             return f.connected() && !(g.order() == 2 && g.edge_count() == 1);
         },
         check_thm_2_7},
        {"cor-2.8", Kind::Biconditional,
         "gamma(H) = gamma_cer(H) for every connected induced subgraph H != K2 iff P4-free",
         10, any, check_cor_2_8},
        {"lem-2.9", Kind::Invariant,
         "connected, order >= 3: when gamma = gamma_cer, every gamma_cer-set avoids the leaves "
         "and contains the supports",
         14, connected3, check_lem_2_9},
        {"lem-2.10", Kind::Invariant,
         "sampled families: gamma of the P-corona equals the base order",
         64,
         [](GraphFacts& f, const HarnessConfig& cfg) {
             return f.graph().order() <= cfg.pcorona_base_max;
         },
         check_lem_2_10},
        {"thm-2.11", Kind::Biconditional,
         "sampled families, no isolated vertices: the two-or-more-block vertices dominate the "
         "base iff the P-corona has gamma = gamma_cer (an isolated vertex falsifies the "
         "only-if direction: its pendant keeps the equality attainable while no partition "
         "family can dominate it)",
         64,
         [](GraphFacts& f, const HarnessConfig& cfg) {
             return f.graph().order() <= cfg.pcorona_base_max && f.min_degree() >= 1;
         },
         check_thm_2_11},
        {"refinement-monotonicity", Kind::Implication,
         "sampled families: refining a family that satisfies the equality predicate preserves "
         "it, and the refined P-corona keeps gamma = gamma_cer",
         64,
         [](GraphFacts& f, const HarnessConfig& cfg) {
             return f.graph().order() <= cfg.pcorona_base_max;
         },
         check_refinement_monotonicity},
        {"cor-corona-strict", Kind::Invariant,
         "gamma(G corona K1) < gamma_cer(G corona K1)",
         64,
         [](GraphFacts& f, const HarnessConfig& cfg) {
             return f.graph().order() <= cfg.corona_strict_base_max;
         },
         check_cor_corona_strict},
        {"cor-2subdivision", Kind::Invariant,
         "no 2-vertex component: gamma = gamma_cer on the 2-subdivision",
         64,
         [](GraphFacts& f, const HarnessConfig& cfg) {
             if (f.graph().order() > cfg.subdivision_base_max) return false;
             for (const auto& c : f.graph().components())
                 if (c.graph.order() == 2) return false;
             return true;
         },
         check_cor_2subdivision},
        {"thm-maximal-family", Kind::Biconditional,
         "all families of small graphs: maximal for the equality iff at most two blocks per "
         "vertex and the two-block vertices form a minimal dominating set (maximality is "
         "against proper coarsenings)",
         64,
         [](GraphFacts& f, const HarnessConfig& cfg) {
             return f.graph().order() <= cfg.maximal_base_max &&
                    f.graph().max_degree() <= cfg.maximal_max_degree;
         },
         check_thm_maximal_family},
        {"lem-3.1", Kind::Invariant,
         "connected, order >= 2: in every minimal certified dominating set, the fully enclosed "
         "members are leaves or weak supports and induce a corona (or none exist)",
         12,
         [](GraphFacts& f, const HarnessConfig&) {
             return f.connected() && f.graph().order() >= 2;
         },
         check_lem_3_1},
        {"thm-3.2", Kind::Biconditional,
         "every non-trivial component is a corona iff gamma_cer = n iff upper gamma_cer = n "
         "(single-vertex components are exempt)",
         12, any, check_thm_3_2},
        {"thm-3.3", Kind::Biconditional,
         "connected, order >= 3: upper gamma_cer = n-2 iff the graph is a simple diadem, a "
         "diadem, or one of the two join forms",
         12, connected3, check_thm_3_3},
        {"gap-law", Kind::Invariant,
         "upper gamma_cer is never n-1",
         12, any, check_gap_law},
        {"lem-3.4", Kind::Implication,
         "min degree >= 2: upper gamma_cer <= upper gamma",
         12, min_deg2, check_lem_3_4},
        {"thm-3.5", Kind::Implication,
         "connected, min degree >= 2: an independent upper-gamma-set forces upper gamma = "
         "upper gamma_cer (converse not checked; it is false)",
         14,
         [](GraphFacts& f, const HarnessConfig&) { return f.connected() && f.min_degree() >= 2; },
         check_thm_3_5},
        {"cor-3.6", Kind::Implication,
         "min degree >= 2: beta0 = upper gamma forces upper gamma = upper gamma_cer",
         14, min_deg2, check_cor_3_6},
    };
    return registry;
}

std::vector<std::string> theorem_ids() {
    std::vector<std::string> out;
    for (const TheoremCheck& t : theorem_registry()) out.push_back(t.id);
    return out;
}

const TheoremCheck* find_theorem(std::string_view id) {
    for (const TheoremCheck& t : theorem_registry())
        if (t.id == id) return &t;
    return nullptr;
}

CheckResult run_check(const TheoremCheck& check, GraphFacts& facts, const HarnessConfig& cfg) {
    if (!cfg.force && facts.graph().order() > check.order_cap)
        return {CheckOutcome::Skipped, "order above cost cap " + std::to_string(check.order_cap)};
    if (!check.in_scope(facts, cfg)) return {CheckOutcome::Skipped, "out of scope"};
    return check.run(facts, cfg);
}

CheckResult check_theorem(std::string_view id, const Graph& g, const HarnessConfig& cfg) {
    const TheoremCheck* check = find_theorem(id);
    if (!check) throw std::invalid_argument("unknown theorem id \"" + std::string(id) + "\"");
    GraphFacts facts(g);
    return run_check(*check, facts, cfg);
}

}  // namespace certidom
