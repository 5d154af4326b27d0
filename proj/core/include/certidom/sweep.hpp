#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "certidom/graph.hpp"
#include "certidom/theorems.hpp"

namespace certidom {

using ordered_json = nlohmann::ordered_json;

/// Where a sweep or census draws its graphs from.
struct SweepSource {
    enum class Kind { Enumerate, Graph6File, Graph6Lines, SingleGraph, SampledPairs };
    Kind kind = Kind::Enumerate;

    int n_max = 6;                 // Enumerate: all orders 1..n_max
    bool connected_only = false;   // Enumerate
    std::string path;              // Graph6File: one graph per line
    std::vector<std::string> lines;  // Graph6Lines
    std::optional<Graph> graph;    // SingleGraph
    int pair_count = 200;          // SampledPairs: seeded random base graphs,
    int pair_n_max = 5;            //   one family draw per check per graph

    static SweepSource enumerate(int n_max, bool connected_only = false);
    static SweepSource graph6_file(std::string path);
    static SweepSource graph6_lines(std::vector<std::string> lines);
    static SweepSource single(Graph g);
    static SweepSource sampled_pairs(int count, int n_max = 5);
};

struct SweepConfig {
    HarnessConfig harness;
    int jobs = 1;  // worker threads for the graph stream
};

struct TheoremCounters {
    long checked = 0;
    long passed = 0;
    long failed = 0;
    long skipped = 0;
};

struct SweepFailure {
    std::string theorem;
    std::string graph6;
    std::string detail;
};

struct SweepReport {
    ordered_json config_echo;
    std::vector<std::pair<std::string, TheoremCounters>> per_theorem;  // registry order
    std::vector<SweepFailure> failures;  // stream order, then registry order
    std::vector<std::string> input_errors;  // malformed graph6 lines etc.

    long failed_total() const;
    long checked_total() const;
    ordered_json to_json() const;
};

/// Runs the named checks over the source. Deterministic given source, ids,
/// and config (including byte-identical JSON across thread counts). Unknown
/// ids throw std::invalid_argument; I/O failures throw std::runtime_error.
SweepReport sweep(const SweepSource& source, const std::vector<std::string>& ids,
                  const SweepConfig& config);

// ---------------------------------------------------------------------------
// Inequality-chain classification and the census
// ---------------------------------------------------------------------------

enum class ChainPattern { Chain1 = 1, Chain2 = 2, Chain3 = 3 };

/// Placement of upper gamma against gamma_cer <= upper gamma_cer:
///   chain1: upper gamma <= gamma_cer,
///   chain2: gamma_cer <= upper gamma <= upper gamma_cer,
///   chain3: upper gamma_cer <= upper gamma,
/// first match wins, so ties resolve to the lowest-numbered chain. `tied`
/// reports that more than one placement applied (a degenerate tie); `strict`
/// reports that the placement is witnessed by strict inequality (chain1:
/// upper gamma < gamma_cer; chain2: strictly between; chain3: upper gamma >
/// upper gamma_cer).
struct ChainReport {
    ChainPattern pattern = ChainPattern::Chain1;
    bool tied = false;
    bool strict = false;
    int gamma = 0;
    int gamma_cer = 0;
    int upper_gamma = 0;
    int upper_gamma_cer = 0;
};
ChainReport chain_pattern(const Graph& g);

struct CensusRow {
    int gamma = 0;
    int upper_gamma = 0;
    int gamma_cer = 0;
    int upper_gamma_cer = 0;
    long count = 0;
    std::string witness_graph6;  // first graph seen with this quadruple
};

struct ChainStats {
    long count = 0;
    long strict_count = 0;
    std::string first_strict_graph6;  // empty when no strict witness occurred
};

struct CensusReport {
    ordered_json config_echo;
    std::vector<CensusRow> rows;  // ascending by (gamma, Gamma, gamma_cer, Gamma_cer)
    ChainStats chains[3];
    long tied_count = 0;
    long total_graphs = 0;
    std::vector<std::string> input_errors;

    ordered_json to_json() const;
    std::string to_tsv() const;
};

/// Invariant-quadruple table with multiplicities and first witnesses, plus
/// chain-pattern statistics. Sequential and deterministic.
CensusReport census(const SweepSource& source, const SweepConfig& config);

}  // namespace certidom
