#include "certidom/sweep.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <map>
#include <thread>

#include "certidom/enumerate.hpp"
#include "certidom/graph6.hpp"

namespace certidom {

namespace {

using u64 = std::uint64_t;

std::string trimmed(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n' || line.back() == ' '))
        line.pop_back();
    return line;
}

std::vector<Graph> load_graph_list(const SweepSource& src, const HarnessConfig& cfg,
                                   std::vector<std::string>& errors) {
    std::vector<Graph> graphs;
    auto parse_lines = [&](const std::vector<std::string>& lines) {
        for (std::size_t i = 0; i < lines.size(); ++i) {
            std::string line = trimmed(lines[i]);
            if (line.empty()) continue;
            try {
                graphs.push_back(parse_graph6(line));
            } catch (const ParseError& e) {
                errors.push_back("line " + std::to_string(i + 1) + ": " + e.what());
            }
        }
    };
    switch (src.kind) {
        case SweepSource::Kind::Graph6File: {
            std::ifstream in(src.path);
            if (!in) throw std::runtime_error("cannot open graph6 file " + src.path);
            std::vector<std::string> lines;
            std::string line;
            while (std::getline(in, line)) lines.push_back(line);
            parse_lines(lines);
            break;
        }
        case SweepSource::Kind::Graph6Lines:
            parse_lines(src.lines);
            break;
        case SweepSource::Kind::SingleGraph:
            graphs.push_back(*src.graph);
            break;
        case SweepSource::Kind::SampledPairs: {
            Rng rng(mix_seed(cfg.seed, "sampled-pairs"));
            for (int i = 0; i < src.pair_count; ++i) {
                int n = 1 + rng.bounded(src.pair_n_max);
                double p = rng.unit();
                graphs.push_back(random_graph(n, p, rng));
            }
            break;
        }
        case SweepSource::Kind::Enumerate:
            break;  // streamed, never materialized
    }
    return graphs;
}

ordered_json source_echo(const SweepSource& src) {
    ordered_json j;
    switch (src.kind) {
        case SweepSource::Kind::Enumerate:
            j["kind"] = "enumerate";
            j["n_max"] = src.n_max;
            j["connected_only"] = src.connected_only;
            break;
        case SweepSource::Kind::Graph6File:
            j["kind"] = "graph6-file";
            j["path"] = src.path;
            break;
        case SweepSource::Kind::Graph6Lines:
            j["kind"] = "graph6-lines";
            j["count"] = src.lines.size();
            break;
        case SweepSource::Kind::SingleGraph:
            j["kind"] = "single-graph";
            j["graph6"] = encode_graph6(*src.graph);
            break;
        case SweepSource::Kind::SampledPairs:
            j["kind"] = "sampled-pairs";
            j["count"] = src.pair_count;
            j["n_max"] = src.pair_n_max;
            break;
    }
    return j;
}

ordered_json config_echo(const SweepSource& src, const std::vector<std::string>& ids,
                         const HarnessConfig& cfg) {
    ordered_json j;
    j["source"] = source_echo(src);
    j["theorems"] = ids;
    j["seed"] = cfg.seed;
    j["family_samples"] = cfg.family_samples;
    j["pcorona_base_max"] = cfg.pcorona_base_max;
    j["maximal_base_max"] = cfg.maximal_base_max;
    j["maximal_max_degree"] = cfg.maximal_max_degree;
    j["corona_strict_base_max"] = cfg.corona_strict_base_max;
    j["subdivision_base_max"] = cfg.subdivision_base_max;
    j["force"] = cfg.force;
    return j;
}

struct ChunkResult {
    std::vector<TheoremCounters> counters;  // per id
    std::vector<SweepFailure> failures;
};

void process_graph(const Graph& g, const std::vector<const TheoremCheck*>& checks,
                   const HarnessConfig& cfg, ChunkResult& out) {
    GraphFacts facts(g);
    std::string g6;         // encoded lazily, once
    std::string quadruple;  // full invariant quadruple, attached to failures
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CheckResult result = run_check(*checks[i], facts, cfg);
        TheoremCounters& c = out.counters[i];
        switch (result.outcome) {
            case CheckOutcome::Skipped:
                ++c.skipped;
                break;
            case CheckOutcome::Pass:
                ++c.checked;
                ++c.passed;
                break;
            case CheckOutcome::Fail:
                ++c.checked;
                ++c.failed;
                if (g6.empty()) g6 = encode_graph6(g);
                if (quadruple.empty() && (g.order() <= 14 || cfg.force))
                    quadruple = " [gamma=" + std::to_string(facts.gamma()) +
                                " upper_gamma=" + std::to_string(facts.upper_gamma()) +
                                " gamma_cer=" + std::to_string(facts.gamma_cer()) +
                                " upper_gamma_cer=" + std::to_string(facts.upper_gamma_cer()) + "]";
                out.failures.push_back(SweepFailure{checks[i]->id, g6, result.detail + quadruple});
                break;
        }
    }
}

}  // namespace

SweepSource SweepSource::enumerate(int n_max, bool connected_only) {
    SweepSource s;
    s.kind = Kind::Enumerate;
    s.n_max = n_max;
    s.connected_only = connected_only;
    return s;
}
SweepSource SweepSource::graph6_file(std::string path) {
    SweepSource s;
    s.kind = Kind::Graph6File;
    s.path = std::move(path);
    return s;
}
SweepSource SweepSource::graph6_lines(std::vector<std::string> lines) {
    SweepSource s;
    s.kind = Kind::Graph6Lines;
    s.lines = std::move(lines);
    return s;
}
SweepSource SweepSource::single(Graph g) {
    SweepSource s;
    s.kind = Kind::SingleGraph;
    s.graph = std::move(g);
    return s;
}
SweepSource SweepSource::sampled_pairs(int count, int n_max) {
    SweepSource s;
    s.kind = Kind::SampledPairs;
    s.pair_count = count;
    s.pair_n_max = n_max;
    return s;
}

long SweepReport::failed_total() const {
    long total = 0;
    for (const auto& [id, c] : per_theorem) total += c.failed;
    return total;
}

long SweepReport::checked_total() const {
    long total = 0;
    for (const auto& [id, c] : per_theorem) total += c.checked;
    return total;
}

ordered_json SweepReport::to_json() const {
    ordered_json j;
    j["schema"] = 1;
    j["config"] = config_echo;
    ordered_json results;
    for (const auto& [id, c] : per_theorem) {
        ordered_json entry;
        entry["checked"] = c.checked;
        entry["passed"] = c.passed;
        entry["failed"] = c.failed;
        entry["skipped"] = c.skipped;
        results[id] = entry;
    }
    j["results"] = results;
    ordered_json fails = ordered_json::array();
    for (const SweepFailure& f : failures) {
        ordered_json entry;
        entry["theorem"] = f.theorem;
        entry["graph6"] = f.graph6;
        entry["detail"] = f.detail;
        fails.push_back(entry);
    }
    j["failures"] = fails;
    j["input_errors"] = input_errors;
    j["failed_total"] = failed_total();
    return j;
}

SweepReport sweep(const SweepSource& source, const std::vector<std::string>& ids,
                  const SweepConfig& config) {
    std::vector<const TheoremCheck*> checks;
    for (const std::string& id : ids) {
        const TheoremCheck* check = find_theorem(id);
        if (!check) throw std::invalid_argument("unknown theorem id \"" + id + "\"");
        checks.push_back(check);
    }

    HarnessConfig cfg = config.harness;
    if (source.kind == SweepSource::Kind::SampledPairs) cfg.family_samples = 1;

    SweepReport report;
    report.config_echo = config_echo(source, ids, cfg);

    std::vector<Graph> graphs = load_graph_list(source, cfg, report.input_errors);

    // Work is cut into chunks processed by any number of workers and merged
    // in chunk order, so reports do not depend on the thread count.
    struct Chunk {
        int n = 0;       // enumerate mode
        u64 lo = 0, hi = 0;
        std::size_t g_lo = 0, g_hi = 0;  // graph-list mode
    };
    std::vector<Chunk> chunks;
    const bool enumerate_mode = source.kind == SweepSource::Kind::Enumerate;
    if (enumerate_mode) {
        if (source.n_max < 1 || source.n_max > 10)
            throw std::invalid_argument("enumerate sweep supports n_max 1..10");
        constexpr u64 kMasksPerChunk = 1 << 14;
        for (int n = 1; n <= source.n_max; ++n) {
            const u64 top = u64{1} << pair_count(n);
            for (u64 lo = 0; lo < top; lo += kMasksPerChunk)
                chunks.push_back(Chunk{n, lo, std::min(top, lo + kMasksPerChunk), 0, 0});
        }
    } else {
        constexpr std::size_t kGraphsPerChunk = 256;
        for (std::size_t lo = 0; lo < graphs.size(); lo += kGraphsPerChunk)
            chunks.push_back(Chunk{0, 0, 0, lo, std::min(graphs.size(), lo + kGraphsPerChunk)});
    }

    std::vector<ChunkResult> results(chunks.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t ci = next.fetch_add(1); ci < chunks.size(); ci = next.fetch_add(1)) {
            const Chunk& chunk = chunks[ci];
            ChunkResult& out = results[ci];
            out.counters.assign(checks.size(), TheoremCounters{});
            if (enumerate_mode) {
                for (u64 mask = chunk.lo; mask < chunk.hi; ++mask) {
                    Graph g = graph_from_edge_mask(chunk.n, mask);
                    if (source.connected_only && !g.is_connected()) continue;
                    process_graph(g, checks, cfg, out);
                }
            } else {
                for (std::size_t i = chunk.g_lo; i < chunk.g_hi; ++i)
                    process_graph(graphs[i], checks, cfg, out);
            }
        }
    };

    int jobs = std::clamp(config.jobs, 1, 64);
    if (jobs == 1 || chunks.size() <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int t = 0; t < jobs; ++t) pool.emplace_back(worker);
        for (std::thread& t : pool) t.join();
    }

    report.per_theorem.reserve(checks.size());
    for (const TheoremCheck* check : checks)
        report.per_theorem.emplace_back(check->id, TheoremCounters{});
    for (const ChunkResult& r : results) {
        for (std::size_t i = 0; i < checks.size(); ++i) {
            TheoremCounters& total = report.per_theorem[i].second;
            total.checked += r.counters[i].checked;
            total.passed += r.counters[i].passed;
            total.failed += r.counters[i].failed;
            total.skipped += r.counters[i].skipped;
        }
        report.failures.insert(report.failures.end(), r.failures.begin(), r.failures.end());
    }
    return report;
}

// ---------------------------------------------------------------------------
// Chains and census
// ---------------------------------------------------------------------------

ChainReport chain_pattern(const Graph& g) {
    ChainReport r;
    r.gamma = gamma_value(g);
    r.gamma_cer = gamma_cer_value(g);
    r.upper_gamma = upper_gamma_value(g);
    r.upper_gamma_cer = upper_gamma_cer_value(g);
    bool c1 = r.upper_gamma <= r.gamma_cer;
    bool c2 = r.gamma_cer <= r.upper_gamma && r.upper_gamma <= r.upper_gamma_cer;
    bool c3 = r.upper_gamma_cer <= r.upper_gamma;
    r.tied = (static_cast<int>(c1) + static_cast<int>(c2) + static_cast<int>(c3)) >= 2;
    if (c1) {
        r.pattern = ChainPattern::Chain1;
        r.strict = r.upper_gamma < r.gamma_cer;
    } else if (c2) {
        r.pattern = ChainPattern::Chain2;
        r.strict = r.gamma_cer < r.upper_gamma && r.upper_gamma < r.upper_gamma_cer;
    } else {
        r.pattern = ChainPattern::Chain3;
        r.strict = r.upper_gamma_cer < r.upper_gamma;
    }
    return r;
}

ordered_json CensusReport::to_json() const {
    ordered_json j;
    j["schema"] = 1;
    j["config"] = config_echo;
    j["total_graphs"] = total_graphs;
    ordered_json rows_json = ordered_json::array();
    for (const CensusRow& row : rows) {
        ordered_json entry;
        entry["gamma"] = row.gamma;
        entry["upper_gamma"] = row.upper_gamma;
        entry["gamma_cer"] = row.gamma_cer;
        entry["upper_gamma_cer"] = row.upper_gamma_cer;
        entry["count"] = row.count;
        entry["witness"] = row.witness_graph6;
        rows_json.push_back(entry);
    }
    j["rows"] = rows_json;
    ordered_json chains_json;
    for (int i = 0; i < 3; ++i) {
        ordered_json entry;
        entry["count"] = chains[i].count;
        entry["strict_count"] = chains[i].strict_count;
        entry["strict_witness_present"] = !chains[i].first_strict_graph6.empty();
        if (chains[i].first_strict_graph6.empty())
            entry["first_strict"] = nullptr;
        else
            entry["first_strict"] = chains[i].first_strict_graph6;
        chains_json["chain" + std::to_string(i + 1)] = entry;
    }
    j["chains"] = chains_json;
    j["tied_count"] = tied_count;
    j["input_errors"] = input_errors;
    return j;
}

std::string CensusReport::to_tsv() const {
    std::string out = "gamma\tGamma\tgamma_cer\tGamma_cer\tcount\twitness\n";
    for (const CensusRow& row : rows)
        out += std::to_string(row.gamma) + "\t" + std::to_string(row.upper_gamma) + "\t" +
               std::to_string(row.gamma_cer) + "\t" + std::to_string(row.upper_gamma_cer) + "\t" +
               std::to_string(row.count) + "\t" + row.witness_graph6 + "\n";
    for (int i = 0; i < 3; ++i) {
        out += "# chain" + std::to_string(i + 1) + " count=" + std::to_string(chains[i].count) +
               " strict_count=" + std::to_string(chains[i].strict_count);
        out += chains[i].first_strict_graph6.empty()
                   ? std::string(" strict_witness=none")
                   : " strict_witness=" + chains[i].first_strict_graph6;
        out += "\n";
    }
    out += "# tied_ties_resolved_to_lowest_chain=" + std::to_string(tied_count) + "\n";
    out += "# total_graphs=" + std::to_string(total_graphs) + "\n";
    return out;
}

CensusReport census(const SweepSource& source, const SweepConfig& config) {
    CensusReport report;
    report.config_echo = config_echo(source, {}, config.harness);

    std::map<std::array<int, 4>, std::pair<long, std::string>> table;

    auto consume = [&](const Graph& g) {
        if (g.order() > 14 && !config.harness.force) {
            report.input_errors.push_back("skipped graph of order " + std::to_string(g.order()) +
                                          " (census cap is 14 without force)");
            return;
        }
        ++report.total_graphs;
        ChainReport chain = chain_pattern(g);
        std::array<int, 4> key{chain.gamma, chain.upper_gamma, chain.gamma_cer,
                               chain.upper_gamma_cer};
        auto [it, inserted] = table.try_emplace(key, 0, std::string{});
        ++it->second.first;
        if (inserted) it->second.second = encode_graph6(g);
        ChainStats& stats = report.chains[static_cast<int>(chain.pattern) - 1];
        ++stats.count;
        if (chain.strict) {
            ++stats.strict_count;
            if (stats.first_strict_graph6.empty()) stats.first_strict_graph6 = encode_graph6(g);
        }
        if (chain.tied) ++report.tied_count;
    };

    if (source.kind == SweepSource::Kind::Enumerate) {
        if (source.n_max < 1 || source.n_max > 10)
            throw std::invalid_argument("enumerate census supports n_max 1..10");
        for (int n = 1; n <= source.n_max; ++n)
            for_each_labeled_graph(n, source.connected_only, [&](const Graph& g, u64) {
                consume(g);
                return true;
            });
    } else {
        for (const Graph& g : load_graph_list(source, config.harness, report.input_errors))
            consume(g);
    }

    for (const auto& [key, value] : table)
        report.rows.push_back(CensusRow{key[0], key[1], key[2], key[3], value.first, value.second});
    return report;
}

}  // namespace certidom
