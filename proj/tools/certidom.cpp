// certidom: exact domination / certified domination calculator, structure
// classifier, corona constructor, and small-graph theorem verifier.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "certidom/corona.hpp"
#include "certidom/domination.hpp"
#include "certidom/families.hpp"
#include "certidom/graph6.hpp"
#include "certidom/sweep.hpp"
#include "certidom/taxonomy.hpp"

namespace {

using certidom::Graph;
using certidom::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitLimit = 3;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct LimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct GraphInput {
    std::string family;
    std::string edges;
    std::string graph6;

    void add_options(CLI::App* cmd, bool with_graph6 = true) {
        cmd->add_option("--family", family, "family spec, e.g. path:7, kbip:2,3, corona:path:3");
        cmd->add_option("--edges", edges, "edge list text: \"n m\" then m pairs \"u v\"");
        if (with_graph6)
            cmd->add_option("--graph6", graph6, "one graph6 string, or - to read a line from stdin");
    }

    Graph load() const {
        int sources = !family.empty() + !edges.empty() + !graph6.empty();
        if (sources != 1)
            throw UsageError("need exactly one of --family, --edges, --graph6");
        if (!family.empty()) return certidom::build_family(certidom::FamilySpec::parse(family));
        if (!edges.empty()) return certidom::parse_edge_list_text(edges);
        std::string line = graph6;
        if (line == "-") {
            if (!std::getline(std::cin, line)) throw UsageError("no graph6 line on stdin");
        }
        return certidom::parse_graph6(line);
    }
};

ordered_json graph_echo(const Graph& g) {
    ordered_json j;
    j["n"] = g.order();
    j["m"] = g.edge_count();
    j["graph6"] = certidom::encode_graph6(g);
    return j;
}

ordered_json invariant_json(const certidom::InvariantResult& r, int n) {
    ordered_json j;
    j["kind"] = certidom::to_string(r.kind);
    j["value"] = r.value;
    j["witness"] = r.witness.to_vector();
    j["n"] = n;
    return j;
}

int enumerator_cap() {
    if (const char* env = std::getenv("CERTIDOM_MAX_N")) {
        int cap = std::atoi(env);
        if (cap >= 1) return std::min(cap, 10);
    }
    return 7;
}

// ---------------------------------------------------------------------------
// compute
// ---------------------------------------------------------------------------

struct SolverLimits {
    static constexpr int kGamma = 20;
    static constexpr int kUpperGamma = 14;
    static constexpr int kUpperGammaCer = 12;
};

int run_compute(const GraphInput& input, std::vector<std::string> kinds, bool force,
                const std::string& format) {
    Graph g = input.load();
    if (kinds.empty() || (kinds.size() == 1 && kinds[0] == "all"))
        kinds = {"gamma", "gamma_cer", "upper_gamma", "upper_gamma_cer"};

    std::vector<certidom::InvariantResult> results;
    for (const std::string& kind : kinds) {
        int limit;
        if (kind == "gamma" || kind == "gamma_cer") limit = SolverLimits::kGamma;
        else if (kind == "upper_gamma") limit = SolverLimits::kUpperGamma;
        else if (kind == "upper_gamma_cer") limit = SolverLimits::kUpperGammaCer;
        else throw UsageError("unknown invariant \"" + kind +
                              "\" (expected gamma, gamma_cer, upper_gamma, upper_gamma_cer)");
        if (g.order() > limit && !force)
            throw LimitError("order " + std::to_string(g.order()) + " exceeds the default " +
                             kind + " limit of " + std::to_string(limit) +
                             "; pass --force to raise it");
        if (kind == "gamma") results.push_back(certidom::gamma(g));
        else if (kind == "gamma_cer") results.push_back(certidom::gamma_cer(g));
        else if (kind == "upper_gamma") results.push_back(certidom::upper_gamma(g));
        else results.push_back(certidom::upper_gamma_cer(g));
    }

    if (format == "human") {
        for (const auto& r : results)
            std::cout << certidom::to_string(r.kind) << " = " << r.value << "  witness "
                      << r.witness.to_string() << "\n";
    } else {
        ordered_json j;
        j["schema"] = 1;
        j["graph"] = graph_echo(g);
        ordered_json arr = ordered_json::array();
        for (const auto& r : results) arr.push_back(invariant_json(r, g.order()));
        j["results"] = arr;
        std::cout << j.dump(2) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// classify
// ---------------------------------------------------------------------------

int run_classify(const GraphInput& input, const std::string& format) {
    Graph g = input.load();
    certidom::StructureReport report = certidom::classify_structure(g);
    certidom::LeafSupportReport ls = certidom::leaf_support_report(g);
    bool p4 = certidom::is_p4_free(g);

    if (format == "human") {
        std::cout << "label: " << certidom::to_string(report.label) << "\n"
                  << "p4_free: " << (p4 ? "yes" : "no") << "\n"
                  << "min_degree: " << g.min_degree() << "\n"
                  << "leaves: " << ls.leaves.to_string() << "\n"
                  << "supports: " << ls.supports.to_string() << "\n";
        return kExitOk;
    }
    ordered_json j;
    j["schema"] = 1;
    j["graph"] = graph_echo(g);
    j["label"] = certidom::to_string(report.label);
    ordered_json evidence;
    if (report.corona) {
        ordered_json pairs = ordered_json::array();
        for (auto [crown, leaf] : report.corona->pairs) pairs.push_back({crown, leaf});
        evidence["corona_pairs"] = pairs;
    }
    if (report.added_vertex) evidence["added_vertex"] = *report.added_vertex;
    if (report.join_pair) evidence["join_pair"] = {report.join_pair->first, report.join_pair->second};
    j["evidence"] = evidence;
    j["p4_free"] = p4;
    j["min_degree"] = g.min_degree();
    j["leaves"] = ls.leaves.to_vector();
    j["supports"] = ls.supports.to_vector();
    j["weak_supports"] = ls.weak_supports.to_vector();
    j["strong_supports"] = ls.strong_supports.to_vector();
    std::cout << j.dump(2) << "\n";
    return kExitOk;
}

// ---------------------------------------------------------------------------
// construct
// ---------------------------------------------------------------------------

int run_construct(const GraphInput& input, bool corona_k1_flag, bool two_subdivision_flag,
                  bool p_corona_flag, const std::string& partitions_path,
                  const std::string& format) {
    if (corona_k1_flag + two_subdivision_flag + p_corona_flag != 1)
        throw UsageError("need exactly one of --corona-k1, --two-subdivision, --p-corona");
    Graph g = input.load();

    certidom::PCoronaGraph built = [&] {
        if (corona_k1_flag) return certidom::corona_k1(g);
        if (two_subdivision_flag) return certidom::two_subdivision(g);
        if (partitions_path.empty()) throw UsageError("--p-corona needs --partitions FILE");
        std::ifstream in(partitions_path);
        if (!in) throw UsageError("cannot open partition file " + partitions_path);
        std::stringstream buffer;
        buffer << in.rdbuf();
        certidom::PartitionFamily family = certidom::parse_partition_family(g, buffer.str());
        certidom::FamilyValidation val = certidom::validate_partition_family(g, family);
        if (!val.ok)
            throw UsageError("invalid partition family at vertex " + std::to_string(val.vertex) +
                             ": " + val.reason);
        return certidom::p_corona(g, family);
    }();

    if (format == "json") {
        ordered_json j;
        j["schema"] = 1;
        j["base"] = graph_echo(g);
        j["graph"] = graph_echo(built.graph);
        ordered_json labels = ordered_json::array();
        for (std::size_t i = 0; i < built.labels.size(); ++i) {
            ordered_json entry;
            entry["index"] = i;
            entry["label"] = certidom::to_string(built.labels[i]);
            labels.push_back(entry);
        }
        j["labels"] = labels;
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << certidom::to_edge_list_text(built.graph) << "labels:\n";
        for (std::size_t i = 0; i < built.labels.size(); ++i)
            std::cout << i << " -> " << certidom::to_string(built.labels[i]) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify and census
// ---------------------------------------------------------------------------

certidom::SweepSource make_source(const GraphInput& input, int enumerate_n, bool connected,
                                  const std::string& graph6_file, int samples, int pair_n_max) {
    bool single = !input.family.empty() || !input.edges.empty() || !input.graph6.empty();
    int sources = (enumerate_n > 0) + !graph6_file.empty() + single + (samples > 0);
    if (sources == 0) throw UsageError("need a source: --enumerate N, --graph6 FILE, a graph input, or --samples K");
    if ((enumerate_n > 0) + !graph6_file.empty() + single > 1)
        throw UsageError("choose one source: --enumerate, --graph6, or a single-graph input");
    if (enumerate_n > 0) {
        int cap = enumerator_cap();
        if (enumerate_n > cap)
            throw UsageError("--enumerate " + std::to_string(enumerate_n) +
                             " exceeds the cap of " + std::to_string(cap) +
                             " (set CERTIDOM_MAX_N to raise it)");
        return certidom::SweepSource::enumerate(enumerate_n, connected);
    }
    if (!graph6_file.empty()) return certidom::SweepSource::graph6_file(graph6_file);
    if (single) return certidom::SweepSource::single(input.load());
    return certidom::SweepSource::sampled_pairs(samples, pair_n_max);
}

int run_verify(const GraphInput& input, std::string theorems, int enumerate_n, bool connected,
               const std::string& graph6_file, int samples, std::uint64_t seed, int jobs,
               bool force, const std::string& format) {
    std::vector<std::string> ids;
    if (theorems == "all") {
        ids = certidom::theorem_ids();
    } else {
        std::stringstream ss(theorems);
        std::string id;
        while (std::getline(ss, id, ',')) {
            if (id.empty()) continue;
            if (!certidom::find_theorem(id)) {
                std::ostringstream msg;
                msg << "unknown theorem id \"" << id << "\"; valid ids:";
                for (const std::string& known : certidom::theorem_ids()) msg << " " << known;
                throw UsageError(msg.str());
            }
            ids.push_back(id);
        }
        if (ids.empty()) throw UsageError("--theorems got an empty list");
    }

    certidom::SweepConfig config;
    config.harness.seed = seed;
    config.harness.force = force;
    if (samples > 0) config.harness.family_samples = samples;
    config.jobs = jobs;

    bool sampled_pairs_mode = samples > 0 && enumerate_n == 0 && graph6_file.empty() &&
                              input.family.empty() && input.edges.empty() && input.graph6.empty();
    certidom::SweepSource source =
        make_source(input, enumerate_n, connected, graph6_file, sampled_pairs_mode ? samples : 0,
                    config.harness.pcorona_base_max);

    certidom::SweepReport report = certidom::sweep(source, ids, config);
    if (format == "human") {
        for (const auto& [id, c] : report.per_theorem)
            std::cout << id << ": checked " << c.checked << ", passed " << c.passed << ", failed "
                      << c.failed << ", skipped " << c.skipped << "\n";
        for (const auto& f : report.failures)
            std::cout << "FAIL " << f.theorem << " on " << f.graph6 << " (" << f.detail << ")\n";
        for (const auto& e : report.input_errors) std::cout << "input error: " << e << "\n";
    } else {
        std::cout << report.to_json().dump(2) << "\n";
    }
    return report.failed_total() == 0 ? kExitOk : kExitVerifyFailed;
}

int run_census(const GraphInput& input, int enumerate_n, bool connected,
               const std::string& graph6_file, std::uint64_t seed, bool force,
               const std::string& format) {
    certidom::SweepConfig config;
    config.harness.seed = seed;
    config.harness.force = force;
    certidom::SweepSource source = make_source(input, enumerate_n, connected, graph6_file, 0, 5);
    certidom::CensusReport report = certidom::census(source, config);
    if (format == "tsv")
        std::cout << report.to_tsv();
    else
        std::cout << report.to_json().dump(2) << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact domination, certified domination, and corona-construction toolkit"};
    app.require_subcommand(1);

    // compute
    auto* compute = app.add_subcommand("compute", "invariants of one graph");
    GraphInput compute_input;
    compute_input.add_options(compute);
    std::vector<std::string> invariants;
    std::string compute_format = "json";
    bool compute_force = false;
    compute->add_option("--invariants", invariants,
                        "subset of gamma,gamma_cer,upper_gamma,upper_gamma_cer (default all)")
        ->delimiter(',');
    compute->add_option("--format", compute_format, "json or human")
        ->check(CLI::IsMember({"json", "human"}));
    compute->add_flag("--force", compute_force, "lift the default order limits");

    // classify
    auto* classify = app.add_subcommand("classify", "structural label of one graph");
    GraphInput classify_input;
    classify_input.add_options(classify);
    std::string classify_format = "json";
    classify->add_option("--format", classify_format, "json or human")
        ->check(CLI::IsMember({"json", "human"}));

    // construct
    auto* construct = app.add_subcommand("construct", "corona-style constructions");
    GraphInput construct_input;
    construct_input.add_options(construct);
    bool c_corona = false, c_subdiv = false, c_pcorona = false;
    std::string partitions_path;
    std::string construct_format = "text";
    construct->add_flag("--corona-k1", c_corona, "attach one pendant per vertex");
    construct->add_flag("--two-subdivision", c_subdiv, "replace each edge by a length-3 path");
    construct->add_flag("--p-corona", c_pcorona, "P-corona from a partition family file");
    construct->add_option("--partitions", partitions_path, "partition family file for --p-corona");
    construct->add_option("--format", construct_format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));

    // verify
    auto* verify = app.add_subcommand("verify", "sweep theorem checks over graphs");
    GraphInput verify_input;
    verify_input.add_options(verify, /*with_graph6=*/false);
    std::string theorems;
    int enumerate_n = 0;
    bool connected = false;
    std::string graph6_file;
    int samples = 0;
    std::uint64_t seed = certidom::kDefaultSeed;
    int jobs = 1;
    bool verify_force = false;
    std::string verify_format = "json";
    verify->add_option("--theorems", theorems, "comma-separated theorem ids, or all")->required();
    verify->add_option("--enumerate", enumerate_n, "all labeled graphs of orders 1..N");
    verify->add_flag("--connected", connected, "restrict the enumerator to connected graphs");
    verify->add_option("--graph6", graph6_file, "graph6 file, one graph per line")
        ->excludes("--enumerate");  // file source; single graphs go through --family/--edges
    verify->add_option("--samples", samples,
                       "sampled (graph, family) pairs when no other source is given; otherwise "
                       "family draws per graph");
    verify->add_option("--seed", seed, "sampling seed");
    verify->add_option("--jobs", jobs, "worker threads");
    verify->add_flag("--force", verify_force, "lift per-theorem order caps");
    verify->add_option("--format", verify_format, "json or human")
        ->check(CLI::IsMember({"json", "human"}));

    // census
    auto* census_cmd = app.add_subcommand("census", "invariant-quadruple table");
    GraphInput census_input;
    census_input.add_options(census_cmd, /*with_graph6=*/false);
    int census_enumerate = 0;
    bool census_connected = false;
    std::string census_graph6_file;
    std::uint64_t census_seed = certidom::kDefaultSeed;
    bool census_force = false;
    std::string census_format = "json";
    census_cmd->add_option("--enumerate", census_enumerate, "all labeled graphs of orders 1..N");
    census_cmd->add_flag("--connected", census_connected, "connected graphs only");
    census_cmd->add_option("--graph6", census_graph6_file, "graph6 file, one graph per line");
    census_cmd->add_option("--seed", census_seed, "echoed into the report");
    census_cmd->add_flag("--force", census_force, "lift the census order cap");
    census_cmd->add_option("--format", census_format, "json or tsv")
        ->check(CLI::IsMember({"json", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*compute) return run_compute(compute_input, invariants, compute_force, compute_format);
        if (*classify) return run_classify(classify_input, classify_format);
        if (*construct)
            return run_construct(construct_input, c_corona, c_subdiv, c_pcorona, partitions_path,
                                 construct_format);
        if (*verify)
            return run_verify(verify_input, theorems, enumerate_n, connected, graph6_file, samples,
                              seed, jobs, verify_force, verify_format);
        if (*census_cmd)
            return run_census(census_input, census_enumerate, census_connected, census_graph6_file,
                              census_seed, census_force, census_format);
    } catch (const LimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitLimit;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const certidom::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
