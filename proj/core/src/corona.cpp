#include "certidom/corona.hpp"

#include <algorithm>
#include <sstream>

#include "certidom/domination.hpp"

namespace certidom {

namespace {

/// Enumerates every set partition of `elems` (blocks over `universe`), each
/// exactly once, blocks ordered by first appearance (= smallest member).
void for_each_partition_of(int universe, const std::vector<int>& elems,
                           const std::function<void(const std::vector<VertexSet>&)>& f) {
    std::vector<VertexSet> blocks;
    auto rec = [&](auto&& self, std::size_t i) -> void {
        if (i == elems.size()) {
            f(blocks);
            return;
        }
        int e = elems[i];
        for (std::size_t b = 0; b < blocks.size(); ++b) {
            blocks[b].add(e);
            self(self, i + 1);
            blocks[b].remove(e);
        }
        blocks.push_back(VertexSet::of(universe, {e}));
        self(self, i + 1);
        blocks.pop_back();
    };
    rec(rec, 0);
}

std::vector<VertexSet> pick_uniform_partition(int universe, const std::vector<int>& elems, Rng& rng) {
    if (elems.size() > 10)
        throw std::invalid_argument("partition sampling is limited to neighborhoods of at most 10");
    std::vector<std::vector<VertexSet>> all;
    for_each_partition_of(universe, elems, [&](const std::vector<VertexSet>& p) { all.push_back(p); });
    return all[static_cast<std::size_t>(rng.bounded(static_cast<int>(all.size())))];
}

}  // namespace

PartitionFamily PartitionFamily::trivial(const Graph& g) {
    PartitionFamily p;
    p.blocks.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        if (!g.neighbors(v).empty()) p.blocks[static_cast<std::size_t>(v)].push_back(g.neighbors(v));
    return p;
}

PartitionFamily PartitionFamily::singletons(const Graph& g) {
    PartitionFamily p;
    p.blocks.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        for (int u : g.neighbors(v))
            p.blocks[static_cast<std::size_t>(v)].push_back(VertexSet::of(g.order(), {u}));
    return p;
}

int PartitionFamily::total_blocks() const {
    int total = 0;
    for (const auto& b : blocks) total += static_cast<int>(b.size());
    return total;
}

FamilyValidation validate_partition_family(const Graph& g, const PartitionFamily& p) {
    if (static_cast<int>(p.blocks.size()) != g.order())
        return {false, -1, "family covers " + std::to_string(p.blocks.size()) +
                               " vertices, graph has " + std::to_string(g.order())};
    for (int v = 0; v < g.order(); ++v) {
        VertexSet seen(g.order());
        for (const VertexSet& block : p.blocks[static_cast<std::size_t>(v)]) {
            if (block.universe() != g.order()) return {false, v, "block universe mismatch"};
            if (block.empty()) return {false, v, "empty block"};
            if (!block.subset_of(g.neighbors(v)))
                return {false, v, "foreign element " + std::to_string((block - g.neighbors(v)).first())};
            if (block.intersects(seen))
                return {false, v, "overlap at element " + std::to_string((block & seen).first())};
            seen |= block;
        }
        if (!(seen == g.neighbors(v)))
            return {false, v, "missing element " + std::to_string((g.neighbors(v) - seen).first())};
    }
    return {};
}

std::string to_string(const PCoronaLabel& label) {
    if (label.is_base) return "(" + std::to_string(label.base) + ",1)";
    return "(" + std::to_string(label.base) + "," + label.block.to_string() + ")";
}

PCoronaGraph p_corona(const Graph& g, const PartitionFamily& p) {
    FamilyValidation val = validate_partition_family(g, p);
    if (!val.ok)
        throw std::invalid_argument("invalid partition family at vertex " +
                                    std::to_string(val.vertex) + ": " + val.reason);
    const int n = g.order();
    const int order = n + p.total_blocks();
    if (order > Graph::kMaxOrder)
        throw std::invalid_argument("P-corona order " + std::to_string(order) + " exceeds 64");

    std::vector<int> offset(static_cast<std::size_t>(n));
    int next = n;
    for (int v = 0; v < n; ++v) {
        offset[static_cast<std::size_t>(v)] = next;
        next += p.block_count(v);
    }

    std::vector<std::pair<int, int>> edges;
    std::vector<PCoronaLabel> labels(static_cast<std::size_t>(order));
    for (int v = 0; v < n; ++v) {
        labels[static_cast<std::size_t>(v)] = PCoronaLabel{v, true, VertexSet(n)};
        for (int b = 0; b < p.block_count(v); ++b) {
            int idx = offset[static_cast<std::size_t>(v)] + b;
            labels[static_cast<std::size_t>(idx)] =
                PCoronaLabel{v, false, p.blocks[static_cast<std::size_t>(v)][static_cast<std::size_t>(b)]};
            edges.emplace_back(v, idx);  // spoke (v,1)-(v,A)
        }
    }
    // one cross edge per base edge uv: (v,A)-(u,B) with u in A and v in B
    for (auto [u, v] : g.edge_list()) {
        int a = -1, b = -1;
        for (int i = 0; i < p.block_count(v); ++i)
            if (p.blocks[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)].contains(u)) a = i;
        for (int i = 0; i < p.block_count(u); ++i)
            if (p.blocks[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)].contains(v)) b = i;
        edges.emplace_back(offset[static_cast<std::size_t>(v)] + a,
                           offset[static_cast<std::size_t>(u)] + b);
    }
    return PCoronaGraph{Graph::from_edge_list(order, edges), std::move(labels), n};
}

PCoronaGraph corona_k1(const Graph& g) {
    const int n = g.order();
    const int order = 2 * n;
    if (order > Graph::kMaxOrder)
        throw std::invalid_argument("corona order " + std::to_string(order) + " exceeds 64");
    std::vector<std::pair<int, int>> edges = g.edge_list();
    std::vector<PCoronaLabel> labels(static_cast<std::size_t>(order));
    for (int v = 0; v < n; ++v) {
        labels[static_cast<std::size_t>(v)] = PCoronaLabel{v, true, VertexSet(n)};
        labels[static_cast<std::size_t>(n + v)] = PCoronaLabel{v, false, g.neighbors(v)};
        edges.emplace_back(v, n + v);
    }
    return PCoronaGraph{Graph::from_edge_list(order, edges), std::move(labels), n};
}

PCoronaGraph two_subdivision(const Graph& g) {
    return p_corona(g, PartitionFamily::singletons(g));
}

bool is_refinement(const PartitionFamily& fine, const PartitionFamily& coarse) {
    if (fine.blocks.size() != coarse.blocks.size())
        throw std::invalid_argument("refinement check on families over different vertex counts");
    for (std::size_t v = 0; v < fine.blocks.size(); ++v) {
        for (const VertexSet& a : fine.blocks[v]) {
            bool inside = false;
            for (const VertexSet& b : coarse.blocks[v])
                if (a.subset_of(b)) {
                    inside = true;
                    break;
                }
            if (!inside) return false;
        }
    }
    return true;
}

bool equality_predicate(const Graph& g, const PartitionFamily& p) {
    FamilyValidation val = validate_partition_family(g, p);
    if (!val.ok)
        throw std::invalid_argument("invalid partition family at vertex " +
                                    std::to_string(val.vertex) + ": " + val.reason);
    VertexSet d(g.order());
    for (int v = 0; v < g.order(); ++v)
        if (p.block_count(v) >= 2) d.add(v);
    return is_dominating(g, d);
}

MaximalFamilyCertificate is_maximal_family(const Graph& g, const PartitionFamily& p) {
    FamilyValidation val = validate_partition_family(g, p);
    if (!val.ok)
        throw std::invalid_argument("invalid partition family at vertex " +
                                    std::to_string(val.vertex) + ": " + val.reason);
    MaximalFamilyCertificate cert;
    cert.two_block_vertices = VertexSet(g.order());
    for (int v = 0; v < g.order(); ++v) {
        if (p.block_count(v) > 2 && cert.violating_vertex < 0) cert.violating_vertex = v;
        if (p.block_count(v) == 2) cert.two_block_vertices.add(v);
    }
    cert.d_is_minimal_dominating = is_minimal_dominating(g, cert.two_block_vertices);
    cert.maximal = cert.violating_vertex < 0 && cert.d_is_minimal_dominating;
    return cert;
}

PartitionFamily parse_partition_family(const Graph& g, std::string_view text) {
    PartitionFamily p;
    p.blocks.resize(static_cast<std::size_t>(g.order()));
    std::vector<bool> seen(static_cast<std::size_t>(g.order()), false);
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos) continue;
        std::size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("partition family line " + std::to_string(line_no) + ": missing ':'");
        int v;
        try {
            std::size_t used = 0;
            v = std::stoi(line.substr(start, colon - start), &used);
        } catch (const std::exception&) {
            throw ParseError("partition family line " + std::to_string(line_no) + ": bad vertex id");
        }
        if (v < 0 || v >= g.order())
            throw ParseError("partition family line " + std::to_string(line_no) +
                             ": vertex " + std::to_string(v) + " out of range");
        if (seen[static_cast<std::size_t>(v)])
            throw ParseError("partition family line " + std::to_string(line_no) +
                             ": duplicate vertex " + std::to_string(v));
        seen[static_cast<std::size_t>(v)] = true;
        std::string rest = line.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            if (std::isspace(static_cast<unsigned char>(rest[pos])) || rest[pos] == '|') {
                ++pos;
                continue;
            }
            if (rest[pos] != '{')
                throw ParseError("partition family line " + std::to_string(line_no) +
                                 ": expected '{' in block list");
            std::size_t close = rest.find('}', pos);
            if (close == std::string::npos)
                throw ParseError("partition family line " + std::to_string(line_no) + ": missing '}'");
            VertexSet block(g.order());
            std::istringstream items(rest.substr(pos + 1, close - pos - 1));
            std::string item;
            while (std::getline(items, item, ',')) {
                if (item.find_first_not_of(" \t") == std::string::npos) continue;
                int member;
                try {
                    member = std::stoi(item);
                } catch (const std::exception&) {
                    throw ParseError("partition family line " + std::to_string(line_no) +
                                     ": bad block member \"" + item + "\"");
                }
                if (member < 0 || member >= g.order())
                    throw ParseError("partition family line " + std::to_string(line_no) +
                                     ": block member " + std::to_string(member) + " out of range");
                block.add(member);
            }
            p.blocks[static_cast<std::size_t>(v)].push_back(block);
            pos = close + 1;
        }
    }
    for (int v = 0; v < g.order(); ++v)
        if (!seen[static_cast<std::size_t>(v)])
            throw ParseError("partition family: no line for vertex " + std::to_string(v));
    return p;
}

std::string to_text(const PartitionFamily& p) {
    std::string out;
    for (std::size_t v = 0; v < p.blocks.size(); ++v) {
        out += std::to_string(v) + ":";
        for (std::size_t b = 0; b < p.blocks[v].size(); ++b) {
            out += b == 0 ? " " : "|";
            out += p.blocks[v][b].to_string();
        }
        out += "\n";
    }
    return out;
}

PartitionFamily random_partition_family(const Graph& g, Rng& rng) {
    PartitionFamily p;
    p.blocks.resize(static_cast<std::size_t>(g.order()));
    for (int v = 0; v < g.order(); ++v)
        p.blocks[static_cast<std::size_t>(v)] =
            pick_uniform_partition(g.order(), g.neighbors(v).to_vector(), rng);
    return p;
}

PartitionFamily random_refinement(const Graph& g, const PartitionFamily& p, Rng& rng) {
    PartitionFamily out;
    out.blocks.resize(p.blocks.size());
    for (std::size_t v = 0; v < p.blocks.size(); ++v)
        for (const VertexSet& block : p.blocks[v])
            for (const VertexSet& piece : pick_uniform_partition(g.order(), block.to_vector(), rng))
                out.blocks[v].push_back(piece);
    return out;
}

void for_each_partition_family(const Graph& g,
                               const std::function<void(const PartitionFamily&)>& f) {
    const int n = g.order();
    PartitionFamily current;
    current.blocks.resize(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int v) -> void {
        if (v == n) {
            f(current);
            return;
        }
        for_each_partition_of(n, g.neighbors(v).to_vector(), [&](const std::vector<VertexSet>& part) {
            current.blocks[static_cast<std::size_t>(v)] = part;
            self(self, v + 1);
        });
        current.blocks[static_cast<std::size_t>(v)].clear();
    };
    rec(rec, 0);
}

void for_each_proper_coarsening(const Graph& g, const PartitionFamily& p,
                                const std::function<void(const PartitionFamily&)>& f) {
    const int n = g.order();
    PartitionFamily current;
    current.blocks.resize(static_cast<std::size_t>(n));
    auto rec = [&](auto&& self, int v, bool changed) -> void {
        if (v == n) {
            if (changed) f(current);
            return;
        }
        const auto& own = p.blocks[static_cast<std::size_t>(v)];
        std::vector<int> block_ids(own.size());
        for (std::size_t i = 0; i < own.size(); ++i) block_ids[i] = static_cast<int>(i);
        for_each_partition_of(static_cast<int>(std::max<std::size_t>(own.size(), 1)), block_ids,
                              [&](const std::vector<VertexSet>& grouping) {
                                  std::vector<VertexSet> merged;
                                  for (const VertexSet& group : grouping) {
                                      VertexSet unioned(g.order());
                                      for (int id : group) unioned |= own[static_cast<std::size_t>(id)];
                                      merged.push_back(unioned);
                                  }
                                  bool own_changed = merged.size() != own.size();
                                  current.blocks[static_cast<std::size_t>(v)] = std::move(merged);
                                  self(self, v + 1, changed || own_changed);
                              });
        current.blocks[static_cast<std::size_t>(v)].clear();
    };
    rec(rec, 0, false);
}

}  // namespace certidom
