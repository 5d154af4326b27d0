#include "certidom/families.hpp"

#include <charconv>
#include <vector>

#include "certidom/corona.hpp"
#include "certidom/taxonomy.hpp"

namespace certidom {

namespace {

int parse_int(std::string_view s, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc{} || ptr != s.data() + s.size())
        throw ParseError("family spec: bad " + std::string(what) + " \"" + std::string(s) + "\"");
    return value;
}

const char* kind_name(FamilySpec::Kind k) {
    switch (k) {
        case FamilySpec::Kind::Path: return "path";
        case FamilySpec::Kind::Cycle: return "cycle";
        case FamilySpec::Kind::Complete: return "complete";
        case FamilySpec::Kind::Star: return "star";
        case FamilySpec::Kind::CompleteBipartite: return "kbip";
        case FamilySpec::Kind::JoinK2: return "joink2";
        case FamilySpec::Kind::JoinK2bar: return "joink2bar";
        case FamilySpec::Kind::CoronaOf: return "corona";
        case FamilySpec::Kind::SimpleDiademOf: return "simplediadem";
        case FamilySpec::Kind::DiademOf: return "diadem";
    }
    return "?";
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
    std::size_t colon = text.find(':');
    std::string_view head = colon == std::string_view::npos ? text : text.substr(0, colon);
    std::string_view rest = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);

    FamilySpec spec;
    if (head == "corona" || head == "simplediadem" || head == "diadem") {
        if (rest.empty()) throw ParseError("family spec: \"" + std::string(head) + "\" needs a base family");
        spec.kind = head == "corona" ? Kind::CoronaOf
                    : head == "simplediadem" ? Kind::SimpleDiademOf
                                             : Kind::DiademOf;
        spec.base = std::make_shared<FamilySpec>(parse(rest));
        if (spec.kind != Kind::CoronaOf && spec.base->kind != Kind::CoronaOf)
            throw ParseError("family spec: diadem kinds need a corona base, got \"" +
                             std::string(rest) + "\"");
        return spec;
    }

    if (rest.empty()) throw ParseError("family spec: missing parameters in \"" + std::string(text) + "\"");
    if (head == "path") spec.kind = Kind::Path;
    else if (head == "cycle") spec.kind = Kind::Cycle;
    else if (head == "complete") spec.kind = Kind::Complete;
    else if (head == "star") spec.kind = Kind::Star;
    else if (head == "kbip") spec.kind = Kind::CompleteBipartite;
    else if (head == "joink2") spec.kind = Kind::JoinK2;
    else if (head == "joink2bar") spec.kind = Kind::JoinK2bar;
    else throw ParseError("family spec: unknown family \"" + std::string(head) + "\"");

    if (spec.kind == Kind::CompleteBipartite) {
        std::size_t comma = rest.find(',');
        if (comma == std::string_view::npos)
            throw ParseError("family spec: kbip needs two parameters \"m,n\"");
        spec.a = parse_int(rest.substr(0, comma), "m");
        spec.b = parse_int(rest.substr(comma + 1), "n");
    } else {
        spec.a = parse_int(rest, "n");
    }
    return spec;
}

std::string FamilySpec::to_string() const {
    std::string out = kind_name(kind);
    if (base) return out + ":" + base->to_string();
    if (kind == Kind::CompleteBipartite)
        return out + ":" + std::to_string(a) + "," + std::to_string(b);
    return out + ":" + std::to_string(a);
}

Graph build_family(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case Kind::Path: {
            if (spec.a < 1) throw std::invalid_argument("path needs n >= 1");
            for (int i = 0; i + 1 < spec.a; ++i) edges.emplace_back(i, i + 1);
            return Graph::from_edge_list(spec.a, edges);
        }
        case Kind::Cycle: {
            if (spec.a < 3) throw std::invalid_argument("cycle needs n >= 3");
            for (int i = 0; i < spec.a; ++i) edges.emplace_back(i, (i + 1) % spec.a);
            return Graph::from_edge_list(spec.a, edges);
        }
        case Kind::Complete: {
            if (spec.a < 1) throw std::invalid_argument("complete needs n >= 1");
            for (int i = 0; i < spec.a; ++i)
                for (int j = i + 1; j < spec.a; ++j) edges.emplace_back(i, j);
            return Graph::from_edge_list(spec.a, edges);
        }
        case Kind::Star: {
            if (spec.a < 1) throw std::invalid_argument("star needs n >= 1");
            for (int i = 1; i <= spec.a; ++i) edges.emplace_back(0, i);
            return Graph::from_edge_list(spec.a + 1, edges);
        }
        case Kind::CompleteBipartite: {
            if (spec.a < 1 || spec.b < spec.a)
                throw std::invalid_argument("kbip needs 1 <= m <= n");
            for (int i = 0; i < spec.a; ++i)
                for (int j = 0; j < spec.b; ++j) edges.emplace_back(i, spec.a + j);
            return Graph::from_edge_list(spec.a + spec.b, edges);
        }
        case Kind::JoinK2:
        case Kind::JoinK2bar: {
            if (spec.a < 3) throw std::invalid_argument("join forms need n >= 3");
            if (spec.kind == Kind::JoinK2) edges.emplace_back(0, 1);
            for (int v = 2; v < spec.a; ++v) {
                edges.emplace_back(0, v);
                edges.emplace_back(1, v);
            }
            return Graph::from_edge_list(spec.a, edges);
        }
        case Kind::CoronaOf:
            return corona_k1(build_family(*spec.base)).graph;
        case Kind::SimpleDiademOf:
        case Kind::DiademOf: {
            Graph corona = build_family(*spec.base);
            LeafSupportReport ls = leaf_support_report(corona);
            const int n = corona.order();
            edges = corona.edge_list();
            if (spec.kind == Kind::SimpleDiademOf) {
                int support = ls.supports.first();
                if (support < 0) throw std::invalid_argument("diadem base has no support");
                edges.emplace_back(n, support);
            } else {
                int leaf = ls.leaves.first();
                if (leaf < 0) throw std::invalid_argument("diadem base has no leaf");
                edges.emplace_back(n, leaf);
                edges.emplace_back(n, corona.neighbors(leaf).first());
            }
            return Graph::from_edge_list(n + 1, edges);
        }
    }
    throw std::invalid_argument("unhandled family kind");
}

ExpectedInvariants expected_invariants(const FamilySpec& spec) {
    using Kind = FamilySpec::Kind;
    ExpectedInvariants e;
    const int n = spec.a;
    switch (spec.kind) {
        case Kind::Path:
            e.gamma = ceil_div(n, 3);
            // gamma_cer(P_2) = 2 and gamma_cer(P_4) = 4: both are coronas, so
            // the ceil(n/3) form skips them
            if (n != 2 && n != 4) e.gamma_cer = ceil_div(n, 3);
            if (n >= 5) {
                e.upper_gamma_cer = (n - 1) / 2;
                e.upper_gamma = (n - 1) / 2 + 1;
            }
            break;
        case Kind::Cycle:
            e.gamma = ceil_div(n, 3);
            e.gamma_cer = ceil_div(n, 3);
            e.upper_gamma = n / 2;
            e.upper_gamma_cer = n / 2;
            break;
        case Kind::Complete:
            if (n != 2) {
                e.gamma = 1;
                e.gamma_cer = 1;
                e.upper_gamma = 1;
                e.upper_gamma_cer = 1;
            }
            break;
        case Kind::Star:
            e.upper_gamma = n;  // Gamma(K_{1,n}) = n, n >= 1
            if (n >= 2) {
                e.gamma = 1;
                e.gamma_cer = 1;
                e.upper_gamma_cer = 1;
            }
            break;
        case Kind::CompleteBipartite:
            if (spec.a >= 2) {
                e.gamma = 2;
                e.gamma_cer = 2;
                e.upper_gamma = spec.b;
                e.upper_gamma_cer = spec.b;
            } else {  // K_{1,n}: the star forms
                e.upper_gamma = spec.b;
                if (spec.b >= 2) {
                    e.gamma = 1;
                    e.gamma_cer = 1;
                    e.upper_gamma_cer = 1;
                }
            }
            break;
        case Kind::JoinK2:
        case Kind::JoinK2bar:
            e.upper_gamma_cer = n - 2;  // the order-(n-2) characterization
            if (spec.kind == Kind::JoinK2bar && n - 2 >= 2) {
                // K_{2,n-2} in disguise
                e.gamma = 2;
                e.gamma_cer = 2;
                e.upper_gamma = n - 2;
            }
            break;
        case Kind::CoronaOf: {
            int base_order = build_family(*spec.base).order();
            e.gamma = base_order;                  // gamma(G∘K1) = |V_G|
            e.gamma_cer = 2 * base_order;          // coronas: gamma_cer = order
            e.upper_gamma_cer = 2 * base_order;
            break;
        }
        case Kind::SimpleDiademOf:
        case Kind::DiademOf: {
            int order = build_family(spec).order();
            e.upper_gamma_cer = order - 2;
            break;
        }
    }
    return e;
}

}  // namespace certidom
