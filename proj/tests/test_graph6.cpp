#include <doctest.h>

#include "certidom/enumerate.hpp"
#include "certidom/graph6.hpp"

using certidom::encode_graph6;
using certidom::Graph;
using certidom::parse_graph6;
using certidom::ParseError;

TEST_CASE("decoding the hand-checked strings") {
    // 'A' = order 2, '_' = 63+32 carries a single leading 1 bit: the edge 0-1
    CHECK(parse_graph6("A_") == Graph::from_edge_list(2, {{0, 1}}));
    // 'D' = order 5, "??" = twelve zero bits
    Graph d = parse_graph6("D??");
    CHECK(d.order() == 5);
    CHECK(d.edge_count() == 0);
    CHECK(parse_graph6("@").order() == 1);
}

TEST_CASE("encoding matches the hand-checked strings") {
    CHECK(encode_graph6(Graph::from_edge_list(2, {{0, 1}})) == "A_");
    CHECK(encode_graph6(Graph::from_edge_list(5, {})) == "D??");
    CHECK(encode_graph6(Graph::from_edge_list(1, {})) == "@");
}

TEST_CASE("malformed input is rejected") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);           // empty
    CHECK_THROWS_AS(parse_graph6("D?"), ParseError);         // truncated bits
    CHECK_THROWS_AS(parse_graph6("D???"), ParseError);       // trailing byte
    CHECK_THROWS_AS(parse_graph6("A "), ParseError);         // byte below the range
    CHECK_THROWS_AS(parse_graph6("?"), ParseError);          // order 0
    CHECK_THROWS_AS(parse_graph6("~?A?"), ParseError);       // three-byte order 128 > 64
    CHECK_THROWS_AS(parse_graph6("~?"), ParseError);         // truncated order field
    CHECK_THROWS_AS(parse_graph6("~~????"), ParseError);     // eight-byte order form
    CHECK_THROWS_AS(parse_graph6("AO"), ParseError);         // nonzero padding for n=2
}

TEST_CASE("64-vertex orders use the long form and round-trip") {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i + 1 < 64; ++i) edges.emplace_back(i, i + 1);
    Graph p64 = Graph::from_edge_list(64, edges);
    std::string enc = encode_graph6(p64);
    CHECK(enc.substr(0, 1) == "~");
    CHECK(parse_graph6(enc) == p64);
}

TEST_CASE("round trip over every labeled graph up to order 6") {
    for (int n = 1; n <= 6; ++n)
        certidom::for_each_labeled_graph(n, false, [&](const Graph& g, std::uint64_t) {
            Graph back = parse_graph6(encode_graph6(g));
            REQUIRE(back == g);
            return true;
        });
}
