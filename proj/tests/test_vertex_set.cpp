#include <doctest.h>

#include "certidom/vertex_set.hpp"

using certidom::VertexSet;

TEST_CASE("vertex set basics") {
    VertexSet s = VertexSet::of(6, {0, 3, 5});
    CHECK(s.size() == 3);
    CHECK(s.contains(3));
    CHECK(!s.contains(1));
    CHECK(s.to_vector() == std::vector<int>{0, 3, 5});
    CHECK(s.to_string() == "{0,3,5}");
    CHECK(s.first() == 0);
    CHECK(s.next_after(0) == 3);
    CHECK(s.next_after(5) == -1);

    s.remove(3);
    CHECK(s == VertexSet::of(6, {0, 5}));
    CHECK(s.complement() == VertexSet::of(6, {1, 2, 3, 4}));
}

TEST_CASE("vertex set algebra") {
    VertexSet a = VertexSet::of(5, {0, 1, 3});
    VertexSet b = VertexSet::of(5, {1, 2});
    CHECK((a | b) == VertexSet::of(5, {0, 1, 2, 3}));
    CHECK((a & b) == VertexSet::of(5, {1}));
    CHECK((a - b) == VertexSet::of(5, {0, 3}));
    CHECK((a ^ b) == VertexSet::of(5, {0, 2, 3}));
    CHECK(VertexSet::of(5, {1}).subset_of(a));
    CHECK(!a.subset_of(b));
    CHECK(VertexSet::all(5).size() == 5);
    CHECK(VertexSet(5).empty());
}

TEST_CASE("lexicographic order compares ascending member lists") {
    auto of = [](std::initializer_list<int> vs) { return VertexSet::of(8, vs); };
    CHECK(VertexSet::lex_less(of({0, 3}), of({1, 2})));
    CHECK(!VertexSet::lex_less(of({1, 2}), of({0, 3})));
    CHECK(VertexSet::lex_less(of({0}), of({0, 1})));
    CHECK(!VertexSet::lex_less(of({0, 2}), of({0})));
    CHECK(VertexSet::lex_less(of({2}), of({0, 2})) == false);
    CHECK(VertexSet::lex_less(of({0, 2}), of({2})));
    CHECK(!VertexSet::lex_less(of({1, 4}), of({1, 4})));
}

TEST_CASE("iteration visits ascending members") {
    std::vector<int> seen;
    for (int v : VertexSet::of(10, {7, 2, 9})) seen.push_back(v);
    CHECK(seen == std::vector<int>{2, 7, 9});
}
