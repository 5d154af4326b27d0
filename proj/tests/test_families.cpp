#include <doctest.h>

#include "certidom/domination.hpp"
#include "certidom/families.hpp"
#include "certidom/taxonomy.hpp"

using namespace certidom;

TEST_CASE("family spec parsing round trips") {
    for (const char* text : {"path:5", "cycle:8", "complete:4", "star:6", "kbip:2,3",
                             "joink2:5", "joink2bar:5", "corona:path:3",
                             "simplediadem:corona:complete:2", "diadem:corona:complete:2"}) {
        FamilySpec spec = FamilySpec::parse(text);
        CHECK(spec.to_string() == text);
    }
    CHECK_THROWS_AS(FamilySpec::parse("blob:3"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("path"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("kbip:3"), ParseError);
    CHECK_THROWS_AS(FamilySpec::parse("diadem:path:3"), ParseError);  // base must be a corona
    CHECK_THROWS_AS(FamilySpec::parse("path:x"), ParseError);
}

TEST_CASE("family construction") {
    Graph p5 = build_family(FamilySpec::parse("path:5"));
    CHECK(p5.order() == 5);
    CHECK(p5.edge_count() == 4);

    Graph k23 = build_family(FamilySpec::parse("kbip:2,3"));
    CHECK(k23.order() == 5);
    CHECK(k23.edge_count() == 6);
    CHECK(!k23.has_edge(0, 1));
    CHECK(k23.has_edge(0, 2));

    Graph star = build_family(FamilySpec::parse("star:4"));
    CHECK(star.order() == 5);
    CHECK(star.degree(0) == 4);

    Graph join = build_family(FamilySpec::parse("joink2:5"));
    CHECK(join.degree(0) == 4);
    CHECK(join.has_edge(0, 1));
    Graph joinbar = build_family(FamilySpec::parse("joink2bar:5"));
    CHECK(!joinbar.has_edge(0, 1));
    CHECK(joinbar.degree(0) == 3);

    // simple diadem over the corona of K2: P4 plus a vertex on one support
    Graph sd = build_family(FamilySpec::parse("simplediadem:corona:complete:2"));
    CHECK(sd.order() == 5);
    CHECK(sd.edge_count() == 4);
    CHECK(classify_structure(sd).label == StructureLabel::SimpleDiadem);

    CHECK_THROWS_AS(build_family(FamilySpec::parse("cycle:2")), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilySpec::parse("kbip:3,2")), std::invalid_argument);
    CHECK_THROWS_AS(build_family(FamilySpec::parse("joink2:2")), std::invalid_argument);
}

TEST_CASE("expected closed forms") {
    ExpectedInvariants c8 = expected_invariants(FamilySpec::parse("cycle:8"));
    CHECK(c8.gamma == 3);
    CHECK(c8.gamma_cer == 3);
    CHECK(c8.upper_gamma == 4);
    CHECK(c8.upper_gamma_cer == 4);

    ExpectedInvariants s6 = expected_invariants(FamilySpec::parse("star:6"));
    CHECK(s6.upper_gamma == 6);
    CHECK(s6.gamma == 1);
    CHECK(s6.gamma_cer == 1);
    CHECK(s6.upper_gamma_cer == 1);

    ExpectedInvariants k2 = expected_invariants(FamilySpec::parse("complete:2"));
    CHECK(!k2.gamma.has_value());
    CHECK(!k2.gamma_cer.has_value());
    // the excluded case really is an exception: the solver values differ
    Graph g = build_family(FamilySpec::parse("complete:2"));
    CHECK(gamma_value(g) == 1);
    CHECK(gamma_cer_value(g) == 2);

    // the path gamma_cer form skips its two corona exceptions
    CHECK(!expected_invariants(FamilySpec::parse("path:2")).gamma_cer.has_value());
    CHECK(!expected_invariants(FamilySpec::parse("path:4")).gamma_cer.has_value());
    CHECK(expected_invariants(FamilySpec::parse("path:4")).gamma == 2);
    CHECK(expected_invariants(FamilySpec::parse("path:7")).upper_gamma == 4);
    CHECK(expected_invariants(FamilySpec::parse("path:7")).upper_gamma_cer == 3);
}

TEST_CASE("diadem builds classify as themselves") {
    for (const char* base : {"complete:2", "path:3", "cycle:3", "complete:3"}) {
        FamilySpec corona = FamilySpec::parse(("corona:" + std::string(base)).c_str());
        Graph c = build_family(corona);
        CHECK(classify_structure(c).label == StructureLabel::Corona);

        FamilySpec sd = FamilySpec::parse(("simplediadem:corona:" + std::string(base)).c_str());
        CHECK(classify_structure(build_family(sd)).label == StructureLabel::SimpleDiadem);

        FamilySpec d = FamilySpec::parse(("diadem:corona:" + std::string(base)).c_str());
        CHECK(classify_structure(build_family(d)).label == StructureLabel::Diadem);
    }
}

TEST_CASE("coronas have certified numbers equal to their order") {
    for (const char* base : {"complete:1", "complete:2", "path:3", "cycle:4", "star:2"}) {
        Graph c = build_family(FamilySpec::parse(("corona:" + std::string(base)).c_str()));
        ExpectedInvariants e =
            expected_invariants(FamilySpec::parse(("corona:" + std::string(base)).c_str()));
        CHECK(gamma_cer_value(c) == c.order());
        CHECK(upper_gamma_cer_value(c) == c.order());
        CHECK(e.gamma_cer == c.order());
        CHECK(e.upper_gamma_cer == c.order());
        CHECK(gamma_value(c) == c.order() / 2);
    }
}

TEST_CASE("diadems have upper certified number order minus two") {
    for (const char* spec : {"simplediadem:corona:complete:2", "diadem:corona:complete:2",
                             "simplediadem:corona:path:3", "diadem:corona:cycle:3",
                             "joink2:5", "joink2bar:6"}) {
        Graph g = build_family(FamilySpec::parse(spec));
        ExpectedInvariants e = expected_invariants(FamilySpec::parse(spec));
        REQUIRE(e.upper_gamma_cer.has_value());
        CHECK(*e.upper_gamma_cer == g.order() - 2);
        CHECK(upper_gamma_cer_value(g) == g.order() - 2);
    }
}

TEST_CASE("golden grid: expected values match the solvers (unit-sized slice)") {
    std::vector<std::string> specs;
    for (int n = 3; n <= 10; ++n) specs.push_back("path:" + std::to_string(n));
    for (int n = 3; n <= 10; ++n) specs.push_back("cycle:" + std::to_string(n));
    for (int n = 1; n <= 6; ++n)
        if (n != 2) specs.push_back("complete:" + std::to_string(n));
    for (int n = 2; n <= 6; ++n) specs.push_back("star:" + std::to_string(n));
    for (int m = 2; m <= 4; ++m)
        for (int n = m; n <= 4; ++n)
            specs.push_back("kbip:" + std::to_string(m) + "," + std::to_string(n));
    for (const std::string& text : specs) {
        FamilySpec spec = FamilySpec::parse(text);
        Graph g = build_family(spec);
        ExpectedInvariants e = expected_invariants(spec);
        INFO("family ", text);
        if (e.gamma) CHECK(gamma_value(g) == *e.gamma);
        if (e.gamma_cer) CHECK(gamma_cer_value(g) == *e.gamma_cer);
        if (e.upper_gamma) CHECK(upper_gamma_value(g) == *e.upper_gamma);
        if (e.upper_gamma_cer) CHECK(upper_gamma_cer_value(g) == *e.upper_gamma_cer);
    }
}
