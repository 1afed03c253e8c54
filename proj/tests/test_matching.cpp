#include <catch2/catch_amalgamated.hpp>

#include "clutter/fixtures.hpp"
#include "clutter/matching.hpp"
#include "clutter/oracles.hpp"
#include "clutter/testgen.hpp"

using namespace clutter;

TEST_CASE("maximum matching: frozen examples") {
    Clutter p4 = fixtures::path4();
    Matching m = maximum_edge_matching(p4);
    REQUIRE(m.size() == 2); // exhaustive over edge subsets
    CHECK(m.edges[0] == VertexSet(4, {0, 1}));
    CHECK(m.edges[1] == VertexSet(4, {2, 3}));
    CHECK(m.perfect);
    CHECK(m.konig_type);

    // the nine-vertex example: the four independent two-vertex edges win
    Clutter nine = fixtures::nine_vertex();
    Matching m9 = maximum_edge_matching(nine);
    CHECK(m9.size() == 4);
    CHECK_FALSE(m9.perfect);

    Clutter single = Clutter::from_member_lists({"a", "b"}, {{0, 1}});
    CHECK(maximum_edge_matching(single).size() == 1);
}

TEST_CASE("maximum matching agrees with the edge-subset oracle") {
    testgen::Rng rng(31);
    for (int t = 0; t < 60; ++t) {
        Clutter c = testgen::random_clutter(rng, 10, 10);
        auto picked = oracles::max_matching_by_subset_scan(c);
        Matching m = maximum_edge_matching(c);
        REQUIRE(m.size() == static_cast<int>(picked.size()));
        for (size_t i = 0; i < picked.size(); ++i) CHECK(m.edges[i] == c.edge(picked[i]));
    }
}

TEST_CASE("Konig property") {
    CHECK(has_konig_property(fixtures::nine_vertex()));
    CHECK_FALSE(has_konig_property(fixtures::triangle())); // matching 1, cover 2
    CHECK(has_konig_property(fixtures::path4()));
}

TEST_CASE("Konig-type perfect matching search") {
    Clutter p4 = fixtures::path4();
    auto m = find_perfect_matching_konig(p4);
    REQUIRE(m.has_value());
    CHECK(m->edges == std::vector<VertexSet>{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})});

    CHECK_FALSE(find_perfect_matching_konig(fixtures::nine_vertex()).has_value());

    // two-block complete admissible instance: x1y1, x2y2, x1y2
    Clutter cau22 = Clutter::from_member_lists({"x1", "x2", "y1", "y2"}, {{0, 2}, {1, 3}, {0, 3}});
    auto m22 = find_perfect_matching_konig(cau22);
    REQUIRE(m22.has_value());
    CHECK(m22->edges == std::vector<VertexSet>{VertexSet(4, {0, 2}), VertexSet(4, {1, 3})});
}

TEST_CASE("returned Konig matchings partition the universe at covering-number size") {
    testgen::Rng rng(77);
    for (int t = 0; t < 60; ++t) {
        Clutter c = testgen::random_clutter(rng, 10, 8);
        auto m = find_perfect_matching_konig(c);
        if (!m) continue;
        CHECK(m->size() == covering_number(c));
        CHECK(m->covered(c.vertex_count()) == c.universe());
        CHECK(m->konig_type);
        // a clutter with a Konig-type perfect matching has the Konig property
        CHECK(has_konig_property(c));
    }
}

TEST_CASE("unmixed + Konig property + no isolated vertices gives a Konig-type matching") {
    testgen::Rng rng(123);
    int hits = 0;
    for (int t = 0; t < 400 && hits < 40; ++t) {
        Clutter c = testgen::random_clutter(rng, 9, 7);
        if (!is_unmixed(c) || !has_konig_property(c)) continue;
        ++hits;
        CHECK(find_perfect_matching_konig(c).has_value());
    }
    CHECK(hits > 0);
}

TEST_CASE("make_matching validates membership and disjointness") {
    Clutter p4 = fixtures::path4();
    CHECK_THROWS_AS(make_matching(p4, {VertexSet(4, {0, 2})}), validation_error);
    CHECK_THROWS_AS(make_matching(p4, {VertexSet(4, {0, 1}), VertexSet(4, {1, 2})}),
                    validation_error);
}
