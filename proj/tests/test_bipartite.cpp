#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "clutter/bipartite.hpp"
#include "clutter/fixtures.hpp"
#include "clutter/testgen.hpp"

using namespace clutter;

namespace {

bool same_facet_set(std::vector<VertexSet> a, std::vector<VertexSet> b) {
    std::sort(a.begin(), a.end(), VertexSet::canonical_less);
    std::sort(b.begin(), b.end(), VertexSet::canonical_less);
    return a == b;
}

Clutter triangle_free_example() {
    // x1y1, x2y2, x1y2
    return Clutter::from_member_lists({"x1", "x2", "y1", "y2"}, {{0, 2}, {1, 3}, {0, 3}});
}

} // namespace

TEST_CASE("bipartition: frozen examples") {
    auto p4 = bipartition(fixtures::path4());
    REQUIRE(p4.has_value());
    CHECK(p4->first == VertexSet(4, {0, 2}));
    CHECK(p4->second == VertexSet(4, {1, 3}));

    CHECK_FALSE(bipartition(fixtures::triangle()).has_value());

    auto k = bipartition(fixtures::k22());
    REQUIRE(k.has_value());
    CHECK(k->first == VertexSet(4, {0, 1}));
    CHECK(k->second == VertexSet(4, {2, 3}));

    CHECK_THROWS_AS(bipartition(fixtures::nine_vertex()), validation_error);
}

TEST_CASE("h1 ordering: frozen examples") {
    Clutter g = triangle_free_example();
    Matching m = make_matching(g, {VertexSet(4, {0, 2}), VertexSet(4, {1, 3})});
    auto order = h1_ordering(g, m);
    REQUIRE(order.has_value());
    CHECK(*order == std::vector<int>{0, 1}); // identity works

    Clutter k = fixtures::k22();
    Matching mk = make_matching(k, {VertexSet(4, {0, 2}), VertexSet(4, {1, 3})});
    CHECK_FALSE(h1_ordering(k, mk).has_value()); // forced 1<2 and 2<1

    Clutter pairs = Clutter::from_member_lists({"x1", "x2", "y1", "y2"}, {{0, 2}, {1, 3}});
    Matching mp = make_matching(pairs, {VertexSet(4, {0, 2}), VertexSet(4, {1, 3})});
    CHECK(h1_ordering(pairs, mp) == std::vector<int>{0, 1});
}

TEST_CASE("Herzog-Hibi certificate: frozen examples") {
    auto cert = herzog_hibi_cm(triangle_free_example());
    REQUIRE(cert.has_value());
    CHECK(cert->matching.perfect);
    CHECK(cert->order.size() == 2);

    CHECK_FALSE(herzog_hibi_cm(fixtures::k22()).has_value());

    auto doc = fixtures::bipartite_5x5();
    CHECK_FALSE(is_unmixed(doc.clutter));
    CHECK_FALSE(herzog_hibi_cm(doc.clutter).has_value());
}

TEST_CASE("skeleton shelling: frozen examples") {
    auto doc = fixtures::bipartite_5x5();
    Matching m = make_matching(doc.clutter, *doc.matching);
    auto order = skeleton_shelling(doc.clutter, m);
    REQUIRE(order.has_value());
    CHECK(order->facets.size() == 6);
    CHECK(order->pure());
    CHECK(same_facet_set(order->facets, pure_skeleton(stanley_reisner_facets(doc.clutter), 5)));

    Clutter k = fixtures::k22();
    Matching mk = make_matching(k, {VertexSet(4, {0, 2}), VertexSet(4, {1, 3})});
    CHECK_FALSE(skeleton_shelling(k, mk).has_value());

    Clutter pairs = Clutter::from_member_lists({"x1", "x2", "y1", "y2"}, {{0, 2}, {1, 3}});
    Matching mp = make_matching(pairs, {VertexSet(4, {0, 2}), VertexSet(4, {1, 3})});
    auto op = skeleton_shelling(pairs, mp);
    REQUIRE(op.has_value());
    CHECK(op->facets.size() == 4);
    CHECK(verify_shelling(op->facets).valid());
}

TEST_CASE("whisker: frozen examples") {
    Clutter wt = whisker(fixtures::triangle());
    CHECK(wt.vertex_count() == 6);
    CHECK(wt.edge_count() == 6);

    Clutter single = Clutter::from_member_lists({"a", "b"}, {{0, 1}});
    Clutter ws = whisker(single);
    CHECK(ws.vertex_count() == 4);
    REQUIRE(ws.edge_count() == 3);
    CHECK(ws.index_of("a'") >= 0);
    CHECK(ws.index_of("b'") >= 0);

    Clutter wp3 = whisker(fixtures::path3());
    CHECK(wp3.vertex_count() == 6);
    CHECK(wp3.edge_count() == 5);
    CHECK(is_unmixed(wp3));
    auto m = find_perfect_matching_konig(wp3);
    REQUIRE(m.has_value());
    auto order = recursive_shelling(wp3, *m);
    REQUIRE(order.has_value());
    CHECK(order->pure());

    CHECK_THROWS_AS(whisker(fixtures::nine_vertex()), validation_error);
}

TEST_CASE("unmixed bipartite witness: frozen examples") {
    auto wk = unmixed_bipartite_check(fixtures::k22());
    REQUIRE(wk.has_value());
    CHECK(wk->edges == std::vector<VertexSet>{VertexSet(4, {0, 2}), VertexSet(4, {1, 3})});

    CHECK_FALSE(unmixed_bipartite_check(fixtures::path3()).has_value());
    CHECK(unmixed_bipartite_check(fixtures::path4()).has_value());
}

TEST_CASE("bipartite operations reject isolated vertices by default") {
    Clutter lonely = Clutter::from_member_lists({"a", "b", "c"}, {{0, 1}});
    CHECK_THROWS_AS(unmixed_bipartite_check(lonely), validation_error);
    CHECK_THROWS_AS(herzog_hibi_cm(lonely), validation_error);
    CHECK_FALSE(unmixed_bipartite_check(lonely, true).has_value()); // no perfect matching exists
}

TEST_CASE("property: h1, the skeleton construction, and the exhaustive search agree") {
    testgen::Rng rng(14001);
    int seen_shellable = 0, seen_obstructed = 0;
    for (int t = 0; t < 120; ++t) {
        auto inst = testgen::random_bipartite_with_matching(rng, 6);
        auto facets = pure_skeleton(stanley_reisner_facets(inst.graph), inst.matching.size());
        bool h1 = h1_ordering(inst.graph, inst.matching).has_value();
        auto constructed = skeleton_shelling(inst.graph, inst.matching);
        CHECK(h1 == constructed.has_value());
        if (constructed) {
            ++seen_shellable;
            CHECK(constructed->pure());
            CHECK(same_facet_set(constructed->facets, facets));
        } else {
            ++seen_obstructed;
        }
        if (facets.size() <= 9)
            CHECK(bruteforce_shelling(facets).has_value() == h1);
    }
    CHECK(seen_shellable > 0);
    CHECK(seen_obstructed > 0);
}

TEST_CASE("property: the certificate exists iff unmixed and skeleton shellable") {
    testgen::Rng rng(14002);
    for (int t = 0; t < 100; ++t) {
        auto inst = testgen::random_bipartite_with_matching(rng, 6);
        bool cert = herzog_hibi_cm(inst.graph).has_value();
        bool um = is_unmixed(inst.graph);
        bool shellable = skeleton_shelling(inst.graph, inst.matching).has_value();
        CHECK(cert == (um && shellable));
    }
}

TEST_CASE("property: the unmixed-bipartite witness tracks unmixedness") {
    testgen::Rng rng(14003);
    for (int t = 0; t < 100; ++t) {
        auto inst = testgen::random_bipartite_with_matching(rng, 5);
        CHECK(unmixed_bipartite_check(inst.graph).has_value() == is_unmixed(inst.graph));
    }
}

TEST_CASE("property: whiskered graphs satisfy the ordering condition and shell") {
    testgen::Rng rng(14004);
    for (int t = 0; t < 60; ++t) {
        Clutter g = testgen::random_graph(rng, 6);
        Clutter w = whisker(g);
        const int n = g.vertex_count();
        std::vector<VertexSet> wm;
        for (int v = 0; v < n; ++v) wm.push_back(VertexSet(2 * n, {v, n + v}));
        Matching m = make_matching(w, wm, covering_number(w));
        REQUIRE(m.konig_type);
        CHECK(ordering_condition(w, m));
        auto order = recursive_shelling(w, m);
        REQUIRE(order.has_value());
        CHECK(order->pure());
    }
}
