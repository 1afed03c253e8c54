#include <catch2/catch_amalgamated.hpp>

#include "clutter/fixtures.hpp"
#include "clutter/minors.hpp"
#include "clutter/structure.hpp"
#include "clutter/testgen.hpp"

using namespace clutter;

TEST_CASE("contract: frozen examples") {
    Clutter p4 = fixtures::path4();
    auto r = contract(p4, 1); // x2
    REQUIRE_FALSE(r.is_improper());
    CHECK(r.get().edges() == std::vector<VertexSet>{VertexSet(4, {0}), VertexSet(4, {2})});
    CHECK(r.get().isolated_vertices() == VertexSet(4, {1, 3}));

    Clutter single = Clutter::from_member_lists({"a", "b"}, {{0, 1}});
    CHECK(contract(single, 0).get().edges() == std::vector<VertexSet>{VertexSet(2, {1})});

    Clutter k = fixtures::k22();
    CHECK(contract(k, 0).get().edges() ==
          std::vector<VertexSet>{VertexSet(4, {2}), VertexSet(4, {3})});
}

TEST_CASE("contract of a singleton-edge vertex is improper") {
    Clutter c = Clutter::from_member_lists({"a", "b"}, {{0}, {1}});
    CHECK(contract(c, 0).is_improper());
    CHECK_THROWS_AS(contract(c, 0).get(), std::logic_error);
}

TEST_CASE("contract_set: frozen examples") {
    Clutter p4 = fixtures::path4();
    CHECK(contract_set(p4, VertexSet(4, {1, 2})).is_improper()); // x2 x3 is an edge
    CHECK(contract_set(p4, VertexSet(4, {2, 3})).is_improper()); // x3 x4 is an edge
    Clutter two = Clutter::from_member_lists({"z1", "z2", "w"}, {{0, 1}, {1, 2}});
    auto r = contract_set(two, VertexSet(3, {1}));
    REQUIRE_FALSE(r.is_improper());
    CHECK(r.get().edges() == std::vector<VertexSet>{VertexSet(3, {0}), VertexSet(3, {2})});
}

TEST_CASE("delete_vertex: frozen examples") {
    Clutter p4 = fixtures::path4();
    CHECK(delete_vertex(p4, 1).edges() == std::vector<VertexSet>{VertexSet(4, {2, 3})});
    Clutter single = Clutter::from_member_lists({"a", "b"}, {{0, 1}});
    CHECK(delete_vertex(single, 0).edge_count() == 0);
    Clutter k = fixtures::k22();
    CHECK(delete_vertex(k, 0).edges() ==
          std::vector<VertexSet>{VertexSet(4, {1, 2}), VertexSet(4, {1, 3})});
}

TEST_CASE("free vertices") {
    CHECK(free_vertices(fixtures::path4()) == VertexSet(4, {0, 3}));
    CHECK(free_vertices(fixtures::k22()).empty());
    Clutter single = Clutter::from_member_lists({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(free_vertices(single) == VertexSet::full(3));
}

TEST_CASE("all c-minors have a free vertex") {
    CHECK(all_cminors_have_free_vertex(fixtures::path4()));
    CHECK_FALSE(all_cminors_have_free_vertex(fixtures::k22()));
    Clutter single = Clutter::from_member_lists({"a", "b", "c"}, {{0, 1, 2}});
    CHECK(all_cminors_have_free_vertex(single));
}

TEST_CASE("intersect_covers: frozen examples") {
    Clutter p4 = fixtures::path4();
    auto r1 = intersect_covers(p4, {VertexSet(4, {1, 2})});
    CHECK(r1.edges() == std::vector<VertexSet>{VertexSet(4, {1}), VertexSet(4, {2})});

    CHECK(intersect_covers(p4, minimal_vertex_covers(p4)) == p4); // blocker involution
    Clutter k = fixtures::k22();
    CHECK(intersect_covers(k, minimal_vertex_covers(k)) == k);

    CHECK_THROWS_AS(intersect_covers(p4, {}), validation_error);
    CHECK_THROWS_AS(intersect_covers(p4, {VertexSet(4, {0})}), validation_error);
}

TEST_CASE("contracting an isolated vertex is the identity") {
    Clutter c = Clutter::from_member_lists({"a", "b", "c"}, {{0, 1}});
    auto r = contract(c, 2);
    REQUIRE_FALSE(r.is_improper());
    CHECK(r.get() == c);
}

TEST_CASE("property: contract_set is order independent") {
    testgen::Rng rng(55);
    for (int t = 0; t < 50; ++t) {
        Clutter c = testgen::random_clutter(rng, 10, 8);
        const int n = c.vertex_count();
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (testgen::uniform_int(rng, 0, 2) == 0) s.insert(v);
        if (s.empty()) continue;

        auto joint = contract_set(c, s);
        // iterate one vertex at a time in two different orders
        auto iterate = [&](std::vector<int> order) -> MinorOutcome {
            Clutter cur = c;
            for (int v : order) {
                auto step = contract(cur, v);
                if (step.is_improper()) return MinorOutcome::improper();
                cur = step.get();
            }
            return MinorOutcome(cur);
        };
        auto fwd = iterate(s.members());
        auto members = s.members();
        std::reverse(members.begin(), members.end());
        auto rev = iterate(members);

        CHECK(joint.is_improper() == fwd.is_improper());
        CHECK(joint.is_improper() == rev.is_improper());
        if (!joint.is_improper()) {
            CHECK(joint.get() == fwd.get());
            CHECK(joint.get() == rev.get());
        }
    }
}

TEST_CASE("property: cover intersections inherit a Konig-type matching") {
    testgen::Rng rng(808);
    for (int t = 0; t < 60; ++t) {
        auto inst = testgen::random_konig_instance(rng, 10);
        if (!is_unmixed(inst.clutter)) continue;
        auto covers = minimal_vertex_covers(inst.clutter);
        // random nonempty subfamily
        std::vector<VertexSet> sub;
        for (const auto& s : covers)
            if (testgen::uniform_int(rng, 0, 1) == 0) sub.push_back(s);
        if (sub.empty()) sub.push_back(covers[0]);

        Clutter reduced = intersect_covers(inst.clutter, sub);
        VertexSet support = reduced.support();
        const int g = inst.matching.size();
        CHECK(covering_number(reduced) == g);
        for (const auto& e : inst.matching.edges) {
            VertexSet shrunk = e & support;
            CHECK(reduced.has_edge(shrunk));       // (a) e_i' inside e_i
            CHECK((e - shrunk).disjoint_from(support)); // (b) the rest is isolated
        }
    }
}

TEST_CASE("property: colon by a matching-edge tail equals a cover intersection") {
    testgen::Rng rng(909);
    for (int t = 0; t < 60; ++t) {
        auto inst = testgen::random_konig_instance(rng, 10);
        if (!is_unmixed(inst.clutter)) continue;
        for (const auto& e1 : inst.matching.edges) {
            if (e1.size() < 2) continue;
            int x1 = e1.first();
            VertexSet tail = e1;
            tail.erase(x1);
            std::vector<VertexSet> with_x1;
            for (const auto& cover : minimal_vertex_covers(inst.clutter))
                if (cover.contains(x1)) with_x1.push_back(cover);
            if (with_x1.empty()) continue;
            auto lhs = intersect_covers(inst.clutter, with_x1);
            auto rhs = contract_set(inst.clutter, tail);
            REQUIRE_FALSE(rhs.is_improper());
            CHECK(lhs == rhs.get());
        }
    }
}
