#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "clutter/admissible.hpp"
#include "clutter/fixtures.hpp"
#include "clutter/testgen.hpp"

using namespace clutter;

namespace {

AdmissibleStructure structure_of(const ClutterDocument& doc) {
    return make_admissible_structure(doc.clutter.vertex_count(), *doc.classes, *doc.matching);
}

/// Random staircase structure: matching part j occupies classes
/// 1..h_j, so every part is strictly admissible by construction.
AdmissibleStructure random_structure(testgen::Rng& rng, int max_g = 4, int max_d = 4,
                                     std::vector<std::string>* labels_out = nullptr) {
    const int g = testgen::uniform_int(rng, 1, max_g);
    const int d = testgen::uniform_int(rng, 1, max_d);
    std::vector<int> height(g);
    height[testgen::uniform_int(rng, 0, g - 1)] = d; // some part reaches the top class
    for (int j = 0; j < g; ++j)
        if (height[j] == 0) height[j] = testgen::uniform_int(rng, 1, d);
    int n = 0;
    for (int j = 0; j < g; ++j) n += height[j];
    std::vector<VertexSet> classes(d, VertexSet(n)), matching(g, VertexSet(n));
    std::vector<std::string> labels;
    int v = 0;
    for (int j = 0; j < g; ++j)
        for (int i = 0; i < height[j]; ++i, ++v) {
            classes[i].insert(v);
            matching[j].insert(v);
            labels.push_back("x" + std::to_string(i + 1) + "_" + std::to_string(j + 1));
        }
    if (labels_out) *labels_out = labels;
    return make_admissible_structure(n, std::move(classes), std::move(matching));
}

std::vector<std::string> facet_labels(const Clutter& c, VertexSet f) {
    std::vector<std::string> out;
    for (int v : f.members()) out.push_back(c.label(v));
    return out;
}

} // namespace

TEST_CASE("is_admissible_set on the 3x3 grid") {
    auto gen = generate_complete_admissible_uniform(3, 3);
    const auto& a = gen.structure;
    auto at = [&](int i, int j) { return i * 3 + j; };
    CHECK(is_admissible_set(a, VertexSet(9, {at(0, 0), at(1, 1), at(2, 1)}))); // x1 y2 z2
    CHECK_FALSE(is_admissible_set(a, VertexSet(9, {at(0, 0), at(2, 1)})));     // class gap
    CHECK(is_admissible_set(a, VertexSet(9, {at(0, 0), at(2, 1)}), true));     // gap allowed
    CHECK_FALSE(is_admissible_set(a, VertexSet(9, {at(0, 1), at(1, 0)})));     // j decreasing
    CHECK_THROWS_AS(is_admissible_set(a, VertexSet(9, {at(0, 0), at(0, 1)})), validation_error);
}

TEST_CASE("is_admissible_set on the gap structure") {
    auto gap = fixtures::gap_example();
    auto a = structure_of(gap);
    const Clutter& c = gap.clutter;
    VertexSet f1(4, {c.index_of("y1"), c.index_of("z2")});
    CHECK_FALSE(is_admissible_set(a, f1));
    CHECK(is_admissible_set(a, f1, true));
}

TEST_CASE("complete admissible generation on grids") {
    auto g22 = generate_complete_admissible_uniform(2, 2);
    CHECK(generate_complete_admissible(g22.clutter.labels(), g22.structure) == g22.clutter);
    CHECK(g22.clutter.edge_count() == 3);

    auto g33 = generate_complete_admissible_uniform(3, 3);
    CHECK(g33.clutter.edge_count() == 10);
    CHECK(generate_complete_admissible(g33.clutter.labels(), g33.structure) == g33.clutter);

    auto g14 = generate_complete_admissible_uniform(1, 4);
    CHECK(g14.clutter.edge_count() == 1);
    CHECK(g14.clutter.edge(0) == g14.clutter.universe());
}

TEST_CASE("complete admissible generation reproduces the three-class example") {
    auto doc = fixtures::admissible_three_class();
    auto a = structure_of(doc);
    CHECK(generate_complete_admissible(doc.clutter.labels(), a) == doc.clutter);
}

TEST_CASE("the gap structure is only workable in relaxed mode") {
    auto gap = fixtures::gap_example();
    auto a = structure_of(gap);
    CHECK_THROWS_AS(generate_complete_admissible(gap.clutter.labels(), a), validation_error);
    Clutter relaxed = generate_complete_admissible(gap.clutter.labels(), a, true);
    // both maximal admissible sets contain a matching part, so only the
    // matching itself survives
    CHECK(relaxed.edges() == *gap.matching);
}

TEST_CASE("uniform edge counts follow the binomial formula") {
    for (int g = 1; g <= 6; ++g)
        for (int d = 1; d <= 6; ++d) {
            if (g * d > 36) continue;
            auto gen = generate_complete_admissible_uniform(g, d);
            CHECK(gen.clutter.edge_count() == binomial(d + g - 1, g - 1));
        }
    CHECK_THROWS_AS(generate_complete_admissible_uniform(0, 3), validation_error);
}

TEST_CASE("lex_shelling reproduces the ten-facet order verbatim") {
    auto gen = generate_complete_admissible_uniform(3, 3);
    auto order = lex_shelling(gen.clutter, gen.structure);
    REQUIRE(order.facets.size() == 10);
    CHECK(order.pure());
    std::vector<std::vector<std::string>> expected{
        {"x1_1", "x2_1", "x3_1"}, {"x1_1", "x2_1", "x3_2"}, {"x1_1", "x2_1", "x3_3"},
        {"x1_1", "x2_2", "x3_2"}, {"x1_1", "x2_2", "x3_3"}, {"x1_1", "x2_3", "x3_3"},
        {"x1_2", "x2_2", "x3_2"}, {"x1_2", "x2_2", "x3_3"}, {"x1_2", "x2_3", "x3_3"},
        {"x1_3", "x2_3", "x3_3"}};
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(facet_labels(gen.clutter, order.facets[i]) == expected[i]);
    CHECK(verify_shelling(order.facets).valid());
}

TEST_CASE("lex_shelling on small grids") {
    auto g22 = generate_complete_admissible_uniform(2, 2);
    auto order = lex_shelling(g22.clutter, g22.structure);
    std::vector<std::vector<std::string>> expected{
        {"x1_1", "x2_1"}, {"x1_1", "x2_2"}, {"x1_2", "x2_2"}};
    for (size_t i = 0; i < expected.size(); ++i)
        CHECK(facet_labels(g22.clutter, order.facets[i]) == expected[i]);

    auto g12 = generate_complete_admissible_uniform(1, 2);
    CHECK(lex_shelling(g12.clutter, g12.structure).facets.size() == 1);

    // a clutter that is not complete admissible uniform is rejected
    auto gap = fixtures::gap_example();
    CHECK_THROWS_AS(lex_shelling(gap.clutter, structure_of(gap)), validation_error);
}

TEST_CASE("alexander dual: frozen examples") {
    Clutter p4 = fixtures::path4();
    CHECK(alexander_dual(p4).edges() == minimal_vertex_covers(p4));

    auto g22 = generate_complete_admissible_uniform(2, 2);
    auto dual = alexander_dual(g22.clutter);
    const Clutter& c = g22.clutter;
    auto by = [&](std::initializer_list<const char*> names) {
        VertexSet s(c.vertex_count());
        for (auto* nm : names) s.insert(c.index_of(nm));
        return s;
    };
    std::vector<VertexSet> expected{by({"x1_1", "x1_2"}), by({"x1_1", "x2_2"}),
                                    by({"x2_1", "x2_2"})};
    std::sort(expected.begin(), expected.end(), VertexSet::canonical_less);
    CHECK(dual.edges() == expected);

    Clutter single = Clutter::from_member_lists({"a", "b"}, {{0, 1}});
    CHECK(alexander_dual(single).edges() ==
          std::vector<VertexSet>{VertexSet(2, {0}), VertexSet(2, {1})});
}

TEST_CASE("dual ideal generators: frozen examples") {
    auto g22 = generate_complete_admissible_uniform(2, 2);
    auto gens = dual_ideal_generators(g22.clutter);
    REQUIRE(gens.size() == 3);
    for (size_t j = 0; j < gens.size(); ++j) CHECK(gens[j] == g22.clutter.edge(j).complement());

    Clutter whole = Clutter::from_member_lists({"a", "b"}, {{0, 1}});
    auto gow = dual_ideal_generators(whole);
    REQUIRE(gow.size() == 1);
    CHECK(gow[0].empty()); // the monomial 1

    Clutter p4 = fixtures::path4();
    std::vector<VertexSet> expected{VertexSet(4, {2, 3}), VertexSet(4, {0, 3}), VertexSet(4, {0, 1})};
    CHECK(dual_ideal_generators(p4) == expected);
}

TEST_CASE("linear quotients: frozen examples") {
    auto g33 = generate_complete_admissible_uniform(3, 3);
    auto order = lex_shelling(g33.clutter, g33.structure);
    std::vector<VertexSet> complements;
    for (const auto& f : order.facets) complements.push_back(f.complement());
    CHECK(linear_quotients_order_valid(complements));
    CHECK(has_linear_quotients(dual_ideal_generators(g33.clutter)).has_value());

    std::vector<VertexSet> disjoint{VertexSet(4, {0, 1}), VertexSet(4, {2, 3})};
    CHECK_FALSE(has_linear_quotients(disjoint).has_value());

    CHECK(has_linear_quotients({VertexSet(3, {0, 2})}).has_value());
    CHECK_THROWS_AS(has_linear_quotients({VertexSet(2, {0}), VertexSet(2, {0})}), validation_error);
}

TEST_CASE("property: generated complete admissible clutters have Konig-type matchings") {
    testgen::Rng rng(1111);
    for (int t = 0; t < 40; ++t) {
        std::vector<std::string> labels;
        auto a = random_structure(rng, 4, 4, &labels);
        Clutter c = generate_complete_admissible(labels, a);
        CHECK(covering_number(c) == a.matching_count());
        Matching m = make_matching(c, a.matching);
        CHECK(m.konig_type);
        CHECK(is_unmixed(c)); // complete admissible clutters are unmixed
    }
}

TEST_CASE("property: lexicographic shellings verify and are pure on all small grids") {
    for (int g = 1; g <= 6; ++g)
        for (int d = 1; d <= 6; ++d) {
            if (g * d > 36 || binomial(d + g - 1, g - 1) > 500) continue;
            auto gen = generate_complete_admissible_uniform(g, d);
            auto order = lex_shelling(gen.clutter, gen.structure);
            CHECK(order.pure());
            CHECK(verify_shelling(order.facets).valid());
        }
}

TEST_CASE("property: duality swaps classes and matching on uniform grids") {
    for (int g = 1; g <= 4; ++g)
        for (int d = 1; d <= 4; ++d) {
            auto gen = generate_complete_admissible_uniform(g, d);
            Clutter dual = alexander_dual(gen.clutter);
            auto swapped = make_admissible_structure(gen.clutter.vertex_count(),
                                                     gen.structure.matching, gen.structure.classes);
            CHECK(is_complete_admissible_uniform(dual, swapped));
            CHECK(alexander_dual(dual) == gen.clutter);
        }
}

TEST_CASE("property: complement family of the lex order is a shelling") {
    for (int g = 1; g <= 4; ++g)
        for (int d = 1; d <= 4; ++d) {
            auto gen = generate_complete_admissible_uniform(g, d);
            auto order = lex_shelling(gen.clutter, gen.structure);
            std::vector<VertexSet> complements;
            for (const auto& f : order.facets) complements.push_back(f.complement());
            if (complements.size() == 1 && complements[0].empty()) continue; // g*d == d
            auto check = verify_shelling(complements);
            CHECK(check.valid());
            CHECK(check.order->pure());
        }
}

TEST_CASE("property: the blocker involution holds") {
    testgen::Rng rng(1212);
    for (int t = 0; t < 60; ++t) {
        Clutter c = testgen::random_clutter(rng, 12, 8);
        CHECK(alexander_dual(alexander_dual(c)) == c);
    }
    // exhaustively over every clutter on up to three vertices
    for (int n = 1; n <= 3; ++n) {
        std::vector<VertexSet> all_sets;
        for (std::uint64_t mask = 1; mask < (1ull << n); ++mask) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (mask & (1ull << v)) s.insert(v);
            all_sets.push_back(s);
        }
        const int k = static_cast<int>(all_sets.size());
        for (std::uint64_t pick = 1; pick < (1ull << k); ++pick) {
            std::vector<VertexSet> edges;
            for (int i = 0; i < k; ++i)
                if (pick & (1ull << i)) edges.push_back(all_sets[i]);
            bool antichain = true;
            for (const auto& e : edges)
                for (const auto& f : edges)
                    if (!(e == f) && e.subset_of(f)) antichain = false;
            if (!antichain) continue;
            Clutter c(testgen::numbered_labels(n), edges);
            CHECK(alexander_dual(alexander_dual(c)) == c);
        }
    }
}
