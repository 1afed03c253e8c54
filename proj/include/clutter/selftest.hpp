#pragma once

#include <algorithm>
#include <array>
#include <chrono>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "clutter/admissible.hpp"
#include "clutter/bipartite.hpp"
#include "clutter/fixtures.hpp"
#include "clutter/oracles.hpp"
#include "clutter/shelling.hpp"
#include "clutter/testgen.hpp"

namespace clutter::selftest {

/// Acceptance suite: one function per criterion, each returning a
/// pass/fail verdict with a short detail line.  The CLI `selftest`
/// subcommand and the acceptance test binary both run these.

struct Options {
    std::uint64_t seed = 20240809;
    bool skip_slow = false; // skips only the relabeling search of criterion 9
};

struct CriterionResult {
    int id = 0;
    std::string name;
    bool passed = false;
    std::string detail;
};

namespace detail {

/// Constraint search for criterion 9: can the vertices of a uniform
/// clutter be assigned color classes, and its matching parts an order,
/// so that it becomes an admissible uniform clutter?  Classes must be a
/// bijection on every edge and must increase along strictly increasing
/// matching positions within an edge.
class ClassAssignment {
public:
    ClassAssignment(const Clutter& c, const std::vector<int>& position, int d)
        : c_(c), pos_(position), d_(d), cls_(c.vertex_count(), -1),
          dom_(c.vertex_count(), (1u << d) - 1), edges_of_(c.vertex_count()) {
        for (int j = 0; j < c.edge_count(); ++j)
            for (int v : c.edge(j).members()) edges_of_[v].push_back(j);
    }

    bool solve() { return assign(); }

private:
    bool assign() {
        int v = -1, best = d_ + 1;
        for (int u = 0; u < c_.vertex_count(); ++u)
            if (cls_[u] < 0 && std::popcount(dom_[u]) < best) {
                best = std::popcount(dom_[u]);
                v = u;
            }
        if (v < 0) return true;
        for (std::uint32_t rest = dom_[v]; rest != 0; rest &= rest - 1) {
            int val = std::countr_zero(rest);
            std::vector<std::pair<int, std::uint32_t>> undo;
            cls_[v] = val;
            if (propagate(v, val, undo) && assign()) return true;
            cls_[v] = -1;
            for (auto [u, m] : undo) dom_[u] = m;
        }
        return false;
    }

    bool propagate(int v, int val, std::vector<std::pair<int, std::uint32_t>>& undo) {
        for (int j : edges_of_[v])
            for (int u : c_.edge(j).members()) {
                if (u == v || cls_[u] >= 0) continue;
                std::uint32_t nd = dom_[u] & ~(1u << val);
                if (pos_[u] < pos_[v]) nd &= (1u << val) - 1;
                if (pos_[u] > pos_[v]) nd &= ~((1u << (val + 1)) - 1);
                if (nd == dom_[u]) continue;
                if (nd == 0) return false;
                undo.emplace_back(u, dom_[u]);
                dom_[u] = nd;
            }
        return true;
    }

    const Clutter& c_;
    const std::vector<int>& pos_;
    int d_;
    std::vector<int> cls_;
    std::vector<std::uint32_t> dom_;
    std::vector<std::vector<int>> edges_of_;
};

} // namespace detail

/// True iff some class assignment and matching order turns the uniform
/// clutter into an admissible uniform clutter.  Candidate matchings are
/// the perfect matchings among the edges; each part order is tried.
inline bool admissible_uniform_relabeling_exists(const Clutter& c, int max_parts = 8) {
    if (c.edge_count() == 0) return false;
    const int d = c.edge(0).size();
    for (const auto& e : c.edges())
        if (e.size() != d) return false;
    if (d > 31) throw size_guard_error("relabeling search supports at most 31 classes");

    std::vector<std::vector<int>> matchings;
    for_each_perfect_matching(c, [&](const std::vector<int>& picked) {
        matchings.push_back(picked);
        return true;
    });
    for (const auto& pm : matchings) {
        const int g = static_cast<int>(pm.size());
        if (g > max_parts)
            throw size_guard_error("relabeling search refused: too many matching parts");
        std::vector<int> part_of(c.vertex_count(), -1);
        for (int t = 0; t < g; ++t)
            for (int v : c.edge(pm[t]).members()) part_of[v] = t;
        std::vector<int> rank(g);
        std::iota(rank.begin(), rank.end(), 0);
        do {
            std::vector<int> position(c.vertex_count());
            for (int v = 0; v < c.vertex_count(); ++v) position[v] = rank[part_of[v]];
            if (detail::ClassAssignment(c, position, d).solve()) return true;
        } while (std::next_permutation(rank.begin(), rank.end()));
    }
    return false;
}

namespace detail {

inline bool same_facet_set(std::vector<VertexSet> a, std::vector<VertexSet> b) {
    std::sort(a.begin(), a.end(), VertexSet::canonical_less);
    std::sort(b.begin(), b.end(), VertexSet::canonical_less);
    return a == b;
}

inline VertexSet by_names(const Clutter& c, std::initializer_list<const char*> names) {
    VertexSet s(c.vertex_count());
    for (const char* nm : names) s.insert(c.index_of(nm));
    return s;
}

struct Tally {
    int checked = 0;
    int failed = 0;
    std::string first_failure;

    void expect(bool ok, const std::string& what) {
        ++checked;
        if (!ok) {
            ++failed;
            if (first_failure.empty()) first_failure = what;
        }
    }

    CriterionResult result(int id, const std::string& name, const std::string& extra = "") const {
        std::ostringstream detail;
        detail << checked << " checks";
        if (!extra.empty()) detail << ", " << extra;
        if (failed > 0) detail << "; " << failed << " failed, first: " << first_failure;
        return CriterionResult{id, name, failed == 0 && checked > 0, detail.str()};
    }
};

} // namespace detail

inline CriterionResult criterion_1_nine_vertex() {
    detail::Tally t;
    Clutter c = fixtures::nine_vertex();
    t.expect(has_konig_property(c), "Konig property");
    t.expect(covering_number(c) == 4, "covering number 4");
    t.expect(!find_perfect_matching_konig(c).has_value(), "no Konig-type perfect matching");
    return t.result(1, "nine-vertex example: Konig without a Konig-type matching");
}

inline CriterionResult criterion_2_lex_shelling() {
    detail::Tally t;
    auto gen = generate_complete_admissible_uniform(3, 3);
    t.expect(gen.clutter.edge_count() == 10, "10 edges");
    auto order = lex_shelling(gen.clutter, gen.structure);
    std::vector<std::vector<std::string>> expected{
        {"x1_1", "x2_1", "x3_1"}, {"x1_1", "x2_1", "x3_2"}, {"x1_1", "x2_1", "x3_3"},
        {"x1_1", "x2_2", "x3_2"}, {"x1_1", "x2_2", "x3_3"}, {"x1_1", "x2_3", "x3_3"},
        {"x1_2", "x2_2", "x3_2"}, {"x1_2", "x2_2", "x3_3"}, {"x1_2", "x2_3", "x3_3"},
        {"x1_3", "x2_3", "x3_3"}};
    t.expect(order.facets.size() == expected.size(), "facet count");
    for (size_t i = 0; i < expected.size() && i < order.facets.size(); ++i) {
        std::vector<std::string> got;
        for (int v : order.facets[i].members()) got.push_back(gen.clutter.label(v));
        t.expect(got == expected[i], "facet " + std::to_string(i + 1) + " order");
    }
    t.expect(verify_shelling(order.facets).valid(), "shelling verifies");
    return t.result(2, "uniform 3x3 lexicographic shelling, verbatim facet order");
}

inline CriterionResult criterion_3_duality() {
    detail::Tally t;
    for (int g = 1; g <= 4; ++g)
        for (int d = 1; d <= 4; ++d) {
            auto gen = generate_complete_admissible_uniform(g, d);
            Clutter dual = alexander_dual(gen.clutter);
            auto swapped = make_admissible_structure(gen.clutter.vertex_count(),
                                                     gen.structure.matching, gen.structure.classes);
            t.expect(is_complete_admissible_uniform(dual, swapped),
                     "dual structure swap at g=" + std::to_string(g) + ",d=" + std::to_string(d));
            t.expect(alexander_dual(dual) == gen.clutter,
                     "double dual at g=" + std::to_string(g) + ",d=" + std::to_string(d));
        }
    return t.result(3, "Alexander duality swaps classes and matching, double dual restores");
}

inline CriterionResult criterion_4_equivalence_fuzz(std::uint64_t seed) {
    detail::Tally t;
    testgen::Rng rng(seed + 4);
    int mixed = 0;
    for (int i = 0; i < 1000; ++i) {
        auto inst = testgen::random_konig_instance(rng, 12, 5);
        auto rep = unmixedness_equivalence_report(inst.clutter, inst.matching);
        if (!rep.unmixed) ++mixed;
        t.expect(rep.all_agree(), "agreement on instance " + std::to_string(i));
    }
    return t.result(4, "five-way unmixedness equivalence on 1000 random instances",
                    std::to_string(mixed) + " mixed instances");
}

inline CriterionResult criterion_5_ordering_implies_shelling(std::uint64_t seed) {
    detail::Tally t;
    testgen::Rng rng(seed + 5);
    for (int i = 0; i < 500; ++i) {
        auto inst = testgen::random_ordered_instance(rng, 12, 6);
        if (!ordering_condition(inst.clutter, inst.matching)) {
            t.expect(false, "generator produced a non-ordered instance");
            continue;
        }
        t.expect(is_unmixed(inst.clutter), "unmixed on instance " + std::to_string(i));
        auto order = recursive_shelling(inst.clutter, inst.matching);
        if (!order) {
            t.expect(false, "no shelling on instance " + std::to_string(i));
            continue;
        }
        t.expect(order->pure(), "pure on instance " + std::to_string(i));
        t.expect(verify_shelling(order->facets).valid(), "re-verify on instance " + std::to_string(i));
        t.expect(detail::same_facet_set(order->facets, stanley_reisner_facets(inst.clutter)),
                 "facet set on instance " + std::to_string(i));
    }
    return t.result(5, "ordering condition forces unmixedness and a recursive shelling");
}

inline CriterionResult criterion_6_no_short_cycles(std::uint64_t seed) {
    detail::Tally t;
    testgen::Rng rng(seed + 6);
    int found = 0;
    for (long tries = 0; found < 500 && tries < 500000; ++tries) {
        auto inst = testgen::random_konig_instance(rng, 12, 8);
        if (!is_unmixed(inst.clutter)) continue;
        if (has_cycle_of_length(inst.clutter, 3) || has_cycle_of_length(inst.clutter, 4)) continue;
        ++found;
        t.expect(ordering_condition(inst.clutter, inst.matching),
                 "ordering on sample " + std::to_string(found));
        t.expect(matching_edges_have_free_vertex(inst.clutter, inst.matching),
                 "free vertices on sample " + std::to_string(found));
        t.expect(recursive_shelling(inst.clutter, inst.matching).has_value(),
                 "shelling on sample " + std::to_string(found));
    }
    t.expect(found == 500, "sampled 500 instances");
    return t.result(6, "no 3- or 4-cycles + unmixed forces ordering, free vertices, shelling");
}

inline CriterionResult criterion_7_bipartite_skeleton() {
    detail::Tally t;
    auto doc = fixtures::bipartite_5x5();
    const Clutter& g = doc.clutter;
    auto skel = pure_skeleton(stanley_reisner_facets(g), 5);
    std::vector<VertexSet> listed{detail::by_names(g, {"x1", "x2", "x3", "x4", "x5"}),
                                  detail::by_names(g, {"x2", "x3", "x4", "x5", "y1"}),
                                  detail::by_names(g, {"x3", "x4", "x5", "y1", "y2"}),
                                  detail::by_names(g, {"x4", "x5", "y1", "y2", "y3"}),
                                  detail::by_names(g, {"x5", "y1", "y2", "y3", "y4"}),
                                  detail::by_names(g, {"y1", "y2", "y3", "y4", "y5"})};
    t.expect(detail::same_facet_set(skel, listed), "skeleton facets match the listed six");
    Matching m = make_matching(g, *doc.matching);
    auto order = skeleton_shelling(g, m);
    t.expect(order.has_value(), "skeleton shelling exists");
    if (order) {
        t.expect(order->pure(), "pure");
        t.expect(verify_shelling(order->facets).valid(), "verifies");
        t.expect(detail::same_facet_set(order->facets, listed), "shelling facet set");
    }
    t.expect(h1_ordering(g, m).has_value(), "h1 ordering exists");
    t.expect(!is_unmixed(g), "graph is mixed");
    t.expect(!herzog_hibi_cm(g).has_value(), "no Herzog-Hibi certificate");
    return t.result(7, "5x5 bipartite example: shellable top skeleton, mixed graph");
}

inline CriterionResult criterion_8_gap_example() {
    detail::Tally t;
    auto doc = fixtures::gap_example();
    const Clutter& c = doc.clutter;
    t.expect(is_unmixed(c), "unmixed");
    auto m = find_perfect_matching_konig(c);
    t.expect(m.has_value(), "Konig-type matching found");
    if (m) t.expect(m->edges == *doc.matching, "matching is x1 y1 | y2 z2");
    auto facets = stanley_reisner_facets(c);
    t.expect(detail::same_facet_set(
                 facets, {detail::by_names(c, {"x1", "z2"}), detail::by_names(c, {"y1", "y2"})}),
             "facets are x1 z2 and y1 y2");
    t.expect(!bruteforce_shelling(facets).has_value(), "no shelling exists");
    return t.result(8, "gapped admissible example: unmixed but not shellable");
}

inline CriterionResult criterion_9_balanced_counterexample(bool skip_slow) {
    detail::Tally t;
    auto doc = fixtures::balanced_counterexample();
    const Clutter& c = doc.clutter;
    t.expect(is_balanced(c), "balanced");
    auto witness = find_free_ordered_matching(c);
    t.expect(witness.has_value(), "free ordered matching witness");
    if (witness) t.expect(witness->edges == *doc.matching, "witness is the four matching edges");
    std::string extra;
    if (skip_slow) {
        extra = "relabeling search skipped";
    } else {
        t.expect(!admissible_uniform_relabeling_exists(c), "no admissible uniform relabeling");
        // the relabeling search itself accepts a genuinely relabelable input
        auto positive = generate_complete_admissible_uniform(2, 3);
        t.expect(admissible_uniform_relabeling_exists(positive.clutter),
                 "relabeling search accepts a uniform grid");
    }
    return t.result(9, "balanced 28-vertex example: shellable but not admissible-orderable", extra);
}

inline CriterionResult criterion_10_bipartite_agreement(std::uint64_t seed) {
    detail::Tally t;
    testgen::Rng rng(seed + 10);
    int shellable = 0, obstructed = 0, found = 0;
    for (long tries = 0; found < 300 && tries < 100000; ++tries) {
        auto inst = testgen::random_bipartite_with_matching(rng, 7);
        auto facets = pure_skeleton(stanley_reisner_facets(inst.graph), inst.matching.size());
        if (facets.size() > 10) continue; // keep the exhaustive leg exhaustive
        ++found;
        bool h1 = h1_ordering(inst.graph, inst.matching).has_value();
        auto constructed = skeleton_shelling(inst.graph, inst.matching);
        bool brute = bruteforce_shelling(facets, 10).has_value();
        (h1 ? shellable : obstructed)++;
        t.expect(h1 == constructed.has_value(), "h1 vs construction on sample " + std::to_string(found));
        t.expect(h1 == brute, "h1 vs exhaustive search on sample " + std::to_string(found));
        if (constructed)
            t.expect(detail::same_facet_set(constructed->facets, facets),
                     "constructed facets on sample " + std::to_string(found));
        bool cert = herzog_hibi_cm(inst.graph).has_value();
        t.expect(cert == (is_unmixed(inst.graph) && constructed.has_value()),
                 "certificate equivalence on sample " + std::to_string(found));
    }
    t.expect(found == 300, "sampled 300 instances");
    return t.result(10, "bipartite three-way agreement (h1, construction, exhaustive search)",
                    std::to_string(shellable) + " shellable, " + std::to_string(obstructed) +
                        " obstructed");
}

inline CriterionResult criterion_11_whiskers(std::uint64_t seed) {
    detail::Tally t;
    testgen::Rng rng(seed + 11);
    for (int i = 0; i < 200; ++i) {
        Clutter g = testgen::random_graph(rng, 6);
        Clutter w = whisker(g);
        const int n = g.vertex_count();
        std::vector<VertexSet> wm;
        for (int v = 0; v < n; ++v) wm.push_back(VertexSet(2 * n, {v, n + v}));
        Matching m = make_matching(w, wm, n);
        t.expect(m.konig_type, "whisker matching is Konig type on sample " + std::to_string(i));
        t.expect(ordering_condition(w, m), "ordering on sample " + std::to_string(i));
        auto order = recursive_shelling(w, m);
        t.expect(order.has_value() && order->pure(), "shelling on sample " + std::to_string(i));
    }
    return t.result(11, "whiskered graphs satisfy the ordering condition and shell");
}

inline CriterionResult criterion_12_oracles(std::uint64_t seed) {
    detail::Tally t;
    testgen::Rng rng(seed + 12);
    for (const Clutter& c : {fixtures::path4(), fixtures::k22(), fixtures::triangle(),
                             fixtures::cycle4(), fixtures::nine_vertex()})
        t.expect(minimal_vertex_covers(c) == oracles::covers_by_subset_scan(c), "covers on standards");
    for (int i = 0; i < 150; ++i) {
        Clutter c = testgen::random_clutter(rng, 12, 10);
        t.expect(minimal_vertex_covers(c) == oracles::covers_by_subset_scan(c),
                 "covers on sample " + std::to_string(i));
    }
    for (int i = 0; i < 12; ++i) {
        Clutter c = testgen::random_clutter(rng, 16, 10);
        t.expect(minimal_vertex_covers(c) == oracles::covers_by_subset_scan(c),
                 "covers on wide sample " + std::to_string(i));
    }
    for (int i = 0; i < 120; ++i) {
        Clutter c = testgen::random_clutter(rng, 8, 8);
        int bound = std::min(c.vertex_count(), c.edge_count());
        for (int r = 3; r <= bound; ++r)
            t.expect(has_cycle_of_length(c, r) == oracles::has_cycle_by_submatrix_scan(c, r),
                     "cycles on sample " + std::to_string(i));
    }
    for (int i = 0; i < 120; ++i) {
        Clutter c = testgen::random_clutter(rng, 10, 15);
        auto picked = oracles::max_matching_by_subset_scan(c);
        Matching m = maximum_edge_matching(c);
        bool same = m.size() == static_cast<int>(picked.size());
        for (size_t k = 0; same && k < picked.size(); ++k)
            same = m.edges[k] == c.edge(picked[k]);
        t.expect(same, "matching on sample " + std::to_string(i));
    }
    return t.result(12, "search routines agree with their brute-force oracles");
}

inline std::vector<CriterionResult> run_all(const Options& opt = {}) {
    return {criterion_1_nine_vertex(),
            criterion_2_lex_shelling(),
            criterion_3_duality(),
            criterion_4_equivalence_fuzz(opt.seed),
            criterion_5_ordering_implies_shelling(opt.seed),
            criterion_6_no_short_cycles(opt.seed),
            criterion_7_bipartite_skeleton(),
            criterion_8_gap_example(),
            criterion_9_balanced_counterexample(opt.skip_slow),
            criterion_10_bipartite_agreement(opt.seed),
            criterion_11_whiskers(opt.seed),
            criterion_12_oracles(opt.seed)};
}

/// One line per criterion; returns the number of failures.
inline int print_report(const std::vector<CriterionResult>& results, std::ostream& out) {
    int failures = 0;
    for (const auto& r : results) {
        out << (r.passed ? "PASS" : "FAIL") << "  criterion " << r.id << ": " << r.name << " ("
            << r.detail << ")\n";
        if (!r.passed) ++failures;
    }
    out << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed")
        << "\n";
    return failures;
}

} // namespace clutter::selftest
