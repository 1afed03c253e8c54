#pragma once

#include "clutter/admissible.hpp"
#include "clutter/clutter.hpp"
#include "clutter/json_io.hpp"

namespace clutter::fixtures {

/// Small standard instances used across tests and the self test.  Each
/// has a JSON twin under fixtures/.

inline Clutter path3() {
    return Clutter::from_member_lists({"x1", "x2", "x3"}, {{0, 1}, {1, 2}});
}

inline Clutter path4() {
    return Clutter::from_member_lists({"x1", "x2", "x3", "x4"}, {{0, 1}, {1, 2}, {2, 3}});
}

inline Clutter cycle4() {
    return Clutter::from_member_lists({"x1", "x2", "x3", "x4"}, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
}

inline Clutter triangle() {
    return Clutter::from_member_lists({"a", "b", "c"}, {{0, 1}, {1, 2}, {2, 0}});
}

inline Clutter k22() {
    return Clutter::from_member_lists({"x1", "x2", "y1", "y2"}, {{0, 2}, {0, 3}, {1, 2}, {1, 3}});
}

/// Nine-vertex clutter with the Konig property but no perfect matching
/// of Konig type: e1, e2, e3 form a perfect matching while f4..f7 are a
/// larger independent edge family.
inline Clutter nine_vertex() {
    return Clutter::from_member_lists(
        {"x1", "x2", "x3", "x4", "x5", "x6", "x7", "x8", "x9"},
        {{0, 1}, {2, 3, 4, 5}, {6, 7, 8}, {0, 2}, {1, 3}, {4, 6}, {5, 7}});
}

/// Four-vertex gap example: admissible only under the relaxed (gapped)
/// definition, unmixed with a Konig-type perfect matching, yet its
/// independence complex has two disjoint facets and admits no shelling.
inline ClutterDocument gap_example() {
    Clutter c = Clutter::from_member_lists({"x1", "y1", "y2", "z2"},
                                           {{0, 1}, {2, 3}, {1, 3}, {0, 2}});
    ClutterDocument doc{c, std::nullopt, std::nullopt};
    doc.matching = {VertexSet(4, {0, 1}), VertexSet(4, {2, 3})};
    doc.classes = {VertexSet(4, {0}), VertexSet(4, {1, 2}), VertexSet(4, {3})};
    return doc;
}

/// Three-class Cohen-Macaulay admissible clutter on seven vertices with
/// matching e1, e2, e3 and extra edges f1, f2, f3.
inline ClutterDocument admissible_three_class() {
    std::vector<std::string> labels{"x1", "x2", "x3", "y1", "y2", "y3", "z2"};
    Clutter c = Clutter::from_member_lists(
        labels, {{0, 3}, {1, 4, 6}, {2, 5}, {0, 4, 6}, {0, 5}, {1, 5}});
    ClutterDocument doc{c, std::nullopt, std::nullopt};
    doc.matching = {VertexSet(7, {0, 3}), VertexSet(7, {1, 4, 6}), VertexSet(7, {2, 5})};
    doc.classes = {VertexSet(7, {0, 1, 2}), VertexSet(7, {3, 4, 5}), VertexSet(7, {6})};
    return doc;
}

/// Uniform admissible (not complete) clutter on six vertices: matching
/// e1, e2 plus the single extra edge x1 y1 z2.
inline ClutterDocument admissible_uniform_partial() {
    std::vector<std::string> labels{"x1", "x2", "y1", "y2", "z1", "z2"};
    Clutter c = Clutter::from_member_lists(labels, {{0, 2, 4}, {1, 3, 5}, {0, 2, 5}});
    ClutterDocument doc{c, std::nullopt, std::nullopt};
    doc.matching = {VertexSet(6, {0, 2, 4}), VertexSet(6, {1, 3, 5})};
    doc.classes = {VertexSet(6, {0, 1}), VertexSet(6, {2, 3}), VertexSet(6, {4, 5})};
    return doc;
}

/// The 5+5 bipartite graph whose top pure skeleton is shellable even
/// though the graph is mixed.
inline ClutterDocument bipartite_5x5() {
    std::vector<std::string> labels{"x1", "x2", "x3", "x4", "x5", "y1", "y2", "y3", "y4", "y5"};
    // x_i at i-1, y_i at 4+i
    Clutter c = Clutter::from_member_lists(labels, {
                                                       {0, 5}, // x1 y1
                                                       {1, 6}, // x2 y2
                                                       {2, 7}, // x3 y3
                                                       {3, 8}, // x4 y4
                                                       {4, 9}, // x5 y5
                                                       {0, 6}, // x1 y2
                                                       {1, 7}, // x2 y3
                                                       {1, 8}, // x2 y4
                                                       {2, 8}, // x3 y4
                                                       {3, 9}, // x4 y5
                                                   });
    ClutterDocument doc{c, std::nullopt, std::nullopt};
    doc.matching = {VertexSet(10, {0, 5}), VertexSet(10, {1, 6}), VertexSet(10, {2, 7}),
                    VertexSet(10, {3, 8}), VertexSet(10, {4, 9})};
    return doc;
}

/// Balanced 7-uniform clutter on 28 vertices (4 matching edges and two
/// extra edges) that cannot be relabeled into an admissible uniform
/// clutter.
inline ClutterDocument balanced_counterexample() {
    const char* stems[] = {"a", "b", "c", "d", "g", "h", "k"};
    std::vector<std::string> labels;
    for (int i = 1; i <= 4; ++i)
        for (const char* s : stems) labels.push_back(std::string(s) + std::to_string(i));
    auto at = [&](int stem, int i) { return (i - 1) * 7 + stem; }; // stem index 0..6
    std::vector<std::vector<int>> edges;
    for (int i = 1; i <= 4; ++i) {
        std::vector<int> e;
        for (int s = 0; s < 7; ++s) e.push_back(at(s, i));
        edges.push_back(e);
    }
    // a1 b1 c1 d1 g2 h3 k4
    edges.push_back({at(0, 1), at(1, 1), at(2, 1), at(3, 1), at(4, 2), at(5, 3), at(6, 4)});
    // a1 b2 c3 d4 g2 h3 k4
    edges.push_back({at(0, 1), at(1, 2), at(2, 3), at(3, 4), at(4, 2), at(5, 3), at(6, 4)});
    Clutter c = Clutter::from_member_lists(labels, edges);
    ClutterDocument doc{c, std::nullopt, std::nullopt};
    std::vector<VertexSet> matching;
    for (int i = 1; i <= 4; ++i) {
        VertexSet e(28);
        for (int s = 0; s < 7; ++s) e.insert(at(s, i));
        matching.push_back(e);
    }
    doc.matching = matching;
    return doc;
}

} // namespace clutter::fixtures
