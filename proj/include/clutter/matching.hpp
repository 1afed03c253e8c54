#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "clutter/covers.hpp"

namespace clutter {

/// Ordered list of pairwise disjoint edges of a host clutter.
///   perfect     => the edges partition the whole vertex set
///   konig_type  => perfect and the number of edges equals the covering
///                  number (the height of the edge ideal)
struct Matching {
    std::vector<VertexSet> edges;
    bool perfect = false;
    bool konig_type = false;

    int size() const { return static_cast<int>(edges.size()); }

    VertexSet covered(int n) const {
        VertexSet u(n);
        for (const auto& e : edges) u |= e;
        return u;
    }
};

/// Validate a candidate edge list against its host clutter and compute
/// the perfect/konig_type flags.  Pass the covering number when already
/// known to skip re-enumeration.
inline Matching make_matching(const Clutter& c, std::vector<VertexSet> edges,
                              std::optional<int> known_covering_number = std::nullopt) {
    Matching m;
    VertexSet seen(c.vertex_count());
    for (const auto& e : edges) {
        if (!c.has_edge(e)) throw validation_error("matching member " + c.render(e) + " is not an edge");
        if (seen.intersects(e))
            throw validation_error("matching edges are not pairwise disjoint at " + c.render(e));
        seen |= e;
    }
    m.edges = std::move(edges);
    m.perfect = (seen == c.universe());
    if (m.perfect) {
        int tau = known_covering_number ? *known_covering_number : covering_number(c);
        m.konig_type = (m.size() == tau);
    }
    return m;
}

namespace detail {

/// Lexicographically-first maximum matching: DFS over ascending edge
/// index sequences, keeping the first strictly larger matching found.
inline void max_matching_dfs(const std::vector<VertexSet>& edges, int from, VertexSet used,
                             std::vector<int>& current, std::vector<int>& best) {
    if (current.size() > best.size()) best = current;
    int remaining = static_cast<int>(edges.size()) - from;
    if (static_cast<int>(current.size()) + remaining <= static_cast<int>(best.size())) return;
    for (int j = from; j < static_cast<int>(edges.size()); ++j) {
        if (!used.disjoint_from(edges[j])) continue;
        current.push_back(j);
        max_matching_dfs(edges, j + 1, used | edges[j], current, best);
        current.pop_back();
    }
}

/// Enumerate perfect matchings (edge partitions of the vertex universe)
/// in canonical order: always extend at the lowest uncovered vertex.
/// Stops early when the callback returns false.
inline bool perfect_matching_dfs(const Clutter& c, VertexSet covered, std::vector<int>& current,
                                 const std::function<bool(const std::vector<int>&)>& visit) {
    if (covered == c.universe()) return visit(current);
    int v = covered.complement().first();
    for (int j = 0; j < c.edge_count(); ++j) {
        const VertexSet& e = c.edge(j);
        if (!e.contains(v) || !e.disjoint_from(covered)) continue;
        current.push_back(j);
        if (!perfect_matching_dfs(c, covered | e, current, visit)) return false;
        current.pop_back();
    }
    return true;
}

} // namespace detail

/// A maximum-cardinality matching; ties broken by the lexicographically
/// smallest edge-index sequence, so the result is deterministic.
inline Matching maximum_edge_matching(const Clutter& c, int max_q = limits::matching_search_edges) {
    if (c.edge_count() > max_q)
        throw size_guard_error("matching search refused: " + std::to_string(c.edge_count()) +
                               " edges exceeds the limit of " + std::to_string(max_q));
    std::vector<int> current, best;
    detail::max_matching_dfs(c.edges(), 0, VertexSet(c.vertex_count()), current, best);
    std::vector<VertexSet> edges;
    for (int j : best) edges.push_back(c.edge(j));
    return make_matching(c, std::move(edges));
}

/// Konig property: the maximum number of pairwise disjoint edges equals
/// the covering number.
inline bool has_konig_property(const Clutter& c, int max_q = limits::matching_search_edges) {
    return maximum_edge_matching(c, max_q).size() == covering_number(c);
}

/// Visit perfect matchings in canonical order until the callback asks to
/// stop.  The callback receives edge indices into c.edges().
inline void for_each_perfect_matching(const Clutter& c,
                                      const std::function<bool(const std::vector<int>&)>& visit) {
    std::vector<int> current;
    detail::perfect_matching_dfs(c, VertexSet(c.vertex_count()), current, visit);
}

/// Some perfect matching of Konig type (a partition of the vertex set
/// into covering_number many edges) when one exists.  The search is
/// exhaustive; the first matching in canonical order is returned.
inline std::optional<Matching> find_perfect_matching_konig(const Clutter& c,
                                                           int max_q = limits::matching_search_edges) {
    if (c.edge_count() > max_q)
        throw size_guard_error("matching search refused: " + std::to_string(c.edge_count()) +
                               " edges exceeds the limit of " + std::to_string(max_q));
    const int tau = covering_number(c);
    std::optional<Matching> found;
    for_each_perfect_matching(c, [&](const std::vector<int>& picked) {
        if (static_cast<int>(picked.size()) != tau) return true;
        std::vector<VertexSet> edges;
        for (int j : picked) edges.push_back(c.edge(j));
        found = make_matching(c, std::move(edges), tau);
        return false;
    });
    return found;
}

} // namespace clutter
