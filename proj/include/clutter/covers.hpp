#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "clutter/clutter.hpp"

namespace clutter {

namespace detail {

/// Minimal transversal enumeration over an arbitrary family of nonempty
/// vertex sets.  Branches on the vertices of the first uncovered set;
/// child i assumes vertex i is in and the earlier branch vertices are
/// out, so each minimal transversal is reached on exactly one path.
/// Non-minimal leaves are filtered afterwards.
inline void transversal_dfs(const std::vector<VertexSet>& family, VertexSet chosen,
                            VertexSet banned, std::vector<VertexSet>& out) {
    const VertexSet* uncovered = nullptr;
    for (const auto& e : family) {
        if (e.disjoint_from(chosen)) {
            uncovered = &e;
            break;
        }
    }
    if (!uncovered) {
        out.push_back(chosen);
        return;
    }
    VertexSet candidates = *uncovered - banned;
    if (candidates.empty()) return;
    VertexSet newly_banned = banned;
    for (int v : candidates.members()) {
        VertexSet next = chosen;
        next.insert(v);
        transversal_dfs(family, next, newly_banned, out);
        newly_banned.insert(v);
    }
}

inline bool family_minimal_member(const std::vector<VertexSet>& family, VertexSet s) {
    // s hits every member; minimal iff each vertex covers some member alone
    for (int v : s.members()) {
        bool has_private = false;
        for (const auto& e : family) {
            VertexSet hit = e & s;
            if (hit.size() == 1 && hit.contains(v)) {
                has_private = true;
                break;
            }
        }
        if (!has_private) return false;
    }
    return true;
}

} // namespace detail

/// All inclusion-minimal transversals of a family of nonempty vertex sets
/// over an n-vertex universe, in canonical order.  The family of no sets
/// has the single transversal {} (zero ideal convention).
inline std::vector<VertexSet> minimal_transversals(int n, const std::vector<VertexSet>& family,
                                                   int max_n = limits::cover_enumeration_vertices) {
    if (n > max_n)
        throw size_guard_error("transversal enumeration refused: " + std::to_string(n) +
                               " vertices exceeds the limit of " + std::to_string(max_n));
    std::vector<VertexSet> raw;
    detail::transversal_dfs(family, VertexSet(n), VertexSet(n), raw);
    std::vector<VertexSet> out;
    for (const auto& s : raw)
        if (detail::family_minimal_member(family, s)) out.push_back(s);
    std::sort(out.begin(), out.end(), VertexSet::canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// The minimal vertex covers of c, i.e. the supports of the minimal
/// primes in the primary decomposition of the edge ideal.
inline std::vector<VertexSet> minimal_vertex_covers(const Clutter& c,
                                                    int max_n = limits::cover_enumeration_vertices) {
    return minimal_transversals(c.vertex_count(), c.edges(), max_n);
}

/// Minimum size of a vertex cover; equals the height of the edge ideal.
inline int covering_number(const Clutter& c, int max_n = limits::cover_enumeration_vertices) {
    int best = c.vertex_count() + 1;
    for (const auto& s : minimal_vertex_covers(c, max_n)) best = std::min(best, s.size());
    return best == c.vertex_count() + 1 ? 0 : best;
}

/// Facets of the Stanley-Reisner complex: complements of the minimal
/// vertex covers, in the same order.
inline std::vector<VertexSet> stanley_reisner_facets(const Clutter& c,
                                                     int max_n = limits::cover_enumeration_vertices) {
    std::vector<VertexSet> out;
    for (const auto& s : minimal_vertex_covers(c, max_n)) out.push_back(s.complement());
    return out;
}

/// True iff all minimal vertex covers have the same size, i.e. the
/// Stanley-Reisner complex is pure.
inline bool is_unmixed(const Clutter& c, int max_n = limits::cover_enumeration_vertices) {
    auto covers = minimal_vertex_covers(c, max_n);
    for (const auto& s : covers)
        if (s.size() != covers.front().size()) return false;
    return true;
}

} // namespace clutter
