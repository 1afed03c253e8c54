#pragma once

#include <map>
#include <optional>
#include <vector>

#include "clutter/covers.hpp"

namespace clutter {

/// Outcome of a contraction.  Contracting a vertex that forms a
/// singleton edge turns some generator into the monomial 1, so the
/// result is the unit ideal.  That "improper" outcome is a distinguished
/// value, never coerced to an empty clutter: the empty clutter is the
/// zero ideal, the opposite extreme, with a different cover family.
class MinorOutcome {
public:
    static MinorOutcome improper() { return MinorOutcome(); }
    MinorOutcome(Clutter c) : value_(std::move(c)) {}

    bool is_improper() const { return !value_.has_value(); }

    const Clutter& get() const {
        if (!value_) throw std::logic_error("improper minor has no clutter value");
        return *value_;
    }

private:
    MinorOutcome() = default;
    std::optional<Clutter> value_;
};

namespace detail {

/// Contract a set of vertices on a raw edge family: drop the vertices
/// from every edge and reduce to the inclusion-minimal family.  Returns
/// nothing when some edge vanishes entirely (unit ideal).
inline std::optional<std::vector<VertexSet>> contract_edges(const std::vector<VertexSet>& edges,
                                                            VertexSet s) {
    std::vector<VertexSet> shrunk;
    for (const auto& e : edges) {
        VertexSet r = e - s;
        if (r.empty()) return std::nullopt;
        shrunk.push_back(r);
    }
    std::vector<VertexSet> minimal;
    for (size_t i = 0; i < shrunk.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < shrunk.size() && keep; ++j) {
            if (i == j) continue;
            if (shrunk[j].subset_of(shrunk[i]) && !(shrunk[i] == shrunk[j] && j > i)) keep = false;
        }
        if (keep) minimal.push_back(shrunk[i]);
    }
    return minimal;
}

} // namespace detail

/// The clutter of (I : x_v): edges through v shrink by v, the family is
/// reduced to its minimal members.  v becomes isolated but stays in the
/// universe.
inline MinorOutcome contract(const Clutter& c, int v) {
    if (v < 0 || v >= c.vertex_count()) throw validation_error("contract: no such vertex");
    auto edges = detail::contract_edges(c.edges(), VertexSet(c.vertex_count(), {v}));
    if (!edges) return MinorOutcome::improper();
    return MinorOutcome(c.with_edges(std::move(*edges)));
}

/// Iterated contraction over a nonempty set; the result is independent
/// of the order in which members are contracted.
inline MinorOutcome contract_set(const Clutter& c, VertexSet s) {
    if (s.empty()) throw validation_error("contract_set: empty vertex set");
    auto edges = detail::contract_edges(c.edges(), s);
    if (!edges) return MinorOutcome::improper();
    return MinorOutcome(c.with_edges(std::move(*edges)));
}

/// The deletion I \cap K[x : x != v]: edges not containing v, universe
/// unchanged.
inline Clutter delete_vertex(const Clutter& c, int v) {
    if (v < 0 || v >= c.vertex_count()) throw validation_error("delete: no such vertex");
    std::vector<VertexSet> kept;
    for (const auto& e : c.edges())
        if (!e.contains(v)) kept.push_back(e);
    return c.with_edges(std::move(kept));
}

/// Vertices occurring in exactly one edge.  Isolated vertices are not
/// free.
inline VertexSet free_vertices(const Clutter& c) {
    VertexSet out(c.vertex_count());
    for (int v = 0; v < c.vertex_count(); ++v)
        if (c.degree(v) == 1) out.insert(v);
    return out;
}

namespace detail {

inline std::vector<VertexSet> drop_singletons(const std::vector<VertexSet>& edges, VertexSet& dropped) {
    std::vector<VertexSet> out;
    for (const auto& e : edges) {
        if (e.size() == 1)
            dropped |= e;
        else
            out.push_back(e);
    }
    return out;
}

/// Memoized DFS over the c-minor family.  A c-minor arises from any
/// sequence of contractions; removing a variable that is itself a
/// generator (a singleton edge) also yields a c-minor.  Improper
/// outcomes are skipped.  Every reachable proper clutter that still has
/// an edge of size >= 2 must have a free vertex.
inline bool cminor_dfs(int n, std::vector<VertexSet> edges,
                       std::map<std::vector<VertexSet>, bool>& memo) {
    std::sort(edges.begin(), edges.end(), VertexSet::canonical_less);
    auto it = memo.find(edges);
    if (it != memo.end()) return it->second;
    memo[edges] = true; // provisional; cycles impossible, states only shrink

    bool non_discrete = false;
    VertexSet support(n);
    for (const auto& e : edges) {
        support |= e;
        if (e.size() >= 2) non_discrete = true;
    }
    if (non_discrete) {
        bool has_free = false;
        for (int v = 0; v < n && !has_free; ++v) {
            int deg = 0;
            for (const auto& e : edges)
                if (e.contains(v)) ++deg;
            if (deg == 1) has_free = true;
        }
        if (!has_free) {
            memo[edges] = false;
            return false;
        }
    }

    bool ok = true;
    // contractions by any non-isolated vertex
    for (int v : support.members()) {
        auto child = contract_edges(edges, VertexSet(n, {v}));
        if (!child) continue;
        if (!cminor_dfs(n, std::move(*child), memo)) {
            ok = false;
            break;
        }
    }
    // removal of generator variables (singleton edges)
    if (ok) {
        VertexSet dropped(n);
        auto rest = drop_singletons(edges, dropped);
        if (!dropped.empty() && !cminor_dfs(n, std::move(rest), memo)) ok = false;
    }
    memo[edges] = ok;
    return ok;
}

} // namespace detail

/// True iff every proper c-minor of c (including c itself) that has an
/// edge with at least two vertices has a free vertex.
inline bool all_cminors_have_free_vertex(const Clutter& c, int max_n = limits::cover_enumeration_vertices) {
    if (c.vertex_count() > max_n)
        throw size_guard_error("c-minor exploration refused: " + std::to_string(c.vertex_count()) +
                               " vertices exceeds the limit of " + std::to_string(max_n));
    std::map<std::vector<VertexSet>, bool> memo;
    return detail::cminor_dfs(c.vertex_count(), c.edges(), memo);
}

/// The clutter of the ideal cut out by a subfamily of minimal vertex
/// covers: its edges are the minimal transversals of the given covers
/// (the blocker of the subfamily).
inline Clutter intersect_covers(const Clutter& c, const std::vector<VertexSet>& covers) {
    if (covers.empty()) throw validation_error("intersect_covers: empty cover list");
    for (const auto& s : covers)
        if (!c.is_minimal_cover(s))
            throw validation_error("intersect_covers: " + c.render(s) + " is not a minimal vertex cover");
    return c.with_edges(minimal_transversals(c.vertex_count(), covers));
}

} // namespace clutter
