#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "clutter/shelling.hpp"

namespace clutter {

namespace detail {

inline void require_graph(const Clutter& c, const char* who) {
    for (const auto& e : c.edges())
        if (e.size() != 2)
            throw validation_error(std::string(who) + ": all edges must have exactly two vertices");
}

inline void require_no_isolated(const Clutter& c, const char* who, bool allow) {
    if (!allow && c.has_isolated_vertices())
        throw validation_error(std::string(who) + ": graph has isolated vertices " +
                               c.render(c.isolated_vertices()));
}

} // namespace detail

/// Two-coloring of a graph, canonical: the smallest vertex of each
/// component (and every isolated vertex) lands in the first side.
/// Absent when some component is odd.
inline std::optional<std::pair<VertexSet, VertexSet>> bipartition(const Clutter& c) {
    detail::require_graph(c, "bipartition");
    const int n = c.vertex_count();
    std::vector<int> side(n, -1);
    for (int root = 0; root < n; ++root) {
        if (side[root] != -1) continue;
        side[root] = 0;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            int u = queue.front();
            queue.pop_front();
            for (const auto& e : c.edges()) {
                if (!e.contains(u)) continue;
                VertexSet other = e;
                other.erase(u);
                int w = other.first();
                if (side[w] == -1) {
                    side[w] = 1 - side[u];
                    queue.push_back(w);
                } else if (side[w] == side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    VertexSet a(n), b(n);
    for (int v = 0; v < n; ++v) (side[v] == 0 ? a : b).insert(v);
    return std::make_pair(a, b);
}

namespace detail {

/// Pairs (x_i, y_i) of a perfect matching on a bipartite graph: x from
/// the first side, y from the second.
inline std::vector<std::pair<int, int>> matching_pairs(const Clutter& c, const Matching& m,
                                                       const std::pair<VertexSet, VertexSet>& sides) {
    if (!m.perfect) throw validation_error("matching must be perfect");
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : m.edges) {
        VertexSet left = e & sides.first, right = e & sides.second;
        if (left.size() != 1 || right.size() != 1)
            throw validation_error("matching edge " + c.render(e) +
                                   " does not take one vertex from each side");
        pairs.emplace_back(left.first(), right.first());
    }
    return pairs;
}

} // namespace detail

/// Reorder the matching pairs so that every edge {x_i, y_j} satisfies
/// i <= j (the Herzog-Hibi condition (h1)).  Feasibility is exactly
/// acyclicity of the forced-precedence digraph with an arc a -> b for
/// each cross edge from the x-side of pair a to the y-side of pair b;
/// the order returned is the topological order with smallest original
/// index first.  Returns pair indices in their new order.
inline std::optional<std::vector<int>> h1_ordering(const Clutter& c, const Matching& m) {
    detail::require_graph(c, "h1_ordering");
    auto sides = bipartition(c);
    if (!sides) throw validation_error("h1_ordering: graph is not bipartite");
    auto pairs = detail::matching_pairs(c, m, *sides);
    const int g = static_cast<int>(pairs.size());

    std::map<int, int> pair_of_x, pair_of_y;
    for (int i = 0; i < g; ++i) {
        pair_of_x[pairs[i].first] = i;
        pair_of_y[pairs[i].second] = i;
    }
    std::vector<std::vector<int>> succ(g);
    std::vector<int> indegree(g, 0);
    for (const auto& e : c.edges()) {
        VertexSet left = e & sides->first;
        int x = left.first();
        VertexSet right = e - left;
        int y = right.first();
        if (!pair_of_x.count(x) || !pair_of_y.count(y))
            throw validation_error("h1_ordering: matching does not pair every vertex");
        int a = pair_of_x[x], b = pair_of_y[y];
        if (a != b) {
            succ[a].push_back(b);
            ++indegree[b];
        }
    }
    std::vector<int> order;
    std::vector<bool> placed(g, false);
    for (int step = 0; step < g; ++step) {
        int next = -1;
        for (int i = 0; i < g; ++i)
            if (!placed[i] && indegree[i] == 0) {
                next = i;
                break;
            }
        if (next < 0) return std::nullopt; // digraph has a cycle
        placed[next] = true;
        order.push_back(next);
        for (int b : succ[next]) --indegree[b];
    }
    return order;
}

/// Certificate of the Herzog-Hibi criterion for Cohen-Macaulay bipartite
/// graphs: a perfect matching (h0), a pair ordering making every cross
/// edge point upward (h1), and transitivity of the cross edges under
/// that ordering (h2).  Presence of the certificate is equivalent to the
/// graph being Cohen-Macaulay.
struct HerzogHibiCertificate {
    Matching matching;
    std::vector<int> order; // pair indices, h1 order
};

inline std::optional<HerzogHibiCertificate> herzog_hibi_cm(const Clutter& c,
                                                           bool allow_isolated = false) {
    detail::require_graph(c, "herzog_hibi_cm");
    detail::require_no_isolated(c, "herzog_hibi_cm", allow_isolated);
    auto sides = bipartition(c);
    if (!sides) throw validation_error("herzog_hibi_cm: graph is not bipartite");
    if (sides->first.size() != sides->second.size()) return std::nullopt;

    // h0: some perfect matching; any one will do, since the h1 ordering
    // question does not depend on the matching chosen
    std::optional<Matching> pm;
    for_each_perfect_matching(c, [&](const std::vector<int>& picked) {
        std::vector<VertexSet> edges;
        for (int j : picked) edges.push_back(c.edge(j));
        pm = make_matching(c, std::move(edges));
        return false;
    });
    if (!pm) return std::nullopt;

    auto order = h1_ordering(c, *pm);
    if (!order) return std::nullopt;

    // h2 under that ordering: position in `order` is the new pair index
    auto pairs = detail::matching_pairs(c, *pm, *sides);
    const int g = static_cast<int>(pairs.size());
    std::vector<int> new_index(g);
    for (int t = 0; t < g; ++t) new_index[(*order)[t]] = t;
    auto cross_edge = [&](int a, int b) { // x of pair a adjacent to y of pair b?
        VertexSet e(c.vertex_count(), {pairs[a].first, pairs[b].second});
        return c.has_edge(e);
    };
    std::vector<int> by_new(g);
    for (int t = 0; t < g; ++t) by_new[new_index[t]] = t;
    for (int i = 0; i < g; ++i)
        for (int j = i + 1; j < g; ++j)
            for (int k = j + 1; k < g; ++k)
                if (cross_edge(by_new[i], by_new[j]) && cross_edge(by_new[j], by_new[k]) &&
                    !cross_edge(by_new[i], by_new[k]))
                    return std::nullopt;
    return HerzogHibiCertificate{*std::move(pm), *std::move(order)};
}

/// Shelling of the top pure skeleton of the independence complex of a
/// bipartite graph with a perfect matching, built by the h1 recursion:
/// facets through x_g (from the graph minus the last pair) come first,
/// then facets through y_g (from the graph minus the closed pair
/// neighborhood of y_g, each extended by the partner set of N(y_g)).
/// Absent exactly when no h1 ordering exists.
inline std::optional<ShellingOrder> skeleton_shelling(const Clutter& c, const Matching& m) {
    detail::require_graph(c, "skeleton_shelling");
    auto sides = bipartition(c);
    if (!sides) throw validation_error("skeleton_shelling: graph is not bipartite");
    auto h1 = h1_ordering(c, m);
    if (!h1) return std::nullopt;

    auto pairs_orig = detail::matching_pairs(c, m, *sides);
    // relabel pairs into h1 order so cross edges point upward
    std::vector<std::pair<int, int>> pairs;
    for (int idx : *h1) pairs.push_back(pairs_orig[idx]);
    const int n = c.vertex_count();

    auto adjacent = [&](int u, int v) { return c.has_edge(VertexSet(n, {u, v})); };

    std::map<std::vector<int>, std::vector<VertexSet>> memo;
    std::function<const std::vector<VertexSet>&(const std::vector<int>&)> facets_of =
        [&](const std::vector<int>& active) -> const std::vector<VertexSet>& {
        auto it = memo.find(active);
        if (it != memo.end()) return it->second;
        std::vector<VertexSet> out;
        if (active.empty()) {
            out.push_back(VertexSet(n));
        } else {
            int last = active.back();
            int xg = pairs[last].first, yg = pairs[last].second;

            // pairs whose x-vertex is adjacent to y_g (always includes last)
            std::vector<int> hit, rest;
            for (int i : active)
                (adjacent(pairs[i].first, yg) || i == last ? hit : rest).push_back(i);
            VertexSet partner_block(n); // the y-partners of N(y_g)
            for (int i : hit) partner_block.insert(pairs[i].second);

            // neighbor set of that partner block among remaining x-vertices
            VertexSet blocked(n);
            for (int i : rest)
                for (int j : hit)
                    if (adjacent(pairs[i].first, pairs[j].second)) blocked.insert(pairs[i].first);

            // facets containing x_g: recurse without the last pair
            std::vector<int> without_last(active.begin(), active.end() - 1);
            for (const auto& f : facets_of(without_last)) {
                VertexSet h = f;
                h.insert(xg);
                out.push_back(h);
            }
            // facets containing y_g: recurse on the graph minus the hit
            // pairs, keep facets avoiding the blocked x-vertices, extend
            // by the partner block
            for (const auto& f : facets_of(rest)) {
                if (f.intersects(blocked)) continue;
                out.push_back(f | partner_block);
            }
        }
        return memo.emplace(active, std::move(out)).first->second;
    };

    std::vector<int> all(pairs.size());
    for (size_t i = 0; i < pairs.size(); ++i) all[i] = static_cast<int>(i);
    std::vector<VertexSet> facets = facets_of(all);

    auto check = verify_shelling(facets);
    if (!check.valid())
        throw std::logic_error("skeleton shelling construction produced an invalid order");
    return std::move(check.order);
}

/// Attach a degree-one partner to every vertex: the whisker graph
/// G u W(V).  New vertices are labeled with a prime suffix and appended
/// after the original universe.
inline Clutter whisker(const Clutter& c) {
    detail::require_graph(c, "whisker");
    const int n = c.vertex_count();
    if (2 * n > VertexSet::max_capacity)
        throw size_guard_error("whisker refused: doubled universe exceeds 64 vertices");
    std::vector<std::string> labels = c.labels();
    for (int v = 0; v < n; ++v) labels.push_back(c.label(v) + "'");
    std::vector<VertexSet> edges;
    for (const auto& e : c.edges()) {
        VertexSet wide(2 * n);
        for (int v : e.members()) wide.insert(v);
        edges.push_back(wide);
    }
    for (int v = 0; v < n; ++v) edges.push_back(VertexSet(2 * n, {v, n + v}));
    return Clutter(std::move(labels), std::move(edges));
}

/// Unmixedness witness for bipartite graphs: a perfect matching under
/// which, for any two edges e, e' and distinct vertices x in e, y in e'
/// lying in one matching edge, (e\{x}) u (e'\{y}) is again an edge.
/// A witness exists iff the graph is unmixed.
inline std::optional<Matching> unmixed_bipartite_check(const Clutter& c, bool allow_isolated = false) {
    detail::require_graph(c, "unmixed_bipartite_check");
    detail::require_no_isolated(c, "unmixed_bipartite_check", allow_isolated);
    if (!bipartition(c)) throw validation_error("unmixed_bipartite_check: graph is not bipartite");

    std::optional<Matching> found;
    for_each_perfect_matching(c, [&](const std::vector<int>& picked) {
        std::vector<VertexSet> medges;
        for (int j : picked) medges.push_back(c.edge(j));
        const int n = c.vertex_count();
        for (const auto& e : c.edges())
            for (const auto& f : c.edges()) {
                if (e == f) continue;
                for (const auto& ei : medges)
                    for (int x : (e & ei).members())
                        for (int y : (f & ei).members()) {
                            if (x == y) continue;
                            VertexSet s = (e - VertexSet(n, {x})) | (f - VertexSet(n, {y}));
                            if (!c.has_edge(s)) return true; // try next matching
                        }
            }
        found = make_matching(c, std::move(medges));
        return false;
    });
    return found;
}

} // namespace clutter
