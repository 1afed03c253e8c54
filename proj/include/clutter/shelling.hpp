#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <unordered_set>
#include <vector>

#include "clutter/structure.hpp"

namespace clutter {

/// A facet order together with the pairwise witnesses of the
/// Bjorner-Wachs shelling condition: for every i < j some vertex
/// v in F_j \ F_i and some l < j with F_j \ F_l = {v}.
struct ShellingOrder {
    struct Witness {
        int vertex = -1;
        int ell = -1;
    };

    std::vector<VertexSet> facets;
    /// witnesses[j][i] is the witness for the pair (i, j), i < j.
    std::vector<std::vector<Witness>> witnesses;

    bool pure() const {
        if (facets.empty()) return true;
        for (const auto& f : facets)
            if (f.size() != facets.front().size()) return false;
        return true;
    }
};

/// Result of checking a proposed facet order.  On failure, (fail_i,
/// fail_j) is the first pair with no witness.
struct ShellingCheck {
    std::optional<ShellingOrder> order;
    int fail_i = -1;
    int fail_j = -1;

    bool valid() const { return order.has_value(); }
};

namespace detail {

inline void require_antichain(const std::vector<VertexSet>& facets) {
    for (size_t i = 0; i < facets.size(); ++i)
        for (size_t j = 0; j < facets.size(); ++j)
            if (i != j && facets[i].subset_of(facets[j]))
                throw validation_error("facet family is not an antichain");
}

} // namespace detail

/// Check the shelling condition for the facets in the given order.
/// Facets must form an antichain.
inline ShellingCheck verify_shelling(const std::vector<VertexSet>& facets) {
    detail::require_antichain(facets);
    ShellingOrder order;
    order.facets = facets;
    order.witnesses.resize(facets.size());
    for (size_t j = 1; j < facets.size(); ++j) {
        // vertices v admitting some l < j with F_j \ F_l = {v}
        const int n = facets[j].capacity();
        VertexSet single_diff(n);
        std::vector<int> ell_for(n, -1);
        for (size_t l = 0; l < j; ++l) {
            VertexSet d = facets[j] - facets[l];
            if (d.size() == 1) {
                int v = d.first();
                if (ell_for[v] < 0) {
                    ell_for[v] = static_cast<int>(l);
                    single_diff.insert(v);
                }
            }
        }
        order.witnesses[j].resize(j);
        for (size_t i = 0; i < j; ++i) {
            VertexSet candidates = (facets[j] - facets[i]) & single_diff;
            if (candidates.empty())
                return ShellingCheck{std::nullopt, static_cast<int>(i), static_cast<int>(j)};
            int v = candidates.first();
            order.witnesses[j][i] = {v, ell_for[v]};
        }
    }
    return ShellingCheck{std::move(order), -1, -1};
}

/// Exhaustive shelling search over facet orders.  Appending a facet to a
/// prefix is legal or not depending only on the prefix as a set, so the
/// search memoizes dead prefix sets.  A new facet must differ from some
/// predecessor in exactly one vertex (pruned first), and every
/// predecessor must see one of those single-difference vertices.
inline std::optional<ShellingOrder> bruteforce_shelling(const std::vector<VertexSet>& facets,
                                                        int max_facets = limits::shelling_search_facets) {
    detail::require_antichain(facets);
    const int s = static_cast<int>(facets.size());
    if (s > max_facets)
        throw size_guard_error("shelling search refused: " + std::to_string(s) +
                               " facets exceeds the limit of " + std::to_string(max_facets));
    if (s == 0) return ShellingOrder{};
    if (s > 63) throw size_guard_error("shelling search supports at most 63 facets");

    const int n = facets[0].capacity();
    // diff_single[j][l]: the lone vertex of F_j \ F_l, or -1
    std::vector<std::vector<int>> diff_single(s, std::vector<int>(s, -1));
    for (int j = 0; j < s; ++j)
        for (int l = 0; l < s; ++l) {
            if (l == j) continue;
            VertexSet d = facets[j] - facets[l];
            if (d.size() == 1) diff_single[j][l] = d.first();
        }

    std::unordered_set<std::uint64_t> dead;
    std::vector<int> order_out;

    std::function<bool(std::uint64_t)> extend = [&](std::uint64_t used) -> bool {
        if (static_cast<int>(order_out.size()) == s) return true;
        if (dead.contains(used)) return false;
        for (int j = 0; j < s; ++j) {
            if (used & (1ull << j)) continue;
            if (!order_out.empty()) {
                VertexSet singles(n);
                for (int l = 0; l < s; ++l)
                    if ((used & (1ull << l)) && diff_single[j][l] >= 0)
                        singles.insert(diff_single[j][l]);
                if (singles.empty()) continue;
                bool ok = true;
                for (int i = 0; i < s && ok; ++i)
                    if (used & (1ull << i))
                        if (!(facets[j] - facets[i]).intersects(singles)) ok = false;
                if (!ok) continue;
            }
            order_out.push_back(j);
            if (extend(used | (1ull << j))) return true;
            order_out.pop_back();
        }
        dead.insert(used);
        return false;
    };

    if (!extend(0)) return std::nullopt;
    std::vector<VertexSet> ordered;
    for (int j : order_out) ordered.push_back(facets[j]);
    auto check = verify_shelling(ordered);
    return std::move(check.order);
}

/// Facets of the k-th pure skeleton: all k-subsets of the given facets,
/// deduplicated, in canonical order.
inline std::vector<VertexSet> pure_skeleton(const std::vector<VertexSet>& facets, int k) {
    if (k < 0) throw validation_error("pure_skeleton: k must be nonnegative");
    std::vector<VertexSet> out;
    for (const auto& f : facets) {
        if (f.size() < k) continue;
        auto mem = f.members();
        std::vector<int> pick;
        std::function<void(size_t)> choose = [&](size_t from) {
            if (static_cast<int>(pick.size()) == k) {
                out.push_back(VertexSet::from_indices(f.capacity(), pick));
                return;
            }
            for (size_t t = from; t + (k - pick.size()) <= mem.size(); ++t) {
                pick.push_back(mem[t]);
                choose(t + 1);
                pick.pop_back();
            }
        };
        choose(0);
    }
    std::sort(out.begin(), out.end(), VertexSet::canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

namespace detail {

/// One level of the free-vertex shelling recursion.  Facets stay
/// subsets of the original universe throughout: a contracted clutter
/// keeps the full vertex set and its isolated vertices join every facet,
/// so concatenating the two recursive facet lists needs no relabeling.
///
/// edges: current edge family (over the fixed universe).
/// matching: pairwise disjoint edges partitioning the current support,
/// with count equal to the current covering number.
inline bool free_vertex_shelling_rec(int n, const std::vector<VertexSet>& edges,
                                     const std::vector<VertexSet>& matching,
                                     std::vector<VertexSet>& out) {
    if (edges.empty()) {
        out.push_back(VertexSet::full(n));
        return true;
    }

    // Singleton edges force their vertex into every cover; peel them off
    // and recurse on the rest.  (Dropping a generator variable is a
    // c-minor.)  Their vertices are subtracted from the sub-facets.
    VertexSet forced(n);
    std::vector<VertexSet> big;
    for (const auto& e : edges) {
        if (e.size() == 1)
            forced |= e;
        else
            big.push_back(e);
    }
    if (!forced.empty()) {
        std::vector<VertexSet> sub_matching;
        for (const auto& e : matching)
            if (!e.subset_of(forced)) sub_matching.push_back(e);
        std::vector<VertexSet> sub;
        if (!free_vertex_shelling_rec(n, big, sub_matching, sub)) return false;
        for (auto& f : sub) out.push_back(f - forced);
        return true;
    }

    // Pick the free vertex: smallest index inside the smallest-index
    // matching edge (all have size >= 2 here) that contains one.
    VertexSet degree_one(n);
    for (int v = 0; v < n; ++v) {
        int deg = 0;
        for (const auto& e : edges)
            if (e.contains(v)) ++deg;
        if (deg == 1) degree_one.insert(v);
    }
    int pivot = -1, pivot_edge = -1;
    for (size_t i = 0; i < matching.size() && pivot < 0; ++i) {
        VertexSet candidates = matching[i] & degree_one;
        if (!candidates.empty()) {
            pivot = candidates.first();
            pivot_edge = static_cast<int>(i);
        }
    }
    if (pivot < 0) return false; // no free vertex in any matching edge

    VertexSet em = matching[pivot_edge];
    VertexSet rest = em;
    rest.erase(pivot);

    // Branch 1: contract the pivot; its facets are the facets containing
    // the pivot.  Branch 2: contract the rest of the pivot's matching
    // edge; its facets are those avoiding the pivot.
    auto c1 = contract_edges(edges, VertexSet(n, {pivot}));
    auto c2 = contract_edges(edges, rest);
    if (!c1 || !c2) return false; // cannot happen for a clutter family

    auto propagate_matching = [&](const std::vector<VertexSet>& child)
        -> std::optional<std::vector<VertexSet>> {
        VertexSet support(n);
        for (const auto& e : child) support |= e;
        std::vector<VertexSet> next;
        for (const auto& e : matching) {
            VertexSet shrunk = e & support;
            if (shrunk.empty()) continue; // matching edge went fully isolated
            if (std::find(child.begin(), child.end(), shrunk) == child.end())
                return std::nullopt; // hypotheses violated (input not unmixed)
            next.push_back(shrunk);
        }
        return next;
    };

    auto m1 = propagate_matching(*c1);
    auto m2 = propagate_matching(*c2);
    if (!m1 || !m2) return false;
    if (!free_vertex_shelling_rec(n, *c1, *m1, out)) return false;
    return free_vertex_shelling_rec(n, *c2, *m2, out);
}

} // namespace detail

/// Constructive shelling for an unmixed clutter with a Konig-type
/// perfect matching: recursively splits on a free vertex of a matching
/// edge with at least two vertices, shells the two contractions and
/// concatenates (facets through the pivot first).  Succeeds in
/// particular whenever all c-minors have a free vertex; returns absent
/// if some level needs a free vertex and has none.
inline std::optional<ShellingOrder> recursive_shelling(const Clutter& c, const Matching& m) {
    detail::require_konig_matching(m, "recursive_shelling");
    if (!is_unmixed(c)) throw validation_error("recursive_shelling: clutter is not unmixed");

    std::vector<VertexSet> facets;
    if (!detail::free_vertex_shelling_rec(c.vertex_count(), c.edges(), m.edges, facets))
        return std::nullopt;
    auto check = verify_shelling(facets);
    if (!check.valid())
        throw std::logic_error("recursive shelling construction produced an invalid order");
    return std::move(check.order);
}

} // namespace clutter
