#pragma once

#include <algorithm>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "clutter/matching.hpp"
#include "clutter/minors.hpp"

namespace clutter {

namespace detail {

/// Exponent vector of a product of two square-free monomials: every
/// exponent is 0, 1 or 2, held as two nested bitsets.
struct Multidegree {
    VertexSet once;  // exponent >= 1
    VertexSet twice; // exponent == 2

    static Multidegree of_edge(VertexSet e) { return {e, VertexSet(e.capacity())}; }

    static Multidegree product(VertexSet e, VertexSet f) { return {e | f, e & f}; }

    bool divides(const Multidegree& a) const {
        return once.subset_of(a.once) && twice.subset_of(a.twice);
    }

    /// Quotient by a square-free monomial with support b, clamped at 0.
    Multidegree colon_by_squarefree(VertexSet b) const {
        return {twice | (once - b), twice - b};
    }

    VertexSet support() const { return once; }

    friend bool operator==(const Multidegree&, const Multidegree&) = default;
};

/// Drop generators that are proper multiples of another (or duplicates).
inline std::vector<Multidegree> minimalize(std::vector<Multidegree> gens) {
    std::vector<Multidegree> out;
    for (size_t i = 0; i < gens.size(); ++i) {
        bool keep = true;
        for (size_t j = 0; j < gens.size() && keep; ++j) {
            if (i == j) continue;
            if (gens[j].divides(gens[i]) && !(gens[i] == gens[j] && j > i)) keep = false;
        }
        if (keep) out.push_back(gens[i]);
    }
    return out;
}

inline bool contains_edge(const Clutter& c, VertexSet s) { return !c.is_independent(s); }

inline void require_konig_matching(const Matching& m, const char* who) {
    if (!m.perfect || !m.konig_type)
        throw validation_error(std::string(who) + ": matching must be a perfect matching of Konig type");
}

} // namespace detail

/// The four combinatorial/algebraic reformulations of unmixedness for a
/// clutter with a perfect matching of Konig type.  Each is equivalent to
/// is_unmixed on such clutters.
enum class UnmixednessCondition {
    VertexExchange,       // (e\{x}) u (e'\{y}) contains an edge, x,y in a matching edge
    SupportDivision,      // supp(x_e x_e' / x_T) contains an edge for T inside a matching edge
    PairColon,            // (x_e x_e' : x_{e_i}) lies in the edge ideal
    ColonSumDecomposition // I equals the sum of (I^2 : x_{e_i})
};

/// Evaluate one reformulation combinatorially (no polynomial arithmetic;
/// monomials are handled through their exponent vectors).
inline bool check_unmixedness_condition(const Clutter& c, const Matching& m,
                                        UnmixednessCondition which) {
    detail::require_konig_matching(m, "check_unmixedness_condition");
    const auto& E = c.edges();
    const int n = c.vertex_count();

    switch (which) {
    case UnmixednessCondition::VertexExchange: {
        for (const auto& e : E)
            for (const auto& f : E) {
                if (e == f) continue;
                for (const auto& ei : m.edges) {
                    for (int x : (e & ei).members())
                        for (int y : (f & ei).members()) {
                            if (x == y) continue;
                            VertexSet s = e | f;
                            s.erase(x);
                            s.erase(y);
                            s |= (e - VertexSet(n, {x})) | (f - VertexSet(n, {y}));
                            if (!detail::contains_edge(c, s)) return false;
                        }
                }
            }
        return true;
    }
    case UnmixednessCondition::SupportDivision: {
        for (size_t a = 0; a < E.size(); ++a)
            for (size_t b = a + 1; b < E.size(); ++b) {
                auto prod = detail::Multidegree::product(E[a], E[b]);
                for (const auto& ei : m.edges) {
                    // T ranges over nonempty subsets of e_i whose monomial
                    // divides x_e * x_e'; square-free, so T inside the union.
                    VertexSet pool = ei & prod.once;
                    auto pm = pool.members();
                    for (std::uint64_t mask = 1; mask < (1ull << pm.size()); ++mask) {
                        VertexSet t(n);
                        for (size_t k = 0; k < pm.size(); ++k)
                            if (mask & (1ull << k)) t.insert(pm[k]);
                        VertexSet support = prod.colon_by_squarefree(t).support();
                        if (!detail::contains_edge(c, support)) return false;
                    }
                }
            }
        return true;
    }
    case UnmixednessCondition::PairColon: {
        for (size_t a = 0; a < E.size(); ++a)
            for (size_t b = a + 1; b < E.size(); ++b) {
                auto prod = detail::Multidegree::product(E[a], E[b]);
                for (const auto& ei : m.edges) {
                    // (x_e x_e' : x_{e_i}) is principal; test its generator.
                    VertexSet support = prod.colon_by_squarefree(ei).support();
                    if (!detail::contains_edge(c, support)) return false;
                }
            }
        return true;
    }
    case UnmixednessCondition::ColonSumDecomposition: {
        // Generators of I^2 are the pairwise products (repeats allowed).
        std::vector<detail::Multidegree> square;
        for (size_t a = 0; a < E.size(); ++a)
            for (size_t b = a; b < E.size(); ++b)
                square.push_back(detail::Multidegree::product(E[a], E[b]));
        std::vector<detail::Multidegree> sum_gens;
        for (const auto& ei : m.edges) {
            std::vector<detail::Multidegree> colon;
            for (const auto& g : square) colon.push_back(g.colon_by_squarefree(ei));
            for (const auto& g : detail::minimalize(std::move(colon))) sum_gens.push_back(g);
        }
        sum_gens = detail::minimalize(std::move(sum_gens));
        // sum contained in I: every generator's support contains an edge
        for (const auto& g : sum_gens)
            if (!detail::contains_edge(c, g.support())) return false;
        // I contained in sum: every edge monomial is a multiple of a generator
        for (const auto& e : E) {
            auto target = detail::Multidegree::of_edge(e);
            bool divisible = false;
            for (const auto& g : sum_gens)
                if (g.divides(target)) {
                    divisible = true;
                    break;
                }
            if (!divisible) return false;
        }
        return true;
    }
    }
    return false; // unreachable
}

/// Five-way unmixedness equivalence report for a clutter with a Konig
/// type perfect matching: unmixedness itself plus the four
/// reformulations, and whether they all agree.
struct UnmixednessReport {
    bool unmixed = false;
    bool vertex_exchange = false;
    bool support_division = false;
    bool pair_colon = false;
    bool colon_sum = false;

    bool all_agree() const {
        return unmixed == vertex_exchange && unmixed == support_division && unmixed == pair_colon &&
               unmixed == colon_sum;
    }
};

inline UnmixednessReport unmixedness_equivalence_report(const Clutter& c, const Matching& m) {
    detail::require_konig_matching(m, "unmixedness_equivalence_report");
    UnmixednessReport r;
    r.unmixed = is_unmixed(c);
    r.vertex_exchange = check_unmixedness_condition(c, m, UnmixednessCondition::VertexExchange);
    r.support_division = check_unmixedness_condition(c, m, UnmixednessCondition::SupportDivision);
    r.pair_colon = check_unmixedness_condition(c, m, UnmixednessCondition::PairColon);
    r.colon_sum = check_unmixedness_condition(c, m, UnmixednessCondition::ColonSumDecomposition);
    return r;
}

/// Edge-ordering criterion: for every pair of edges f1, f2 and every
/// matching edge e_i, the intersections f1 n e_i and f2 n e_i are
/// comparable under inclusion.  Implies unmixedness.
inline bool ordering_condition(const Clutter& c, const Matching& m) {
    detail::require_konig_matching(m, "ordering_condition");
    for (const auto& f1 : c.edges())
        for (const auto& f2 : c.edges())
            for (const auto& ei : m.edges) {
                VertexSet a = f1 & ei, b = f2 & ei;
                if (!a.subset_of(b) && !b.subset_of(a)) return false;
            }
    return true;
}

namespace detail {

/// Vertex-selection phase of the cycle search.  Chosen edges are already
/// restricted to vertices lying in exactly two of them; top each edge up
/// to exactly two picked vertices, pruning any pick that would push an
/// edge past two.
class CycleVertexFill {
public:
    CycleVertexFill(std::vector<VertexSet> pruned_edges, std::vector<std::pair<int, int>> incidence)
        : edges_(std::move(pruned_edges)), incidence_(std::move(incidence)),
          counts_(edges_.size(), 0), picked_(static_cast<int>(incidence_.size())) {}

    bool solve() { return fill(0); }

private:
    bool fill(size_t at) {
        if (at == edges_.size()) return true;
        if (counts_[at] == 2) return fill(at + 1);
        for (int v : (edges_[at] - picked_).members()) {
            auto [a, b] = incidence_[v];
            if (counts_[a] >= 2 || counts_[b] >= 2) continue;
            picked_.insert(v);
            ++counts_[a];
            ++counts_[b];
            if (fill(at)) return true;
            --counts_[a];
            --counts_[b];
            picked_.erase(v);
        }
        return false;
    }

    std::vector<VertexSet> edges_;
    std::vector<std::pair<int, int>> incidence_; // the two chosen edges of each vertex
    std::vector<int> counts_;
    VertexSet picked_;
};

} // namespace detail

/// Cycle of length r: an r x r submatrix of the incidence matrix with
/// exactly two 1's in each row and column.  The search enumerates edge
/// subsets (size-ascending) and then picks rows with degree pruning:
/// only vertices lying in exactly two chosen edges are eligible, and a
/// pick that would put three chosen vertices in one edge is cut off.
inline bool has_cycle_of_length(const Clutter& c, int r) {
    if (r < 3) throw validation_error("cycles have length at least 3");
    const int n = c.vertex_count(), q = c.edge_count();
    if (r > n || r > q) return false;

    std::vector<int> order(q);
    for (int j = 0; j < q; ++j) order[j] = j;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return c.edge(a).size() < c.edge(b).size(); });

    std::vector<int> chosen;
    auto try_complete = [&]() -> bool {
        // eligible rows: vertices in exactly two chosen edges
        std::vector<std::pair<int, int>> incidence(n, {-1, -1});
        VertexSet eligible(n);
        for (int v = 0; v < n; ++v) {
            int deg = 0, a = -1, b = -1;
            for (size_t k = 0; k < chosen.size(); ++k)
                if (c.edge(chosen[k]).contains(v)) {
                    ++deg;
                    (deg == 1 ? a : b) = static_cast<int>(k);
                    if (deg > 2) break;
                }
            if (deg == 2) {
                eligible.insert(v);
                incidence[v] = {a, b};
            }
        }
        std::vector<VertexSet> pruned;
        for (int j : chosen) {
            VertexSet e = c.edge(j) & eligible;
            if (e.size() < 2) return false;
            pruned.push_back(e);
        }
        return detail::CycleVertexFill(std::move(pruned), std::move(incidence)).solve();
    };

    std::function<bool(int)> pick_edges = [&](int from) -> bool {
        if (static_cast<int>(chosen.size()) == r) return try_complete();
        int still_needed = r - static_cast<int>(chosen.size());
        for (int k = from; k + still_needed <= q; ++k) {
            chosen.push_back(order[k]);
            if (pick_edges(k + 1)) return true;
            chosen.pop_back();
        }
        return false;
    };
    return pick_edges(0);
}

/// Balanced: no odd cycles.  Any cycle has length at most min(n, q),
/// so the scan is exact, not heuristic.
inline bool is_balanced(const Clutter& c) {
    int bound = std::min(c.vertex_count(), c.edge_count());
    for (int r = 3; r <= bound; r += 2)
        if (has_cycle_of_length(c, r)) return false;
    return true;
}

/// Totally balanced: no cycles at all.
inline bool is_totally_balanced(const Clutter& c) {
    int bound = std::min(c.vertex_count(), c.edge_count());
    for (int r = 3; r <= bound; ++r)
        if (has_cycle_of_length(c, r)) return false;
    return true;
}

/// Every matching edge contains a free vertex of the clutter.
inline bool matching_edges_have_free_vertex(const Clutter& c, const Matching& m) {
    if (!m.perfect)
        throw validation_error("matching_edges_have_free_vertex: matching must be perfect");
    VertexSet free = free_vertices(c);
    for (const auto& e : m.edges)
        if (!e.intersects(free)) return false;
    return true;
}

/// Search for a Konig-type perfect matching under which every matching
/// edge has a free vertex and the edge-ordering criterion holds.
/// Witness or absent; the search over perfect matchings is exhaustive.
inline std::optional<Matching> find_free_ordered_matching(const Clutter& c,
                                                          bool allow_isolated = false) {
    if (!allow_isolated && c.has_isolated_vertices())
        throw validation_error("find_free_ordered_matching: clutter has isolated vertices " +
                               c.render(c.isolated_vertices()));
    const int tau = covering_number(c);
    std::optional<Matching> found;
    for_each_perfect_matching(c, [&](const std::vector<int>& picked) {
        if (static_cast<int>(picked.size()) != tau) return true;
        std::vector<VertexSet> edges;
        for (int j : picked) edges.push_back(c.edge(j));
        Matching m = make_matching(c, std::move(edges), tau);
        if (matching_edges_have_free_vertex(c, m) && ordering_condition(c, m)) {
            found = std::move(m);
            return false;
        }
        return true;
    });
    return found;
}

} // namespace clutter
