#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <vector>

#include "clutter/covers.hpp"
#include "clutter/shelling.hpp"

namespace clutter {

/// Two ordered partitions of the same vertex universe: color classes
/// X^1..X^d and matching parts e_1..e_g, with |e_i n X^j| <= 1.
struct AdmissibleStructure {
    int n = 0;
    std::vector<VertexSet> classes;  // X^1..X^d
    std::vector<VertexSet> matching; // e_1..e_g

    int class_count() const { return static_cast<int>(classes.size()); }
    int matching_count() const { return static_cast<int>(matching.size()); }

    /// Class index of a vertex (0-based), -1 when absent.
    int class_of(int v) const { return find_part(classes, v); }
    /// Matching index of a vertex (0-based), -1 when absent.
    int matching_of(int v) const { return find_part(matching, v); }

private:
    static int find_part(const std::vector<VertexSet>& parts, int v) {
        for (size_t i = 0; i < parts.size(); ++i)
            if (parts[i].contains(v)) return static_cast<int>(i);
        return -1;
    }
};

/// Validate the two partitions and the one-vertex-per-cell condition.
inline AdmissibleStructure make_admissible_structure(int n, std::vector<VertexSet> classes,
                                                     std::vector<VertexSet> matching) {
    auto check_partition = [&](const std::vector<VertexSet>& parts, const char* what) {
        VertexSet seen(n);
        for (const auto& p : parts) {
            if (p.empty()) throw validation_error(std::string(what) + " parts must be nonempty");
            if (seen.intersects(p))
                throw validation_error(std::string(what) + " parts must be disjoint");
            seen |= p;
        }
        if (!(seen == VertexSet::full(n)))
            throw validation_error(std::string(what) + " parts must cover the vertex set");
    };
    check_partition(classes, "class");
    check_partition(matching, "matching");
    for (const auto& e : matching)
        for (const auto& x : classes)
            if ((e & x).size() > 1)
                throw validation_error("a matching part meets a class more than once");
    return AdmissibleStructure{n, std::move(classes), std::move(matching)};
}

/// Strict admissibility: s meets exactly the classes X^1..X^k for
/// k = |s|, and the matching indices read along increasing class index
/// are non-decreasing.  The relaxed variant allows class gaps; the
/// monotonicity requirement is unchanged.
inline bool is_admissible_set(const AdmissibleStructure& a, VertexSet s, bool relaxed = false) {
    std::vector<int> class_of(a.n, -1);
    for (int v : s.members()) {
        int cls = a.class_of(v);
        if ((s & a.classes[cls]).size() > 1)
            throw validation_error("set meets class " + std::to_string(cls + 1) + " more than once");
        class_of[v] = cls;
    }
    std::vector<std::pair<int, int>> seq; // (class, matching index)
    for (int v : s.members()) seq.emplace_back(class_of[v], a.matching_of(v));
    std::sort(seq.begin(), seq.end());
    for (size_t t = 0; t < seq.size(); ++t) {
        if (!relaxed && seq[t].first != static_cast<int>(t)) return false;
        if (t > 0 && seq[t].second < seq[t - 1].second) return false;
    }
    return true;
}

namespace detail {

/// All maximal admissible sets, by DFS over classes.  In strict mode the
/// admissible sets are exactly the class-prefix chains, so a set is
/// maximal iff the next class cannot be entered.  In relaxed mode the
/// admissible sets form a simplicial complex and maximality is checked
/// by single-vertex extension.
inline std::vector<VertexSet> maximal_admissible_sets(const AdmissibleStructure& a, bool relaxed) {
    std::vector<VertexSet> out;
    const int d = a.class_count();

    std::function<void(int, int, VertexSet)> grow = [&](int cls, int last_match, VertexSet cur) {
        bool extended = false;
        for (int t = cls; t < d; ++t) {
            for (int v : a.classes[t].members()) {
                if (a.matching_of(v) >= last_match) {
                    extended = true;
                    VertexSet next = cur;
                    next.insert(v);
                    grow(t + 1, a.matching_of(v), next);
                }
            }
            if (!relaxed) break; // strict mode: classes must be consecutive
        }
        if (!extended && !cur.empty()) out.push_back(cur);
    };
    grow(0, 0, VertexSet(a.n));

    std::sort(out.begin(), out.end(), VertexSet::canonical_less);
    out.erase(std::unique(out.begin(), out.end()), out.end());

    if (relaxed) {
        // the DFS cannot extend into earlier classes, so filter by the
        // full single-vertex maximality test
        std::vector<VertexSet> maximal;
        for (const auto& s : out) {
            bool is_max = true;
            for (int v = 0; v < a.n && is_max; ++v) {
                if (s.contains(v)) continue;
                VertexSet bigger = s;
                bigger.insert(v);
                if (s.intersects(a.classes[a.class_of(v)])) continue;
                if (is_admissible_set(a, bigger, true)) is_max = false;
            }
            if (is_max) maximal.push_back(s);
        }
        return maximal;
    }
    return out;
}

} // namespace detail

/// The complete admissible clutter of a structure: all maximal
/// admissible sets that contain no matching part, plus the matching
/// parts themselves.  Every matching part must itself be admissible.
inline Clutter generate_complete_admissible(const std::vector<std::string>& labels,
                                            const AdmissibleStructure& a, bool relaxed = false) {
    for (const auto& e : a.matching)
        if (!is_admissible_set(a, e, relaxed))
            throw validation_error("matching part is not an admissible set");
    std::vector<VertexSet> edges;
    for (const auto& s : detail::maximal_admissible_sets(a, relaxed)) {
        bool contains_part = false;
        for (const auto& e : a.matching)
            if (e.subset_of(s) && !(e == s)) contains_part = true;
        if (!contains_part) edges.push_back(s);
    }
    for (const auto& e : a.matching)
        if (std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
    return Clutter(labels, std::move(edges));
}

/// The d-uniform complete admissible clutter on d*g vertices x{i}_{j}
/// (class i, matching part j), with vertex x{i}_{j} at index
/// (i-1)*g + (j-1).  Its edges are the one-vertex-per-class picks with
/// non-decreasing matching indices; the edge count is then the number of
/// such sequences, binom(d+g-1, g-1).
struct GeneratedUniform {
    Clutter clutter;
    AdmissibleStructure structure;
};

inline long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    long r = 1;
    for (int t = 1; t <= k; ++t) r = r * (n - k + t) / t;
    return r;
}

inline GeneratedUniform generate_complete_admissible_uniform(int g, int d,
                                                             long max_edges = limits::generated_edges) {
    if (g < 1 || d < 1) throw validation_error("uniform generation needs g, d >= 1");
    if (static_cast<long>(g) * d > VertexSet::max_capacity)
        throw size_guard_error("uniform generation refused: g*d exceeds 64 vertices");
    long expected = binomial(d + g - 1, g - 1);
    if (expected > max_edges)
        throw size_guard_error("uniform generation refused: " + std::to_string(expected) +
                               " edges exceeds the limit of " + std::to_string(max_edges));

    const int n = g * d;
    std::vector<std::string> labels(n);
    std::vector<VertexSet> classes(d, VertexSet(n)), matching(g, VertexSet(n));
    auto at = [&](int i, int j) { return i * g + j; }; // class i, matching j (0-based)
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < g; ++j) {
            labels[at(i, j)] = "x" + std::to_string(i + 1) + "_" + std::to_string(j + 1);
            classes[i].insert(at(i, j));
            matching[j].insert(at(i, j));
        }
    auto a = make_admissible_structure(n, std::move(classes), std::move(matching));

    std::vector<VertexSet> edges;
    std::vector<int> pick(d, 0);
    std::function<void(int, int)> walk = [&](int i, int last) {
        if (i == d) {
            VertexSet e(n);
            for (int t = 0; t < d; ++t) e.insert(at(t, pick[t]));
            edges.push_back(e);
            return;
        }
        for (int j = last; j < g; ++j) {
            pick[i] = j;
            walk(i + 1, j);
        }
    };
    walk(0, 0);
    if (static_cast<long>(edges.size()) != expected)
        throw std::logic_error("uniform generation produced an unexpected edge count");
    return GeneratedUniform{Clutter(labels, std::move(edges)), std::move(a)};
}

/// True iff c is exactly the complete admissible clutter of a (checked
/// by regeneration) and every edge meets every class once (uniformity).
inline bool is_complete_admissible_uniform(const Clutter& c, const AdmissibleStructure& a) {
    for (const auto& e : c.edges()) {
        if (e.size() != a.class_count()) return false;
        for (const auto& x : a.classes)
            if ((e & x).size() != 1) return false;
    }
    for (const auto& e : a.matching)
        if (!is_admissible_set(a, e)) return false;
    Clutter regenerated = generate_complete_admissible(c.labels(), a);
    return regenerated == c;
}

/// Index tuple (j_1..j_d) of a uniform admissible edge: the matching
/// index of its vertex in each class, in class order.
inline std::vector<int> class_index_tuple(const AdmissibleStructure& a, VertexSet e) {
    std::vector<int> tuple(a.class_count(), -1);
    for (int v : e.members()) tuple[a.class_of(v)] = a.matching_of(v);
    return tuple;
}

/// Shelling of the complex generated by the edges of a complete
/// admissible uniform clutter: sort the edges lexicographically by index
/// tuple.  The witness for F_i < F_j with first tuple difference at
/// class t swaps the class-t vertex of F_j for that of F_i.  The order
/// is verified before returning.
inline ShellingOrder lex_shelling(const Clutter& c, const AdmissibleStructure& a) {
    if (!is_complete_admissible_uniform(c, a))
        throw validation_error("lex_shelling: clutter is not complete admissible uniform "
                               "for the given structure");
    std::vector<VertexSet> facets = c.edges();
    std::sort(facets.begin(), facets.end(), [&](VertexSet x, VertexSet y) {
        return class_index_tuple(a, x) < class_index_tuple(a, y);
    });
    const int s = static_cast<int>(facets.size());
    std::vector<std::vector<int>> tuples;
    std::map<std::vector<int>, int> position;
    for (int j = 0; j < s; ++j) {
        tuples.push_back(class_index_tuple(a, facets[j]));
        position[tuples.back()] = j;
    }
    auto vertex_in = [&](int cls, int match) { return (a.classes[cls] & a.matching[match]).first(); };

    ShellingOrder order;
    order.facets = facets;
    order.witnesses.resize(s);
    for (int j = 1; j < s; ++j) {
        order.witnesses[j].resize(j);
        for (int i = 0; i < j; ++i) {
            int t = 0;
            while (tuples[i][t] == tuples[j][t]) ++t;
            // swap the class-t vertex of F_j for that of F_i; the result
            // is an earlier facet differing from F_j only there
            int v = vertex_in(t, tuples[j][t]);
            std::vector<int> swapped = tuples[j];
            swapped[t] = tuples[i][t];
            auto it = position.find(swapped);
            if (it == position.end() || it->second >= j ||
                !((facets[j] - facets[it->second]).size() == 1 &&
                  (facets[j] - facets[it->second]).contains(v)))
                throw std::logic_error("lexicographic order failed shelling verification");
            order.witnesses[j][i] = {v, it->second};
        }
    }
    return order;
}

/// The blocker: a clutter on the same universe whose edges are the
/// minimal vertex covers of c.  The edgeless clutter has the single
/// cover {}, which no clutter can carry as an edge.
inline Clutter alexander_dual(const Clutter& c, int max_n = limits::cover_enumeration_vertices) {
    if (c.edge_count() == 0)
        throw validation_error("the blocker of an edgeless clutter has the empty set "
                               "as its only cover and is not a clutter");
    return c.with_edges(minimal_vertex_covers(c, max_n));
}

/// Supports of the generators of the dual ideal I*: the complement of
/// each edge, listed in the stored (canonical) edge order.  The list is
/// taken verbatim from the generators; it is not minimalized and may
/// fail the clutter condition, so it is returned as a plain list.
inline std::vector<VertexSet> dual_ideal_generators(const Clutter& c) {
    std::vector<VertexSet> out;
    for (const auto& e : c.edges()) out.push_back(e.complement());
    return out;
}

/// Check one ordering for linear quotients: for each i and each j < i
/// there must be k < i with |g_k \ g_i| = 1 and g_k \ g_i inside
/// g_j \ g_i.  Then every colon ideal (g_1..g_{i-1}) : g_i is generated
/// by variables.
inline bool linear_quotients_order_valid(const std::vector<VertexSet>& gens) {
    for (size_t i = 1; i < gens.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            bool mediated = false;
            for (size_t k = 0; k < i && !mediated; ++k) {
                VertexSet d = gens[k] - gens[i];
                if (d.size() == 1 && d.subset_of(gens[j] - gens[i])) mediated = true;
            }
            if (!mediated) return false;
        }
    return true;
}

/// Search for a linear-quotients ordering of a duplicate-free generator
/// list by backtracking; returns the ordering as indices into gens.
inline std::optional<std::vector<int>> has_linear_quotients(const std::vector<VertexSet>& gens,
                                                            int max_gens = limits::shelling_search_facets * 4) {
    for (size_t i = 0; i < gens.size(); ++i)
        for (size_t j = i + 1; j < gens.size(); ++j)
            if (gens[i] == gens[j]) throw validation_error("generator list has duplicates");
    const int q = static_cast<int>(gens.size());
    if (q > max_gens)
        throw size_guard_error("linear quotients search refused: " + std::to_string(q) +
                               " generators exceeds the limit of " + std::to_string(max_gens));
    if (q > 63) throw size_guard_error("linear quotients search supports at most 63 generators");

    // as with shellings, extendability of a prefix depends only on its set
    std::unordered_set<std::uint64_t> dead;
    std::vector<int> order;
    std::function<bool(std::uint64_t)> extend = [&](std::uint64_t used) -> bool {
        if (static_cast<int>(order.size()) == q) return true;
        if (dead.contains(used)) return false;
        for (int i = 0; i < q; ++i) {
            if (used & (1ull << i)) continue;
            bool ok = true;
            for (int j = 0; j < q && ok; ++j) {
                if (!(used & (1ull << j))) continue;
                bool mediated = false;
                for (int k = 0; k < q && !mediated; ++k) {
                    if (!(used & (1ull << k))) continue;
                    VertexSet d = gens[k] - gens[i];
                    if (d.size() == 1 && d.subset_of(gens[j] - gens[i])) mediated = true;
                }
                if (!mediated) ok = false;
            }
            if (!ok) continue;
            order.push_back(i);
            if (extend(used | (1ull << i))) return true;
            order.pop_back();
        }
        dead.insert(used);
        return false;
    };
    if (!extend(0)) return std::nullopt;
    return order;
}

} // namespace clutter
