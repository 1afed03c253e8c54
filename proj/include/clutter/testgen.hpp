#pragma once

#include <random>
#include <string>
#include <vector>

#include "clutter/covers.hpp"
#include "clutter/matching.hpp"
#include "clutter/structure.hpp"

namespace clutter::testgen {

/// Seeded random instance generators for property tests.  Everything is
/// driven by a caller-owned engine so runs are reproducible.

using Rng = std::mt19937_64;

inline std::vector<std::string> numbered_labels(int n) {
    std::vector<std::string> out;
    for (int v = 1; v <= n; ++v) out.push_back("v" + std::to_string(v));
    return out;
}

inline int uniform_int(Rng& rng, int lo, int hi) {
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// A clutter together with a Konig-type perfect matching, built
/// directly: a random partition into matching edges plus extra edges
/// that all pass through a fixed transversal, which pins the covering
/// number at the matching size.
struct KonigInstance {
    Clutter clutter;
    Matching matching;
};

inline KonigInstance random_konig_instance(Rng& rng, int max_n = 12, int max_extra = 5) {
    const int n = uniform_int(rng, 2, max_n);
    const int g = uniform_int(rng, 1, std::max(1, n / 2));

    // partition [0,n) into g nonempty blocks
    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<VertexSet> blocks(g, VertexSet(n));
    for (int i = 0; i < g; ++i) blocks[i].insert(verts[i]);
    for (int t = g; t < n; ++t) blocks[uniform_int(rng, 0, g - 1)].insert(verts[t]);

    // transversal pinning the covering number at g
    VertexSet transversal(n);
    for (const auto& b : blocks) {
        auto mem = b.members();
        transversal.insert(mem[uniform_int(rng, 0, static_cast<int>(mem.size()) - 1)]);
    }

    std::vector<VertexSet> edges = blocks;
    const int extra = uniform_int(rng, 0, max_extra);
    for (int t = 0; t < extra; ++t) {
        // touch a few blocks, each in a proper nonempty piece, and keep
        // the edge on the transversal so the covering number stays at g
        const int touch = g >= 2 ? uniform_int(rng, 2, std::min(3, g)) : 1;
        std::vector<int> which(g);
        for (int i = 0; i < g; ++i) which[i] = i;
        std::shuffle(which.begin(), which.end(), rng);
        VertexSet f(n);
        for (int k = 0; k < touch; ++k) {
            auto mem = blocks[which[k]].members();
            std::shuffle(mem.begin(), mem.end(), rng);
            int take = uniform_int(rng, 1, static_cast<int>(mem.size()));
            if (take == static_cast<int>(mem.size()) && take > 1) --take;
            for (int i = 0; i < take; ++i) f.insert(mem[i]);
        }
        f.insert((blocks[which[0]] & transversal).first());
        bool comparable = false;
        for (const auto& e : edges)
            if (e.subset_of(f) || f.subset_of(e)) comparable = true;
        if (!comparable) edges.push_back(f);
    }

    Clutter c(numbered_labels(n), std::move(edges));
    Matching m = make_matching(c, blocks, g);
    return KonigInstance{std::move(c), std::move(m)};
}

/// Instance satisfying the edge-ordering criterion by construction:
/// every extra edge meets each matching block in a prefix of a fixed
/// per-block vertex order, so any two intersections are nested.
inline KonigInstance random_ordered_instance(Rng& rng, int max_n = 12, int max_extra = 5) {
    const int n = uniform_int(rng, 2, max_n);
    const int g = uniform_int(rng, 1, std::max(1, n / 2));

    std::vector<int> verts(n);
    for (int v = 0; v < n; ++v) verts[v] = v;
    std::shuffle(verts.begin(), verts.end(), rng);
    std::vector<std::vector<int>> block_order(g);
    for (int i = 0; i < g; ++i) block_order[i].push_back(verts[i]);
    for (int t = g; t < n; ++t) block_order[uniform_int(rng, 0, g - 1)].push_back(verts[t]);

    std::vector<VertexSet> blocks(g, VertexSet(n));
    for (int i = 0; i < g; ++i)
        for (int v : block_order[i]) blocks[i].insert(v);

    std::vector<VertexSet> edges = blocks;
    const int extra = uniform_int(rng, 0, max_extra);
    for (int t = 0; t < extra; ++t) {
        VertexSet f(n);
        for (int i = 0; i < g; ++i) {
            // a proper prefix of the block order, biased toward nonempty
            const int top = static_cast<int>(block_order[i].size()) - 1;
            int len = 0;
            if (top > 0 && uniform_int(rng, 0, 1) == 0) len = uniform_int(rng, 1, top);
            for (int k = 0; k < len; ++k) f.insert(block_order[i][k]);
        }
        if (f.empty()) continue;
        bool comparable = false;
        for (const auto& e : edges)
            if (e.subset_of(f) || f.subset_of(e)) comparable = true;
        if (!comparable) edges.push_back(f);
    }

    Clutter c(numbered_labels(n), std::move(edges));
    Matching m = make_matching(c, blocks, g);
    return KonigInstance{std::move(c), std::move(m)};
}

/// General random antichain without isolated vertices (retries until
/// every vertex is covered).
inline Clutter random_clutter(Rng& rng, int max_n = 10, int max_edges = 8) {
    for (;;) {
        const int n = uniform_int(rng, 1, max_n);
        std::vector<VertexSet> edges;
        const int attempts = uniform_int(rng, 1, max_edges);
        for (int t = 0; t < attempts; ++t) {
            VertexSet f(n);
            for (int v = 0; v < n; ++v)
                if (uniform_int(rng, 0, 2) == 0) f.insert(v);
            if (f.empty()) continue;
            bool comparable = false;
            for (const auto& e : edges)
                if (e.subset_of(f) || f.subset_of(e)) comparable = true;
            if (!comparable) edges.push_back(f);
        }
        if (edges.empty()) continue;
        Clutter c(numbered_labels(n), std::move(edges));
        if (!c.has_isolated_vertices()) return c;
    }
}

/// Random bipartite graph on pairs (x_i, y_i), i < g, containing the
/// perfect matching {x_i, y_i} plus random cross edges.
struct BipartiteInstance {
    Clutter graph;
    Matching matching;
};

inline BipartiteInstance random_bipartite_with_matching(Rng& rng, int max_g = 7,
                                                        int percent_cross = 35) {
    const int g = uniform_int(rng, 1, max_g);
    const int n = 2 * g;
    std::vector<std::string> labels;
    for (int i = 1; i <= g; ++i) labels.push_back("x" + std::to_string(i));
    for (int i = 1; i <= g; ++i) labels.push_back("y" + std::to_string(i));
    std::vector<VertexSet> edges;
    std::vector<VertexSet> matching;
    for (int i = 0; i < g; ++i) {
        VertexSet e(n, {i, g + i});
        edges.push_back(e);
        matching.push_back(e);
    }
    for (int i = 0; i < g; ++i)
        for (int j = 0; j < g; ++j)
            if (i != j && uniform_int(rng, 1, 100) <= percent_cross)
                edges.push_back(VertexSet(n, {i, g + j}));
    Clutter c(labels, std::move(edges));
    Matching m = make_matching(c, matching, covering_number(c));
    return BipartiteInstance{std::move(c), std::move(m)};
}

/// Random simple graph on at most max_n vertices (possibly with isolated
/// vertices); edge set may be empty.
inline Clutter random_graph(Rng& rng, int max_n = 6, int percent_edge = 40) {
    for (;;) {
        const int n = uniform_int(rng, 2, max_n);
        std::vector<VertexSet> edges;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (uniform_int(rng, 1, 100) <= percent_edge)
                    edges.push_back(VertexSet(n, {u, v}));
        if (edges.empty()) continue;
        return Clutter(numbered_labels(n), std::move(edges));
    }
}

} // namespace clutter::testgen
