#pragma once

#include <algorithm>
#include <functional>
#include <vector>

#include "clutter/clutter.hpp"

namespace clutter::oracles {

/// Brute-force reference implementations.  Nothing here shares code with
/// the main search routines; each scans the full space so the two can
/// check each other at desk scale.

/// All minimal vertex covers by scanning every subset of the universe.
inline std::vector<VertexSet> covers_by_subset_scan(const Clutter& c) {
    const int n = c.vertex_count();
    if (n > 24) throw size_guard_error("subset scan refused beyond 24 vertices");
    std::vector<VertexSet> covers;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask & (1ull << v)) s.insert(v);
        if (c.is_cover(s)) covers.push_back(s);
    }
    std::vector<VertexSet> minimal;
    for (const auto& s : covers) {
        bool keep = true;
        for (const auto& t : covers)
            if (!(t == s) && t.subset_of(s)) {
                keep = false;
                break;
            }
        if (keep) minimal.push_back(s);
    }
    std::sort(minimal.begin(), minimal.end(), VertexSet::canonical_less);
    return minimal;
}

/// Minimum cover size by direct scan, without enumerating minimal covers.
inline int covering_number_by_subset_scan(const Clutter& c) {
    const int n = c.vertex_count();
    if (n > 24) throw size_guard_error("subset scan refused beyond 24 vertices");
    int best = n;
    for (std::uint64_t mask = 0; mask < (1ull << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if (mask & (1ull << v)) s.insert(v);
        if (s.size() < best && c.is_cover(s)) best = s.size();
    }
    return best;
}

/// Maximum matching by scanning every edge subset; ties resolved to the
/// lexicographically smallest index sequence, matching the main search.
inline std::vector<int> max_matching_by_subset_scan(const Clutter& c) {
    const int q = c.edge_count();
    if (q > 20) throw size_guard_error("edge subset scan refused beyond 20 edges");
    std::vector<int> best;
    for (std::uint64_t mask = 0; mask < (1ull << q); ++mask) {
        VertexSet used(c.vertex_count());
        bool ok = true;
        std::vector<int> picked;
        for (int j = 0; j < q && ok; ++j) {
            if (!(mask & (1ull << j))) continue;
            if (!used.disjoint_from(c.edge(j))) ok = false;
            used |= c.edge(j);
            picked.push_back(j);
        }
        if (!ok) continue;
        if (picked.size() > best.size() || (picked.size() == best.size() && picked < best))
            best = picked;
    }
    return best;
}

/// Cycle detection by enumerating every r-subset of rows and columns of
/// the incidence matrix and checking for exactly two ones per line.
inline bool has_cycle_by_submatrix_scan(const Clutter& c, int r) {
    const int n = c.vertex_count(), q = c.edge_count();
    if (n > 16 || q > 16) throw size_guard_error("submatrix scan refused beyond 16x16");
    if (r > n || r > q) return false;
    std::vector<int> rows, cols;
    std::function<bool()> scan_rows = [&]() -> bool {
        // with rows fixed, try all column subsets
        std::function<bool()> scan_cols = [&]() -> bool {
            if (static_cast<int>(cols.size()) == r) {
                for (int v : rows) {
                    int deg = 0;
                    for (int j : cols)
                        if (c.edge(j).contains(v)) ++deg;
                    if (deg != 2) return false;
                }
                for (int j : cols) {
                    int deg = 0;
                    for (int v : rows)
                        if (c.edge(j).contains(v)) ++deg;
                    if (deg != 2) return false;
                }
                return true;
            }
            for (int j = cols.empty() ? 0 : cols.back() + 1; j < q; ++j) {
                cols.push_back(j);
                if (scan_cols()) return true;
                cols.pop_back();
            }
            return false;
        };
        return scan_cols();
    };
    std::function<bool(int)> pick_rows = [&](int from) -> bool {
        if (static_cast<int>(rows.size()) == r) return scan_rows();
        for (int v = from; v < n; ++v) {
            rows.push_back(v);
            if (pick_rows(v + 1)) return true;
            rows.pop_back();
        }
        return false;
    };
    return pick_rows(0);
}

} // namespace clutter::oracles
