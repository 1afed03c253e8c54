#pragma once

#include <algorithm>
#include <string>
#include <unordered_map>
#include <vector>

#include "clutter/common.hpp"
#include "clutter/vertex_set.hpp"

namespace clutter {

/// Labeled vertex universe plus an inclusion-minimal family of nonempty
/// edges.  Doubles as the generator set of a square-free monomial ideal:
/// each edge is the support of one minimal generator.
///
/// Invariants enforced at construction:
///   - labels are unique nonempty strings,
///   - every edge is nonempty,
///   - no duplicate edges,
///   - no edge contains another,
///   - edges are stored in canonical order (size, then lexicographic).
///
/// Isolated vertices (members of no edge) are legal; they arise from
/// contractions.  Values are immutable after construction, so sharing
/// across threads is safe.
class Clutter {
public:
    Clutter(std::vector<std::string> labels, std::vector<VertexSet> edges)
        : labels_(std::move(labels)), edges_(std::move(edges)) {
        validate_labels();
        canonicalize_and_validate_edges();
    }

    static Clutter from_member_lists(std::vector<std::string> labels,
                                     const std::vector<std::vector<int>>& edges) {
        const int n = static_cast<int>(labels.size());
        std::vector<VertexSet> sets;
        sets.reserve(edges.size());
        for (const auto& e : edges) sets.push_back(VertexSet::from_indices(n, e));
        return Clutter(std::move(labels), std::move(sets));
    }

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }
    const std::string& label(int v) const { return labels_.at(v); }

    /// Index of a named vertex, -1 when absent.
    int index_of(const std::string& name) const {
        auto it = index_.find(name);
        return it == index_.end() ? -1 : it->second;
    }

    const std::vector<VertexSet>& edges() const { return edges_; }
    const VertexSet& edge(int j) const { return edges_.at(j); }

    VertexSet universe() const { return VertexSet::full(vertex_count()); }

    bool has_edge(VertexSet e) const {
        return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
    }

    int edge_index(VertexSet e) const {
        auto it = std::find(edges_.begin(), edges_.end(), e);
        return it == edges_.end() ? -1 : static_cast<int>(it - edges_.begin());
    }

    /// Number of edges containing v.
    int degree(int v) const {
        int d = 0;
        for (const auto& e : edges_)
            if (e.contains(v)) ++d;
        return d;
    }

    /// Vertices occurring in no edge.
    VertexSet isolated_vertices() const { return support().complement(); }

    /// Vertices occurring in at least one edge.
    VertexSet support() const {
        VertexSet s(vertex_count());
        for (const auto& e : edges_) s |= e;
        return s;
    }

    bool has_isolated_vertices() const { return !isolated_vertices().empty(); }

    /// True iff no edge is contained in s (s is a face of the
    /// Stanley-Reisner complex).
    bool is_independent(VertexSet s) const {
        for (const auto& e : edges_)
            if (e.subset_of(s)) return false;
        return true;
    }

    /// True iff every edge meets s.
    bool is_cover(VertexSet s) const {
        for (const auto& e : edges_)
            if (e.disjoint_from(s)) return false;
        return true;
    }

    /// True iff s is a cover and no proper subset of s is.  Each member
    /// must have a private edge: one it covers alone.
    bool is_minimal_cover(VertexSet s) const {
        if (!is_cover(s)) return false;
        for (int v : s.members()) {
            bool has_private = false;
            for (const auto& e : edges_) {
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

    /// Same universe and labels, different edge family.
    Clutter with_edges(std::vector<VertexSet> edges) const {
        return Clutter(labels_, std::move(edges));
    }

    std::string render(VertexSet s) const {
        std::string out = "{";
        bool sep = false;
        for (int v : s.members()) {
            if (sep) out += ",";
            out += labels_[v];
            sep = true;
        }
        return out + "}";
    }

    friend bool operator==(const Clutter& a, const Clutter& b) {
        return a.labels_ == b.labels_ && a.edges_ == b.edges_;
    }

private:
    void validate_labels() {
        for (const auto& name : labels_) {
            if (name.empty()) throw validation_error("vertex names must be nonempty");
            if (!index_.emplace(name, static_cast<int>(index_.size())).second)
                throw validation_error("duplicate vertex name: " + name);
        }
        if (vertex_count() > VertexSet::max_capacity)
            throw validation_error("vertex universe exceeds the supported maximum of 64");
    }

    void canonicalize_and_validate_edges() {
        for (const auto& e : edges_) {
            if (e.capacity() != vertex_count())
                throw validation_error("edge defined over a different universe");
            if (e.empty()) throw validation_error("edges must be nonempty");
        }
        std::sort(edges_.begin(), edges_.end(), VertexSet::canonical_less);
        for (size_t i = 0; i + 1 < edges_.size(); ++i)
            if (edges_[i] == edges_[i + 1])
                throw validation_error("duplicate edge " + render(edges_[i]));
        for (size_t i = 0; i < edges_.size(); ++i)
            for (size_t j = 0; j < edges_.size(); ++j)
                if (i != j && edges_[i].subset_of(edges_[j]))
                    throw validation_error("edge " + render(edges_[i]) + " is contained in edge " +
                                           render(edges_[j]));
    }

    std::vector<std::string> labels_;
    std::vector<VertexSet> edges_;
    std::unordered_map<std::string, int> index_;
};

/// 0/1 vertex-by-edge incidence matrix; entry(i,j) = 1 iff vertex i lies
/// in edge j.
struct IncidenceMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<VertexSet> columns; // column j = edge j as a vertex set

    explicit IncidenceMatrix(const Clutter& c)
        : rows(c.vertex_count()), cols(c.edge_count()), columns(c.edges()) {}

    int entry(int i, int j) const { return columns.at(j).contains(i) ? 1 : 0; }
};

} // namespace clutter
