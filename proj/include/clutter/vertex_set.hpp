#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "clutter/common.hpp"

namespace clutter {

/// Subset of a fixed vertex universe [0, capacity), capacity <= 64.
/// Plain value type; set algebra is bitwise on a single word.
/// Supports of square-free monomials, edges, covers and faces are all
/// represented this way.
class VertexSet {
public:
    static constexpr int max_capacity = 64;

    VertexSet() = default;

    explicit VertexSet(int capacity) : cap_(check_capacity(capacity)) {}

    VertexSet(int capacity, std::initializer_list<int> members) : cap_(check_capacity(capacity)) {
        for (int v : members) insert(v);
    }

    static VertexSet full(int capacity) {
        VertexSet s(capacity);
        s.bits_ = capacity == 64 ? ~0ull : ((1ull << capacity) - 1);
        return s;
    }

    static VertexSet from_indices(int capacity, const std::vector<int>& idx) {
        VertexSet s(capacity);
        for (int v : idx) s.insert(v);
        return s;
    }

    int capacity() const { return cap_; }
    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }
    std::uint64_t raw() const { return bits_; }

    bool contains(int v) const {
        assert(v >= 0 && v < cap_);
        return (bits_ >> v) & 1u;
    }

    void insert(int v) {
        assert(v >= 0 && v < cap_);
        bits_ |= 1ull << v;
    }

    void erase(int v) {
        assert(v >= 0 && v < cap_);
        bits_ &= ~(1ull << v);
    }

    /// Lowest member, -1 when empty.
    int first() const { return bits_ == 0 ? -1 : std::countr_zero(bits_); }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    VertexSet operator|(VertexSet o) const { return with_bits(*this, bits_ | o.bits_); }
    VertexSet operator&(VertexSet o) const { return with_bits(*this, bits_ & o.bits_); }
    VertexSet operator-(VertexSet o) const { return with_bits(*this, bits_ & ~o.bits_); }
    VertexSet& operator|=(VertexSet o) { bits_ |= o.bits_; return *this; }
    VertexSet& operator&=(VertexSet o) { bits_ &= o.bits_; return *this; }
    VertexSet& operator-=(VertexSet o) { bits_ &= ~o.bits_; return *this; }

    VertexSet complement() const { return with_bits(*this, ~bits_ & full(cap_).bits_); }

    bool subset_of(VertexSet o) const { return (bits_ & ~o.bits_) == 0; }
    bool intersects(VertexSet o) const { return (bits_ & o.bits_) != 0; }
    bool disjoint_from(VertexSet o) const { return (bits_ & o.bits_) == 0; }

    friend bool operator==(VertexSet a, VertexSet b) { return a.bits_ == b.bits_ && a.cap_ == b.cap_; }

    /// Ascending lexicographic order on the sorted member lists.  The
    /// lowest element of the symmetric difference decides.
    static bool lex_less(VertexSet a, VertexSet b) {
        std::uint64_t d = a.bits_ ^ b.bits_;
        if (d == 0) return false;
        std::uint64_t low = d & (~d + 1);
        return (a.bits_ & low) != 0;
    }

    /// Canonical order for edge/cover lists: size first, then lex.
    static bool canonical_less(VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return lex_less(a, b);
    }

    friend bool operator<(VertexSet a, VertexSet b) { return canonical_less(a, b); }

private:
    static int check_capacity(int capacity) {
        if (capacity < 0 || capacity > max_capacity)
            throw validation_error("vertex universe must have between 0 and 64 vertices");
        return capacity;
    }

    static VertexSet with_bits(VertexSet proto, std::uint64_t bits) {
        VertexSet s(proto.cap_);
        s.bits_ = bits;
        return s;
    }

    std::uint64_t bits_ = 0;
    int cap_ = 0;
};

} // namespace clutter
