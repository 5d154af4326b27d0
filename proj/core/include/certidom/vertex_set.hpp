#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace certidom {

/// Set of vertices over a fixed universe {0, ..., universe-1}, universe <= 64.
/// A single machine word holds the membership bits, so all set algebra is
/// O(1) word operations.
class VertexSet {
public:
    static constexpr int kMaxUniverse = 64;

    VertexSet() = default;

    explicit VertexSet(int universe, std::uint64_t bits = 0)
        : bits_(bits), universe_(universe) {
        assert(universe >= 0 && universe <= kMaxUniverse);
        assert(universe == kMaxUniverse || (bits >> universe) == 0);
    }

    static VertexSet all(int universe) {
        return VertexSet(universe, mask_below(universe));
    }

    static VertexSet of(int universe, std::initializer_list<int> members) {
        VertexSet s(universe);
        for (int v : members) s.add(v);
        return s;
    }

    int universe() const { return universe_; }
    std::uint64_t bits() const { return bits_; }

    bool contains(int v) const {
        assert(in_universe(v));
        return (bits_ >> v) & 1u;
    }
    void add(int v) {
        assert(in_universe(v));
        bits_ |= std::uint64_t{1} << v;
    }
    void remove(int v) {
        assert(in_universe(v));
        bits_ &= ~(std::uint64_t{1} << v);
    }

    int size() const { return std::popcount(bits_); }
    bool empty() const { return bits_ == 0; }

    /// Lowest member, or -1 when empty.
    int first() const { return bits_ ? std::countr_zero(bits_) : -1; }

    /// Lowest member greater than v, or -1.
    int next_after(int v) const {
        std::uint64_t rest = (v + 1 >= 64) ? 0 : bits_ >> (v + 1) << (v + 1);
        return rest ? std::countr_zero(rest) : -1;
    }

    bool subset_of(const VertexSet& other) const {
        assert(universe_ == other.universe_);
        return (bits_ & ~other.bits_) == 0;
    }
    bool intersects(const VertexSet& other) const {
        assert(universe_ == other.universe_);
        return (bits_ & other.bits_) != 0;
    }

    VertexSet operator|(const VertexSet& o) const { return combined(o, bits_ | o.bits_); }
    VertexSet operator&(const VertexSet& o) const { return combined(o, bits_ & o.bits_); }
    VertexSet operator-(const VertexSet& o) const { return combined(o, bits_ & ~o.bits_); }
    VertexSet operator^(const VertexSet& o) const { return combined(o, bits_ ^ o.bits_); }
    VertexSet& operator|=(const VertexSet& o) { *this = *this | o; return *this; }
    VertexSet& operator&=(const VertexSet& o) { *this = *this & o; return *this; }
    VertexSet& operator-=(const VertexSet& o) { *this = *this - o; return *this; }

    /// Complement within the universe.
    VertexSet complement() const {
        return VertexSet(universe_, ~bits_ & mask_below(universe_));
    }

    bool operator==(const VertexSet& o) const = default;

    /// Lexicographic order on the ascending member lists, e.g. {0,3} < {1,2}
    /// and {0} < {0,1}. Used to pick canonical witnesses.
    static bool lex_less(const VertexSet& a, const VertexSet& b) {
        std::uint64_t x = a.bits_, y = b.bits_;
        while (x != 0 || y != 0) {
            if (x == 0) return true;
            if (y == 0) return false;
            int i = std::countr_zero(x);
            int j = std::countr_zero(y);
            if (i != j) return i < j;
            x &= x - 1;
            y &= y - 1;
        }
        return false;
    }

    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    std::string to_string() const {
        std::string out = "{";
        bool sep = false;
        for (std::uint64_t b = bits_; b; b &= b - 1) {
            if (sep) out += ',';
            out += std::to_string(std::countr_zero(b));
            sep = true;
        }
        out += '}';
        return out;
    }

    class const_iterator {
    public:
        explicit const_iterator(std::uint64_t rest) : rest_(rest) {}
        int operator*() const { return std::countr_zero(rest_); }
        const_iterator& operator++() { rest_ &= rest_ - 1; return *this; }
        bool operator!=(const const_iterator& o) const { return rest_ != o.rest_; }
    private:
        std::uint64_t rest_;
    };
    const_iterator begin() const { return const_iterator(bits_); }
    const_iterator end() const { return const_iterator(0); }

private:
    static std::uint64_t mask_below(int n) {
        return n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    }
    bool in_universe(int v) const { return v >= 0 && v < universe_; }
    VertexSet combined([[maybe_unused]] const VertexSet& o, std::uint64_t bits) const {
        assert(universe_ == o.universe_);
        return VertexSet(universe_, bits);
    }

    std::uint64_t bits_ = 0;
    int universe_ = 0;
};

}  // namespace certidom
