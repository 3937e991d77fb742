#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace stabreg {

using Vertex = std::size_t;

/// A subset of the vertex universe {0, ..., n-1}, stored as a packed bitmask.
/// All binary operations require both operands to share the same universe.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe);

    static VertexSet full(std::size_t universe);
    /// Throws InputError when a member is outside the universe.
    static VertexSet of(std::size_t universe, std::span<const Vertex> members);
    static VertexSet of(std::size_t universe, std::initializer_list<Vertex> members);
    /// The members of `low_bits` (bit i set means vertex i), universe <= 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t low_bits);

    std::size_t universe() const { return universe_; }
    std::size_t size() const;
    bool empty() const;

    bool contains(Vertex v) const {
        return v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U) != 0;
    }
    void insert(Vertex v);
    void erase(Vertex v);

    std::vector<Vertex> members() const;
    /// Least member; universe() when empty.
    Vertex first() const;

    VertexSet complement() const;
    std::size_t intersection_size(const VertexSet& other) const;
    bool is_subset_of(const VertexSet& other) const;
    bool intersects(const VertexSet& other) const { return intersection_size(other) != 0; }

    VertexSet& operator&=(const VertexSet& other);
    VertexSet& operator|=(const VertexSet& other);
    /// Set difference.
    VertexSet& operator-=(const VertexSet& other);

    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

    /// Lexicographic order on sorted member lists.
    friend bool lex_less(const VertexSet& a, const VertexSet& b);

    std::span<const std::uint64_t> words() const { return words_; }

    template <class Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                const int bit = std::countr_zero(bits);
                fn(static_cast<Vertex>((w << 6) + static_cast<std::size_t>(bit)));
                bits &= bits - 1;
            }
        }
    }

private:
    void check_same_universe(const VertexSet& other) const;

    std::size_t universe_ = 0;
    std::vector<std::uint64_t> words_;
};

}  // namespace stabreg
