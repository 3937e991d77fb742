#include "stabreg/vertex_set.hpp"

#include "stabreg/errors.hpp"

#include <algorithm>
#include <string>

namespace stabreg {

namespace {

std::size_t word_count(std::size_t universe) { return (universe + 63) / 64; }

}  // namespace

VertexSet::VertexSet(std::size_t universe) : universe_(universe), words_(word_count(universe), 0) {}

VertexSet VertexSet::full(std::size_t universe) {
    VertexSet s(universe);
    std::fill(s.words_.begin(), s.words_.end(), ~std::uint64_t{0});
    if (universe % 64 != 0) {
        s.words_.back() = (std::uint64_t{1} << (universe % 64)) - 1;
    }
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::span<const Vertex> members) {
    VertexSet s(universe);
    for (Vertex v : members) {
        if (v >= universe) {
            throw InputError("vertex " + std::to_string(v) + " out of range (n = " +
                             std::to_string(universe) + ")");
        }
        s.insert(v);
    }
    return s;
}

VertexSet VertexSet::of(std::size_t universe, std::initializer_list<Vertex> members) {
    return of(universe, std::span<const Vertex>(members.begin(), members.size()));
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t low_bits) {
    if (universe > 64) {
        throw InputError("from_mask needs a universe of at most 64 vertices");
    }
    VertexSet s(universe);
    if (universe > 0) {
        const std::uint64_t keep = universe == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << universe) - 1;
        s.words_[0] = low_bits & keep;
    }
    return s;
}

std::size_t VertexSet::size() const {
    std::size_t total = 0;
    for (auto w : words_) total += static_cast<std::size_t>(std::popcount(w));
    return total;
}

bool VertexSet::empty() const {
    return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
}

void VertexSet::insert(Vertex v) {
    if (v >= universe_) {
        throw InputError("vertex " + std::to_string(v) + " out of range (n = " + std::to_string(universe_) + ")");
    }
    words_[v >> 6] |= std::uint64_t{1} << (v & 63);
}

void VertexSet::erase(Vertex v) {
    if (v < universe_) {
        words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }
}

std::vector<Vertex> VertexSet::members() const {
    std::vector<Vertex> out;
    out.reserve(size());
    for_each([&](Vertex v) { out.push_back(v); });
    return out;
}

Vertex VertexSet::first() const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if (words_[w] != 0) {
            return (w << 6) + static_cast<std::size_t>(std::countr_zero(words_[w]));
        }
    }
    return universe_;
}

VertexSet VertexSet::complement() const {
    VertexSet out = full(universe_);
    for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] &= ~words_[w];
    return out;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
    check_same_universe(other);
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_.size(); ++w) {
        total += static_cast<std::size_t>(std::popcount(words_[w] & other.words_[w]));
    }
    return total;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) {
        if ((words_[w] & ~other.words_[w]) != 0) return false;
    }
    return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
    check_same_universe(other);
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= ~other.words_[w];
    return *this;
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
    const auto ma = a.members();
    const auto mb = b.members();
    return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

void VertexSet::check_same_universe(const VertexSet& other) const {
    if (universe_ != other.universe_) {
        throw InputError("vertex sets over different universes (" + std::to_string(universe_) + " vs " +
                         std::to_string(other.universe_) + ")");
    }
}

}  // namespace stabreg
