#pragma once

#include "stabreg/graph.hpp"

#include <optional>
#include <vector>

namespace stabreg {

/// Half-graph order of length k: R(vs[i], ws[j]) holds iff i <= j.
struct Ladder {
    std::vector<std::size_t> vs;
    std::vector<std::size_t> ws;

    std::size_t length() const { return vs.size(); }
    friend bool operator==(const Ladder&, const Ladder&) = default;
};

struct LadderOptions {
    /// Require all 2k witnesses to be pairwise distinct. Only meaningful when
    /// both sides of the relation range over the same index set.
    bool distinct_witnesses = false;
};

/// Whether `ladder` satisfies the defining pattern in `r` (and distinctness,
/// when requested).
bool is_ladder(const Relation& r, const Ladder& ladder, LadderOptions options = {});

/// Depth-first search over partial ladders in the order v1, w1, v2, w2, ...,
/// each position trying candidates in increasing index order. The first
/// ladder found is therefore the lexicographically least in that order.
std::optional<Ladder> find_ladder(const Relation& r, std::size_t k, LadderOptions options = {});
std::optional<Ladder> find_ladder(const Graph& g, std::size_t k, LadderOptions options = {});

struct LadderIndex {
    std::size_t index = 0;           // largest k <= cap with a ladder
    std::optional<Ladder> witness;   // a ladder of length `index`
    bool capped = false;             // a ladder of length `cap` exists
};

LadderIndex ladder_index_report(const Relation& r, std::size_t cap, LadderOptions options = {});

/// Largest k <= cap admitting a ladder, 0 when there is no edge.
std::size_t ladder_index(const Relation& r, std::size_t cap, LadderOptions options = {});
std::size_t ladder_index(const Graph& g, std::size_t cap, LadderOptions options = {});

/// True iff there is no ladder of length k.
bool is_k_stable(const Relation& r, std::size_t k, LadderOptions options = {});
bool is_k_stable(const Graph& g, std::size_t k, LadderOptions options = {});

}  // namespace stabreg
