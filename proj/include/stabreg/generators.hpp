#pragma once

#include "stabreg/graph.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace stabreg {

/// Description of a generated graph family member. Textual form:
///   empty(n) complete(n) half_graph(k) matching(m) clique_union(s1,s2,...)
///   perturb(<family>,flips,seed)
struct FamilySpec {
    enum class Kind { empty, complete, half_graph, matching, clique_union, perturb };

    Kind kind = Kind::empty;
    std::vector<std::int64_t> sizes;  // n / k / m / clique sizes
    std::shared_ptr<const FamilySpec> base;  // perturb only
    std::int64_t flips = 0;
    std::uint64_t seed = 0;

    static FamilySpec empty(std::int64_t n);
    static FamilySpec complete(std::int64_t n);
    static FamilySpec half_graph(std::int64_t k);
    static FamilySpec matching(std::int64_t m);
    static FamilySpec clique_union(std::vector<std::int64_t> sizes);
    static FamilySpec perturb(FamilySpec base, std::int64_t flips, std::uint64_t seed);

    static FamilySpec parse(std::string_view text);
    std::string to_string() const;
};

/// Deterministic for every spec. half_graph(k) puts a_i at vertex i-1 and
/// b_j at vertex k+j-1, with E(a_i, b_j) iff i <= j. perturb toggles exactly
/// `flips` distinct unordered pairs drawn from the seeded stream.
Graph generate(const FamilySpec& spec);

/// Half-graph side helpers: the a-side {0..k-1} and b-side {k..2k-1}.
VertexSet half_graph_a_side(std::int64_t k);
VertexSet half_graph_b_side(std::int64_t k);

}  // namespace stabreg
