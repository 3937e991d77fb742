#pragma once

// Brute-force reference implementations. Nothing here calls into the
// library's search or predicate code: graphs are flattened to plain 0/1
// matrices and every quantity is recomputed by direct enumeration.

#include "stabreg/graph.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace stabreg::oracle {

using Matrix = std::vector<std::vector<char>>;

Matrix matrix(const Graph& g);
Matrix matrix(const Relation& r);

/// Graph on n vertices from a bitmask over pairs (0,1), (0,2), ..., (n-2,n-1).
Graph graph_from_mask(std::size_t n, std::uint64_t mask);
std::size_t pair_count(std::size_t n);

/// Exists v_1..v_k, w_1..w_k with M[v_i][w_j] iff i <= j. Enumerates every
/// v-tuple; for a fixed v-tuple the conditions on distinct w_j are
/// independent, so each w_j is checked by a plain scan.
bool ladder_exists(const Matrix& m, std::size_t k);
std::size_t ladder_index(const Matrix& m, std::size_t cap);

/// One representative mask per isomorphism class of graphs on n vertices,
/// built by extending the classes on n - 1 vertices.
std::vector<std::uint64_t> isomorphism_classes(std::size_t n);

/// Fractions as (num, den) with den > 0.
struct Frac {
    std::int64_t num;
    std::int64_t den;
};

bool lt(std::int64_t count, std::int64_t total, Frac eps);        // count < eps*total
bool gt_compl(std::int64_t count, std::int64_t total, Frac eps);  // count > (1-eps)*total

bool good_set(const Matrix& m, const std::vector<std::size_t>& x, Frac eps);
/// Ordered-pair edge count between X and Y.
std::int64_t edge_count(const Matrix& m, const std::vector<std::size_t>& x, const std::vector<std::size_t>& y);

/// Type classes: u ~ v iff rows agree outside {u, v} (twin) or everywhere
/// (exact). Classes are returned sorted by least member.
std::vector<std::vector<std::size_t>> type_classes(const Matrix& m, bool twin);

/// Least m such that V splits into X_0, X_1..X_m with |X_0| < eps n and
/// every X_i (i >= 1) sigma(m)-good; 0 if no split exists. Dynamic
/// programming over vertex subsets, n <= 12.
std::size_t min_good_partition(const Matrix& m, Frac eps, const std::function<Frac(std::size_t)>& sigma);

/// All subgroups of a Cayley table by testing every subset (order <= 20).
std::vector<std::vector<std::size_t>> subgroups(const std::vector<std::vector<std::size_t>>& table);

}  // namespace stabreg::oracle
