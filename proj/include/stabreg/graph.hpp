#pragma once

#include "stabreg/rational.hpp"
#include "stabreg/vertex_set.hpp"

#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

namespace stabreg {

/// A binary relation R between a row side {0..rows-1} and a column side
/// {0..cols-1}. Row x stores {y : R(x,y)}; column y stores {x : R(x,y)}.
/// Symmetric relations share one table for both directions.
class Relation {
public:
    Relation() = default;

    /// Materializes R from a predicate on (x, y).
    static Relation from_predicate(std::size_t rows, std::size_t cols,
                                   const std::function<bool(std::size_t, std::size_t)>& holds);
    /// Takes per-row sets; the column table is derived.
    static Relation from_rows(std::size_t cols, std::vector<VertexSet> rows);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool symmetric() const { return symmetric_; }

    bool holds(std::size_t x, std::size_t y) const { return out_[x].contains(y); }
    const VertexSet& row(std::size_t x) const { return out_[x]; }
    const VertexSet& column(std::size_t y) const { return symmetric_ ? out_[y] : in_[y]; }

    /// R*(y, x) := R(x, y).
    Relation transposed() const;

    friend bool operator==(const Relation& a, const Relation& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.out_ == b.out_;
    }

private:
    friend class Graph;

    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    bool symmetric_ = false;
    std::vector<VertexSet> out_;
    std::vector<VertexSet> in_;
};

/// Undirected finite graph on vertices 0..n-1 with a symmetric, irreflexive
/// edge relation. Immutable once built.
class Graph {
public:
    /// Validates and builds from an edge list; duplicate and reversed pairs
    /// are idempotent, loops and out-of-range endpoints throw InputError.
    Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    /// Builds from adjacency rows, which must already be symmetric and
    /// irreflexive (checked).
    static Graph from_adjacency(std::vector<VertexSet> adjacency);

    std::size_t order() const { return rel_.rows_; }
    std::size_t edge_count() const;
    bool adjacent(Vertex u, Vertex v) const { return rel_.holds(u, v); }
    const VertexSet& adjacency(Vertex v) const { return rel_.row(v); }
    VertexSet vertices() const { return VertexSet::full(order()); }

    /// Unordered edges (u < v) in increasing order.
    std::vector<std::pair<Vertex, Vertex>> edges() const;

    const Relation& relation() const { return rel_; }

    /// The graph with every unordered pair in `pairs` toggled.
    Graph with_toggled(const std::vector<std::pair<Vertex, Vertex>>& pairs) const;

    /// Induced subgraph on `keep`, relabelled in increasing order.
    Graph induced(const VertexSet& keep) const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.rel_ == b.rel_; }

private:
    explicit Graph(Relation rel) : rel_(std::move(rel)) {}

    Relation rel_;
};

/// Exact edge density: `edges` ordered pairs out of `pairs` = |X||Y|.
struct Density {
    std::int64_t edges = 0;
    std::int64_t pairs = 1;

    Rational value() const { return Rational(edges, pairs); }
};

/// E(X, b) = { a in X : E(a, b) }.
VertexSet neighborhood(const Graph& g, const VertexSet& x, Vertex b);
/// ¬E(X, b) = { a in X : not E(a, b) }.
VertexSet non_neighborhood(const Graph& g, const VertexSet& x, Vertex b);

/// d(X, Y) over ordered pairs; X and Y may overlap. Throws InputError on an
/// empty side.
Density density(const Graph& g, const VertexSet& x, const VertexSet& y);
/// The same count for an arbitrary relation, X on the row side.
Density density(const Relation& r, const VertexSet& x, const VertexSet& y);

}  // namespace stabreg
