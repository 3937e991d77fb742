#include "stabreg/graph.hpp"

#include "stabreg/errors.hpp"

#include <string>

namespace stabreg {

Relation Relation::from_predicate(std::size_t rows, std::size_t cols,
                                  const std::function<bool(std::size_t, std::size_t)>& holds) {
    std::vector<VertexSet> out(rows, VertexSet(cols));
    for (std::size_t x = 0; x < rows; ++x) {
        for (std::size_t y = 0; y < cols; ++y) {
            if (holds(x, y)) out[x].insert(y);
        }
    }
    return from_rows(cols, std::move(out));
}

Relation Relation::from_rows(std::size_t cols, std::vector<VertexSet> rows) {
    Relation r;
    r.rows_ = rows.size();
    r.cols_ = cols;
    r.in_.assign(cols, VertexSet(r.rows_));
    for (std::size_t x = 0; x < r.rows_; ++x) {
        if (rows[x].universe() != cols) {
            throw InputError("relation row " + std::to_string(x) + " has the wrong column universe");
        }
        rows[x].for_each([&](std::size_t y) { r.in_[y].insert(x); });
    }
    r.out_ = std::move(rows);
    return r;
}

Relation Relation::transposed() const {
    Relation t;
    t.rows_ = cols_;
    t.cols_ = rows_;
    t.symmetric_ = symmetric_;
    if (symmetric_) {
        t.out_ = out_;
    } else {
        t.out_ = in_;
        t.in_ = out_;
    }
    return t;
}

Graph::Graph(std::size_t n, const std::vector<std::pair<Vertex, Vertex>>& edges) {
    if (n == 0) {
        throw InputError("a graph needs at least one vertex");
    }
    rel_.rows_ = n;
    rel_.cols_ = n;
    rel_.symmetric_ = true;
    rel_.out_.assign(n, VertexSet(n));
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InputError("edge (" + std::to_string(u) + ", " + std::to_string(v) +
                             ") out of range (n = " + std::to_string(n) + ")");
        }
        if (u == v) {
            throw InputError("self-loop at vertex " + std::to_string(u), "self_loop");
        }
        rel_.out_[u].insert(v);
        rel_.out_[v].insert(u);
    }
}

Graph Graph::from_adjacency(std::vector<VertexSet> adjacency) {
    const std::size_t n = adjacency.size();
    if (n == 0) {
        throw InputError("a graph needs at least one vertex");
    }
    for (std::size_t u = 0; u < n; ++u) {
        if (adjacency[u].universe() != n) {
            throw InputError("adjacency row " + std::to_string(u) + " has the wrong universe");
        }
        if (adjacency[u].contains(u)) {
            throw InputError("self-loop at vertex " + std::to_string(u), "self_loop");
        }
        adjacency[u].for_each([&](Vertex v) {
            if (!adjacency[v].contains(u)) {
                throw InputError("adjacency is not symmetric at (" + std::to_string(u) + ", " +
                                 std::to_string(v) + ")");
            }
        });
    }
    Relation rel;
    rel.rows_ = n;
    rel.cols_ = n;
    rel.symmetric_ = true;
    rel.out_ = std::move(adjacency);
    return Graph(std::move(rel));
}

std::size_t Graph::edge_count() const {
    std::size_t twice = 0;
    for (const auto& row : rel_.out_) twice += row.size();
    return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (Vertex u = 0; u < order(); ++u) {
        rel_.out_[u].for_each([&](Vertex v) {
            if (u < v) out.emplace_back(u, v);
        });
    }
    return out;
}

Graph Graph::with_toggled(const std::vector<std::pair<Vertex, Vertex>>& pairs) const {
    auto rows = rel_.out_;
    for (auto [u, v] : pairs) {
        if (u == v || u >= order() || v >= order()) {
            throw InputError("cannot toggle pair (" + std::to_string(u) + ", " + std::to_string(v) + ")");
        }
        if (rows[u].contains(v)) {
            rows[u].erase(v);
            rows[v].erase(u);
        } else {
            rows[u].insert(v);
            rows[v].insert(u);
        }
    }
    return from_adjacency(std::move(rows));
}

Graph Graph::induced(const VertexSet& keep) const {
    const auto kept = keep.members();
    std::vector<std::pair<Vertex, Vertex>> es;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        for (std::size_t j = i + 1; j < kept.size(); ++j) {
            if (adjacent(kept[i], kept[j])) es.emplace_back(i, j);
        }
    }
    return Graph(kept.size(), es);
}

VertexSet neighborhood(const Graph& g, const VertexSet& x, Vertex b) {
    if (b >= g.order()) {
        throw InputError("vertex " + std::to_string(b) + " out of range (n = " + std::to_string(g.order()) + ")");
    }
    return x & g.adjacency(b);
}

VertexSet non_neighborhood(const Graph& g, const VertexSet& x, Vertex b) {
    if (b >= g.order()) {
        throw InputError("vertex " + std::to_string(b) + " out of range (n = " + std::to_string(g.order()) + ")");
    }
    return x - g.adjacency(b);
}

Density density(const Relation& r, const VertexSet& x, const VertexSet& y) {
    if (x.empty() || y.empty()) {
        throw InputError("density is undefined for an empty vertex set");
    }
    Density d;
    x.for_each([&](std::size_t a) { d.edges += static_cast<std::int64_t>(r.row(a).intersection_size(y)); });
    d.pairs = static_cast<std::int64_t>(x.size()) * static_cast<std::int64_t>(y.size());
    return d;
}

Density density(const Graph& g, const VertexSet& x, const VertexSet& y) {
    return density(g.relation(), x, y);
}

}  // namespace stabreg
