#include "oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace stabreg::oracle {

Matrix matrix(const Graph& g) { return matrix(g.relation()); }

Matrix matrix(const Relation& r) {
    Matrix m(r.rows(), std::vector<char>(r.cols(), 0));
    for (std::size_t x = 0; x < r.rows(); ++x)
        for (std::size_t y = 0; y < r.cols(); ++y) m[x][y] = r.holds(x, y) ? 1 : 0;
    return m;
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) edges.emplace_back(u, v);
    return Graph(n, edges);
}

bool ladder_exists(const Matrix& m, std::size_t k) {
    const std::size_t rows = m.size();
    if (rows == 0 || k == 0) return k == 0;
    const std::size_t cols = m[0].size();
    std::vector<std::size_t> vs(k, 0);
    while (true) {
        bool all = true;
        for (std::size_t j = 0; j < k && all; ++j) {
            bool some = false;
            for (std::size_t w = 0; w < cols && !some; ++w) {
                bool ok = true;
                for (std::size_t i = 0; i < k && ok; ++i) ok = (m[vs[i]][w] != 0) == (i <= j);
                some = ok;
            }
            all = some;
        }
        if (all) return true;
        std::size_t pos = 0;
        while (pos < k && ++vs[pos] == rows) vs[pos++] = 0;
        if (pos == k) return false;
    }
}

std::size_t ladder_index(const Matrix& m, std::size_t cap) {
    std::size_t best = 0;
    for (std::size_t k = 1; k <= cap; ++k) {
        if (!ladder_exists(m, k)) break;
        best = k;
    }
    return best;
}

namespace {

std::uint64_t mask_of(const std::vector<std::vector<char>>& adj) {
    const std::size_t n = adj.size();
    std::uint64_t mask = 0;
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
            if (adj[u][v]) mask |= std::uint64_t{1} << bit;
    return mask;
}

std::vector<std::vector<char>> adj_of(std::size_t n, std::uint64_t mask) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    std::size_t bit = 0;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1U) adj[u][v] = adj[v][u] = 1;
    return adj;
}

// Colour refinement, then the least relabelled mask over all orderings that
// keep colour classes in colour order. Colours are isomorphism invariant, so
// the result is a canonical form.
std::uint64_t canonical(std::size_t n, std::uint64_t mask) {
    const auto adj = adj_of(n, mask);
    std::vector<std::size_t> colour(n, 0);
    for (std::size_t round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<std::size_t>, std::size_t>> sig(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<std::size_t> s{colour[v]};
            std::vector<std::size_t> nb;
            for (std::size_t u = 0; u < n; ++u)
                if (adj[v][u]) nb.push_back(colour[u]);
            std::sort(nb.begin(), nb.end());
            s.insert(s.end(), nb.begin(), nb.end());
            sig[v] = {std::move(s), v};
        }
        std::vector<std::vector<std::size_t>> keys;
        for (auto& [s, v] : sig) keys.push_back(s);
        std::sort(keys.begin(), keys.end());
        keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
        std::vector<std::size_t> next(n);
        for (std::size_t v = 0; v < n; ++v)
            next[v] = static_cast<std::size_t>(std::lower_bound(keys.begin(), keys.end(), sig[v].first) - keys.begin());
        if (next == colour) break;
        colour = next;
    }
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return colour[a] != colour[b] ? colour[a] < colour[b] : a < b;
    });
    std::uint64_t best = ~std::uint64_t{0};
    // Permute within each maximal run of equal colour.
    std::vector<std::pair<std::size_t, std::size_t>> runs;
    for (std::size_t i = 0; i < n;) {
        std::size_t j = i;
        while (j < n && colour[order[j]] == colour[order[i]]) ++j;
        runs.emplace_back(i, j);
        i = j;
    }
    std::function<void(std::size_t)> rec = [&](std::size_t r) {
        if (r == runs.size()) {
            std::uint64_t m = 0;
            std::size_t bit = 0;
            for (std::size_t u = 0; u < n; ++u)
                for (std::size_t v = u + 1; v < n; ++v, ++bit)
                    if (adj[order[u]][order[v]]) m |= std::uint64_t{1} << bit;
            best = std::min(best, m);
            return;
        }
        auto first = order.begin() + static_cast<std::ptrdiff_t>(runs[r].first);
        auto last = order.begin() + static_cast<std::ptrdiff_t>(runs[r].second);
        std::sort(first, last);
        do {
            rec(r + 1);
        } while (std::next_permutation(first, last));
    };
    rec(0);
    return best;
}

}  // namespace

std::vector<std::uint64_t> isomorphism_classes(std::size_t n) {
    if (n == 0) return {0};
    if (n == 1) return {0};
    const auto smaller = isomorphism_classes(n - 1);
    std::set<std::uint64_t> seen;
    for (std::uint64_t base : smaller) {
        const auto adj = adj_of(n - 1, base);
        for (std::uint64_t nb = 0; nb < (std::uint64_t{1} << (n - 1)); ++nb) {
            std::vector<std::vector<char>> ext(n, std::vector<char>(n, 0));
            for (std::size_t u = 0; u + 1 < n; ++u)
                for (std::size_t v = 0; v + 1 < n; ++v) ext[u][v] = adj[u][v];
            for (std::size_t u = 0; u + 1 < n; ++u)
                if ((nb >> u) & 1U) ext[u][n - 1] = ext[n - 1][u] = 1;
            seen.insert(canonical(n, mask_of(ext)));
        }
    }
    return {seen.begin(), seen.end()};
}

bool lt(std::int64_t count, std::int64_t total, Frac eps) { return count * eps.den < eps.num * total; }

bool gt_compl(std::int64_t count, std::int64_t total, Frac eps) {
    return count * eps.den > (eps.den - eps.num) * total;
}

bool good_set(const Matrix& m, const std::vector<std::size_t>& x, Frac eps) {
    const auto size = static_cast<std::int64_t>(x.size());
    for (std::size_t b = 0; b < m.size(); ++b) {
        std::int64_t c = 0;
        for (std::size_t a : x) c += m[a][b];
        if (!lt(c, size, eps) && !gt_compl(c, size, eps)) return false;
    }
    return true;
}

std::int64_t edge_count(const Matrix& m, const std::vector<std::size_t>& x, const std::vector<std::size_t>& y) {
    std::int64_t c = 0;
    for (std::size_t a : x)
        for (std::size_t b : y) c += m[a][b];
    return c;
}

std::vector<std::vector<std::size_t>> type_classes(const Matrix& m, bool twin) {
    const std::size_t n = m.size();
    std::vector<std::size_t> cls(n, n);
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t u = 0; u < n; ++u) {
        if (cls[u] != n) continue;
        cls[u] = out.size();
        out.push_back({u});
        for (std::size_t v = u + 1; v < n; ++v) {
            if (cls[v] != n) continue;
            bool same = true;
            for (std::size_t b = 0; b < n && same; ++b) {
                if (twin && (b == u || b == v)) continue;
                same = m[u][b] == m[v][b];
            }
            if (same) {
                cls[v] = cls[u];
                out.back().push_back(v);
            }
        }
    }
    return out;
}

std::size_t min_good_partition(const Matrix& m, Frac eps, const std::function<Frac(std::size_t)>& sigma) {
    const std::size_t n = m.size();
    if (n > 12) throw std::invalid_argument("min_good_partition oracle is limited to 12 vertices");
    const std::uint64_t full = (std::uint64_t{1} << n) - 1;
    auto members_of = [&](std::uint64_t mask) {
        std::vector<std::size_t> out;
        for (std::size_t v = 0; v < n; ++v)
            if ((mask >> v) & 1U) out.push_back(v);
        return out;
    };
    for (std::size_t parts = 1; parts <= n; ++parts) {
        const Frac gamma = sigma(parts);
        std::vector<char> good(full + 1, 0);
        for (std::uint64_t s = 1; s <= full; ++s) good[s] = good_set(m, members_of(s), gamma) ? 1 : 0;
        // split[j][mask]: mask is a disjoint union of exactly j good sets.
        std::vector<std::vector<char>> split(parts + 1, std::vector<char>(full + 1, 0));
        split[0][0] = 1;
        for (std::size_t j = 1; j <= parts; ++j) {
            for (std::uint64_t mask = 1; mask <= full; ++mask) {
                // The block holding the lowest member of mask.
                const std::uint64_t low = mask & (~mask + 1);
                const std::uint64_t rest = mask ^ low;
                for (std::uint64_t sub = rest;; sub = (sub - 1) & rest) {
                    const std::uint64_t block = sub | low;
                    if (good[block] && split[j - 1][mask ^ block]) {
                        split[j][mask] = 1;
                        break;
                    }
                    if (sub == 0) break;
                }
            }
        }
        for (std::uint64_t x0 = 0; x0 <= full; ++x0) {
            const auto size = static_cast<std::int64_t>(members_of(x0).size());
            if (lt(size, static_cast<std::int64_t>(n), eps) && split[parts][full ^ x0]) return parts;
        }
    }
    return 0;
}

std::vector<std::vector<std::size_t>> subgroups(const std::vector<std::vector<std::size_t>>& table) {
    const std::size_t n = table.size();
    if (n > 20) throw std::invalid_argument("subgroup oracle is limited to order 20");
    std::vector<std::vector<std::size_t>> out;
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
        std::vector<std::size_t> el;
        for (std::size_t i = 0; i < n; ++i)
            if ((s >> i) & 1U) el.push_back(i);
        // A finite nonempty subset closed under the product is a subgroup.
        bool closed = true;
        for (std::size_t a : el)
            for (std::size_t b : el)
                if (closed && !((s >> table[a][b]) & 1U)) closed = false;
        if (closed) out.push_back(el);
    }
    return out;
}

}  // namespace stabreg::oracle
