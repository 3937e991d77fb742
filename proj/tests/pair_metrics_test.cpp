#include <doctest.h>

#include "oracle.hpp"

#include "stabreg/errors.hpp"
#include "stabreg/generators.hpp"
#include "stabreg/pair_metrics.hpp"
#include "stabreg/random.hpp"
#include "stabreg/types.hpp"

using namespace stabreg;

namespace {

Graph family(const char* spec) { return generate(FamilySpec::parse(spec)); }

// Complete bipartite between {0..s-1} and {s..2s-1}, or its empty version.
Graph bipartite(std::size_t s, bool complete) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    if (complete)
        for (Vertex a = 0; a < s; ++a)
            for (Vertex b = s; b < 2 * s; ++b) edges.emplace_back(a, b);
    return Graph(2 * s, edges);
}

VertexSet range(std::size_t universe, Vertex lo, Vertex hi) {
    VertexSet s(universe);
    for (Vertex v = lo; v < hi; ++v) s.insert(v);
    return s;
}

Graph random_graph(std::size_t n, std::uint64_t num, std::uint64_t den, RandomStream& rng) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.chance(num, den)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

VertexSet random_subset(std::size_t n, RandomStream& rng) {
    VertexSet s(n);
    while (s.empty())
        for (Vertex v = 0; v < n; ++v)
            if (rng.chance(1, 2)) s.insert(v);
    return s;
}

}  // namespace

TEST_CASE("is_good_set examples") {
    CHECK(is_good_set(family("empty(6)"), VertexSet::full(6), Rational(1, 100)));
    const Graph h = family("half_graph(4)");
    CHECK_FALSE(is_good_set(h, half_graph_a_side(4), Rational(1, 4)));
    // b_1 already sits on the boundary: 1 = (1/4) * 4.
    CHECK(goodness_violation(h, half_graph_a_side(4), Rational(1, 4)) == Vertex{4});
    CHECK_THROWS_AS(is_good_set(h, VertexSet(8), Rational(1, 4)), InputError);
    CHECK_THROWS_AS(is_good_set(h, half_graph_a_side(4), Rational(0)), InputError);

    RandomStream rng(3);
    for (int round = 0; round < 40; ++round) {
        const Graph g = random_graph(3 + rng.below(12), 1, 2, rng);
        for (const TypeClass& c : type_spectrum(g).classes) {
            const auto s = static_cast<std::int64_t>(c.members.size());
            CHECK(is_good_set(g, c.members, Rational(2, s)));
        }
    }
}

TEST_CASE("goodness agrees with the brute-force count and slack has the right sign") {
    RandomStream rng(4);
    const Rational eps_values[] = {Rational(1, 2), Rational(1, 3), Rational(1, 7), Rational(2, 5)};
    for (int round = 0; round < 300; ++round) {
        const Graph g = random_graph(2 + rng.below(10), 1 + rng.below(3), 4, rng);
        const VertexSet x = random_subset(g.order(), rng);
        const Rational& eps = eps_values[rng.below(4)];
        const oracle::Frac f{static_cast<std::int64_t>(boost::multiprecision::numerator(eps)),
                             static_cast<std::int64_t>(boost::multiprecision::denominator(eps))};
        const bool good = is_good_set(g, x, eps);
        CHECK(good == oracle::good_set(oracle::matrix(g), x.members(), f));
        CHECK(good == (goodness_slack(g, x, eps) > 0));
    }
}

TEST_CASE("threshold_sets examples") {
    const Rational half(1, 2);
    {
        const Graph g = family("empty(6)");
        const auto s = threshold_sets(g, range(6, 0, 3), range(6, 3, 6), half, half);
        CHECK(s.x0 == range(6, 0, 3));
        CHECK(s.y1.empty());
    }
    {
        const Graph g = bipartite(3, true);
        const auto s = threshold_sets(g, range(6, 0, 3), range(6, 3, 6), half, half);
        CHECK(s.x0.empty());
        CHECK(s.y1 == range(6, 3, 6));
    }
    {
        // |E(a_i, Y)| = 5 - i and |E(X, b_j)| = j.
        const Graph g = family("half_graph(4)");
        const auto s = threshold_sets(g, half_graph_a_side(4), half_graph_b_side(4), half, half);
        CHECK(s.x0.members() == std::vector<Vertex>{3});
        CHECK(s.y1.members() == std::vector<Vertex>{6, 7});
    }
}

TEST_CASE("pair predicate examples") {
    const Rational quarter(1, 4);
    const VertexSet x = range(6, 0, 3), y = range(6, 3, 6);
    {
        const Graph g = bipartite(3, true);
        const PairVerdict v = homogeneity(g, x, y, quarter);
        CHECK(v.kind == PairKind::homogeneous_high);
        CHECK(v.density.value() == 1);
        const auto w = special_witness(g, x, y, quarter);
        REQUIRE(w.has_value());
        CHECK(w->side == Side::high);
        CHECK(w->x_prime == x);
        CHECK(w->y_prime == y);
        CHECK(is_good_pair(g, x, y, quarter));
    }
    {
        const Graph g = bipartite(3, false);
        CHECK(homogeneity(g, x, y, quarter).kind == PairKind::homogeneous_low);
        const auto w = special_witness(g, x, y, quarter);
        REQUIRE(w.has_value());
        CHECK(w->side == Side::low);
        CHECK(is_good_pair(g, x, y, quarter));
    }
    {
        const Graph g = family("half_graph(4)");
        const PairVerdict v = homogeneity(g, half_graph_a_side(4), half_graph_b_side(4), quarter);
        CHECK(v.kind == PairKind::not_homogeneous);
        CHECK(v.density.value() == Rational(5, 8));
        CHECK(std::string(to_string(v.kind)) == "not-homogeneous");
    }
    CHECK(std::string(to_string(PairKind::homogeneous_low)) == "homogeneous-low");
    CHECK(std::string(to_string(PairKind::homogeneous_high)) == "homogeneous-high");
}

TEST_CASE("boundary counts fail both clauses") {
    // |E(X, b)| = 1 = (1/4)|X| for X = {0,1,2,3} and b = 4.
    const Graph g(5, {{0, 4}});
    const VertexSet x = range(5, 0, 4);
    CHECK_FALSE(is_good_set(g, x, Rational(1, 4)));
    CHECK(is_good_set(g, x, Rational(1, 4) + Rational(1, 1000)));
    // d = 1/4 exactly: not 1/4-homogeneous.
    CHECK_FALSE(is_homogeneous(g, x, range(5, 4, 5), Rational(1, 4)));
}

TEST_CASE("special witnesses are the maximal qualifying sets") {
    RandomStream rng(6);
    for (int round = 0; round < 200; ++round) {
        const Graph g = random_graph(2 + rng.below(8), 1 + rng.below(3), 4, rng);
        const VertexSet x = random_subset(g.order(), rng), y = random_subset(g.order(), rng);
        const Rational eps(1 + static_cast<std::int64_t>(rng.below(4)), 10);
        const auto m = oracle::matrix(g);
        const auto sx = static_cast<std::int64_t>(x.size()), sy = static_cast<std::int64_t>(y.size());
        const oracle::Frac f{static_cast<std::int64_t>(boost::multiprecision::numerator(eps)),
                             static_cast<std::int64_t>(boost::multiprecision::denominator(eps))};
        // Brute force: some X', Y' witness on a side iff the maximal ones do.
        bool expected = false;
        for (int side = 0; side < 2 && !expected; ++side) {
            std::int64_t xs = 0, ys = 0;
            for (Vertex a : x.members()) {
                const auto c = oracle::edge_count(m, {a}, y.members());
                xs += (side == 0 ? oracle::lt(c, sy, f) : oracle::gt_compl(c, sy, f)) ? 1 : 0;
            }
            for (Vertex b : y.members()) {
                const auto c = oracle::edge_count(m, x.members(), {b});
                ys += (side == 0 ? oracle::lt(c, sx, f) : oracle::gt_compl(c, sx, f)) ? 1 : 0;
            }
            expected = oracle::gt_compl(xs, sx, f) && oracle::gt_compl(ys, sy, f);
        }
        CHECK(is_special(g, x, y, eps) == expected);
        if (expected) CHECK(is_almost_good(g, x, y, eps, eps));
        if (is_good_pair(g, x, y, eps)) CHECK(is_almost_good(g, x, y, eps, eps));
    }
}

TEST_CASE("threshold-set proposition on random instances") {
    RandomStream rng(7);
    std::size_t applied = 0;
    for (int round = 0; round < 3000; ++round) {
        const Graph g = random_graph(3 + rng.below(15), 1 + rng.below(3), 4, rng);
        const VertexSet x = random_subset(g.order(), rng), y = random_subset(g.order(), rng);
        const Rational alpha(1 + static_cast<std::int64_t>(rng.below(8)), 8);
        const Rational beta(1 + static_cast<std::int64_t>(rng.below(8)), 9);
        const Rational eps(1 + static_cast<std::int64_t>(rng.below(6)), 12);
        const Rational delta(1 + static_cast<std::int64_t>(rng.below(6)), 12);
        const auto s = threshold_sets(g, x, y, delta, eps);
        const auto size_y = static_cast<std::int64_t>(y.size()), size_x = static_cast<std::int64_t>(x.size());
        if (Rational(static_cast<std::int64_t>(s.y1.size())) < alpha * size_y) continue;
        if (delta * (1 - beta) > alpha * (beta - eps)) continue;
        ++applied;
        const Rational x0(static_cast<std::int64_t>(s.x0.size()));
        CHECK((x0 < beta * size_x || x0 > (1 - beta) * size_x));
    }
    CHECK(applied > 50);
}

TEST_CASE("subsets of good sets scale their goodness") {
    // X eps-good and Y in X with |Y| = alpha|X| give Y (eps/alpha)-good.
    RandomStream rng(9);
    std::size_t applied = 0;
    for (int round = 0; round < 400; ++round) {
        const Graph g = random_graph(4 + rng.below(10), 1, 2, rng);
        for (const TypeClass& c : type_spectrum(g, TypeRule::twin).classes) {
            const Rational eps(2 + static_cast<std::int64_t>(rng.below(3)), static_cast<std::int64_t>(c.members.size()) + 2);
            if (!is_good_set(g, c.members, eps)) continue;
            VertexSet y(g.order());
            for (Vertex v : c.members.members())
                if (rng.chance(1, 2)) y.insert(v);
            if (y.empty()) continue;
            ++applied;
            const Rational alpha(static_cast<std::int64_t>(y.size()), static_cast<std::int64_t>(c.members.size()));
            CHECK(is_good_set(g, y, eps / alpha));
        }
    }
    CHECK(applied > 100);
}

TEST_CASE("is_excellent examples") {
    const Graph e = family("empty(6)");
    CHECK(is_excellent(e, VertexSet::full(6), Rational(1, 3), Rational(1, 5)));
    const Graph h = family("half_graph(4)");
    CHECK_FALSE(is_excellent(h, half_graph_a_side(4), Rational(1, 4), Rational(1, 4)));
    for (const char* spec : {"clique_union(3,4)", "matching(3)", "half_graph(3)", "clique_union(2,2,3)"}) {
        const Graph g = family(spec);
        for (const TypeClass& c : type_spectrum(g).classes) {
            const auto s = static_cast<std::int64_t>(c.members.size());
            CAPTURE(spec);
            CHECK(is_excellent(g, c.members, Rational(6, s), Rational(2, s)));
        }
    }
    CHECK_THROWS_AS(is_excellent(family("empty(15)"), VertexSet::full(15), Rational(1, 4), Rational(1, 4)),
                    CapacityError);
    Limits small;
    small.exhaustive_max = 5;
    CHECK_THROWS_AS(is_excellent(family("empty(6)"), VertexSet::full(6), Rational(1, 4), Rational(1, 4), small),
                    CapacityError);
}

TEST_CASE("good sets are excellent at the sharper level for sampled delta") {
    // eps-good (eps < 1/2) gives ((eps + 2 delta) / (1 + 2 delta), delta)-excellent.
    RandomStream rng(10);
    std::size_t checked = 0;
    for (int round = 0; round < 60; ++round) {
        const Graph g = random_graph(3 + rng.below(5), 1 + rng.below(3), 4, rng);
        const Rational eps(1 + static_cast<std::int64_t>(rng.below(5)), 11);
        const Rational delta(1 + static_cast<std::int64_t>(rng.below(9)), 20);
        const ExcellenceContext context(g, delta);
        CHECK(context.exhaustive());
        for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << g.order()); ++mask) {
            const VertexSet x = VertexSet::from_mask(g.order(), mask);
            if (!is_good_set(g, x, eps)) continue;
            ++checked;
            CHECK(context.check(x, (eps + 2 * delta) / (1 + 2 * delta)));
        }
    }
    CHECK(checked > 100);
}

TEST_CASE("excellence relative to a candidate family") {
    const Graph g = family("half_graph(3)");
    const std::vector<VertexSet> candidates = {half_graph_b_side(3), VertexSet::of(6, {3})};
    const ExcellenceContext context(g, Rational(1, 3), candidates);
    CHECK_FALSE(context.exhaustive());
    CHECK(context.good_family_size() == 1);  // the b-side is not 1/3-good
    CHECK(context.check(VertexSet::of(6, {0}), Rational(1, 3)));
}
