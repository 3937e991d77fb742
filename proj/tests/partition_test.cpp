#include <doctest.h>

#include "oracle.hpp"

#include "stabreg/errors.hpp"
#include "stabreg/generators.hpp"
#include "stabreg/pair_metrics.hpp"
#include "stabreg/partition.hpp"
#include "stabreg/random.hpp"
#include "stabreg/stability.hpp"

using namespace stabreg;

namespace {

Graph family(const char* spec) { return generate(FamilySpec::parse(spec)); }

Graph random_graph(std::size_t n, RandomStream& rng, std::uint64_t num = 1, std::uint64_t den = 2) {
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (rng.chance(num, den)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

VertexSet range_set(std::size_t n, std::size_t lo, std::size_t hi) {
    VertexSet s(n);
    for (std::size_t v = lo; v < hi; ++v) s.insert(v);
    return s;
}

oracle::Frac frac(const Rational& r) {
    return {static_cast<std::int64_t>(numerator(r)), static_cast<std::int64_t>(denominator(r))};
}

Rational mass(const VertexSet& s, std::size_t n) {
    return Rational(static_cast<std::int64_t>(s.size()), static_cast<std::int64_t>(n));
}

void check_certificate(const Graph& g, const Partition& p, const Rational& eps, const Rational& gamma) {
    validate_partition(g, p);
    CHECK(mass(p.exceptional, g.order()) < eps);
    const auto m = oracle::matrix(g);
    for (const auto& part : p.parts) CHECK(oracle::good_set(m, part.members(), frac(gamma)));
}

}  // namespace

TEST_CASE("type_mass_partition examples") {
    {
        const Partition p = type_mass_partition(family("empty(10)"), Rational(1, 2));
        REQUIRE(p.parts.size() == 1);
        CHECK(p.parts[0] == VertexSet::full(10));
        CHECK(p.exceptional.empty());
        CHECK(p.params.construction == "type_mass");
    }
    {
        const Partition p = type_mass_partition(family("matching(3)"), Rational(1, 2), TypeRule::twin);
        REQUIRE(p.parts.size() == 2);
        CHECK(p.exceptional == VertexSet::of(6, {4, 5}));
    }
    {
        const Partition p = type_mass_partition(family("half_graph(3)"), Rational(1, 6));
        CHECK(p.parts.size() == 6);
        CHECK(p.exceptional.empty());
    }
}

TEST_CASE("type_mass_partition keeps the pooled mass below eps") {
    RandomStream rng(31);
    for (int round = 0; round < 300; ++round) {
        const Graph g = random_graph(1 + rng.below(16), rng);
        const Rational eps(static_cast<std::int64_t>(1 + rng.below(9)), 10);
        for (TypeRule rule : {TypeRule::twin, TypeRule::exact}) {
            const Partition p = type_mass_partition(g, eps, rule);
            validate_partition(g, p);
            CHECK(mass(p.exceptional, g.order()) < eps);
            CHECK_FALSE(p.parts.empty());
            // Minimal prefix: dropping the last part would push X_0 to eps or more.
            CHECK(mass(p.exceptional | p.parts.back(), g.order()) >= eps);
            for (const auto& part : p.parts) {
                const auto s = static_cast<std::int64_t>(part.size());
                if (rule == TypeRule::exact) CHECK(is_good_set(g, part, Rational(1, 1000000)));
                else CHECK(is_good_set(g, part, Rational(2 * s + 1, s * s)));
            }
        }
    }
}

TEST_CASE("exact search finds the least certificate") {
    RandomStream rng(32);
    const std::vector<ErrorFunction> sigmas = {ErrorFunction::constant(Rational(1, 4)),
                                               ErrorFunction::constant(Rational(1, 3)),
                                               ErrorFunction::inverse(Rational(1, 2))};
    for (int round = 0; round < 150; ++round) {
        const std::size_t n = 1 + rng.below(9);
        const Graph g = round % 3 == 0 ? random_graph(n, rng, 1, 6) : random_graph(n, rng);
        const Rational eps(static_cast<std::int64_t>(1 + rng.below(3)), 6);
        const ErrorFunction& sigma = sigmas[rng.below(sigmas.size())];
        const Partition p = good_partition_search(g, eps, sigma, SearchMode::exact);
        const std::size_t expected =
            oracle::min_good_partition(oracle::matrix(g), frac(eps), [&](std::size_t m) { return frac(sigma(m)); });
        CHECK(p.parts.size() == expected);
        CHECK(*p.params.goodness == sigma(p.parts.size()));
        check_certificate(g, p, eps, *p.params.goodness);
    }
}

TEST_CASE("exact search examples") {
    const ErrorFunction fifth = ErrorFunction::constant(Rational(1, 5));
    const ErrorFunction third = ErrorFunction::constant(Rational(1, 3));
    // Cliques of four are only 1/5-good if 3 > (4/5) 4, which fails.
    CHECK(good_partition_search(family("clique_union(4,4)"), Rational(1, 4), fifth, SearchMode::exact).parts.size() ==
          7);
    CHECK(good_partition_search(family("clique_union(4,4)"), Rational(1, 4), third, SearchMode::exact).parts.size() ==
          2);
    CHECK(good_partition_search(family("half_graph(2)"), Rational(1, 4), third, SearchMode::exact).parts.size() == 4);
    CHECK(good_partition_search(family("empty(12)"), Rational(1, 4), fifth, SearchMode::exact).parts.size() == 1);
    CHECK_THROWS_AS(good_partition_search(family("empty(13)"), Rational(1, 4), fifth, SearchMode::exact),
                    CapacityError);
    Limits wide;
    wide.exact_partition_max = 13;
    CHECK(good_partition_search(family("empty(13)"), Rational(1, 4), fifth, SearchMode::exact, wide).parts.size() ==
          1);
    CHECK_THROWS_AS(good_partition_search(family("empty(4)"), Rational(1), fifth, SearchMode::exact), InputError);
}

TEST_CASE("greedy search is certified or says so") {
    RandomStream rng(33);
    const ErrorFunction sigma = ErrorFunction::constant(Rational(1, 4));
    std::size_t certified = 0;
    for (int round = 0; round < 100; ++round) {
        const Graph g = random_graph(2 + rng.below(30), rng, 1, 8);
        const Rational eps(1, 4);
        const Partition p = good_partition_search(g, eps, sigma, SearchMode::greedy);
        validate_partition(g, p);
        CHECK(p.params.construction == "greedy");
        const bool recheck = mass(p.exceptional, g.order()) < eps && [&] {
            for (const auto& part : p.parts)
                if (!oracle::good_set(oracle::matrix(g), part.members(), frac(sigma(p.parts.size())))) return false;
            return true;
        }();
        CHECK(p.certified == recheck);
        certified += p.certified ? 1 : 0;
    }
    CHECK(certified > 0);
    // Exact types split each clique into singletons, and no two clique
    // vertices merge at 1/4: each sees exactly half of the pair.
    const Partition p = good_partition_search(family("clique_union(5,5)"), Rational(1, 4), sigma, SearchMode::greedy);
    CHECK(p.parts.size() == 8);
    CHECK(p.certified);
    const Partition q = good_partition_search(family("matching(6)"), Rational(1, 4), sigma, SearchMode::greedy);
    CHECK(q.certified);
    CHECK(q.parts.size() < 12);
}

TEST_CASE("refinement examples") {
    const ErrorFunction quarter = ErrorFunction::constant(Rational(1, 4));
    {
        const Graph g = family("empty(20)");
        const Partition base = type_mass_partition(g, Rational(1, 4));
        const Partition p = equipartition_refine(g, base, Rational(1, 2), quarter);
        REQUIRE(p.parts.size() == 4);
        for (const auto& part : p.parts) CHECK(part.size() == 5);
        CHECK(p.exceptional.empty());
        CHECK(*p.params.chunk_size == 5);
    }
    {
        const Graph g = family("clique_union(8,8)");
        try {
            Partition base;
            base.exceptional = VertexSet(16);
            base.parts = {range_set(16, 0, 8), range_set(16, 8, 16)};
            equipartition_refine(g, base, Rational(1, 2), quarter);
            FAIL("eight-cliques accepted at tau = 1/512");
        } catch (const PreconditionError& e) {
            CHECK(e.reason() == "base_not_tau_good");
        }
    }
    {
        const Graph g = family("clique_union(600,600)");
        Partition base;
        base.exceptional = VertexSet(1200);
        base.parts = {range_set(1200, 0, 600), range_set(1200, 600, 1200)};
        const Partition p = equipartition_refine(g, base, Rational(1, 2), quarter);
        CHECK(*p.params.tau == Rational(1, 512));
        CHECK(*p.params.chunk_size == 150);
        REQUIRE(p.parts.size() == 8);
        for (const auto& part : p.parts) {
            CHECK(part.size() == 150);
            CHECK(is_good_set(g, part, *p.params.goodness));
        }
        const RegularityReport r = verify_regularity(g, p, Rational(1, 2), quarter);
        CHECK(r.pass);
    }
}

TEST_CASE("refinement preconditions and sigma handling") {
    const Graph g = family("empty(20)");
    const ErrorFunction quarter = ErrorFunction::constant(Rational(1, 4));
    Partition base;
    base.exceptional = range_set(20, 0, 5);
    base.parts = {range_set(20, 5, 20)};
    try {
        equipartition_refine(g, base, Rational(1, 2), quarter);
        FAIL("X_0 of a quarter accepted at eps/2 = 1/4");
    } catch (const PreconditionError& e) {
        CHECK(e.reason() == "exceptional_too_large");
    }
    base.exceptional = VertexSet(20);
    base.parts = {};
    base.exceptional = VertexSet::full(20);
    CHECK_THROWS_AS(equipartition_refine(g, base, Rational(1, 2), quarter), PreconditionError);

    // An increasing table is replaced by its running minimum.
    const ErrorFunction rising = ErrorFunction::table({Rational(1, 8), Rational(1, 4)}, Rational(1, 3));
    const Partition p = equipartition_refine(g, type_mass_partition(g, Rational(1, 4)), Rational(1, 2), rising);
    CHECK(p.params.sigma_running_min);
    CHECK(*p.params.goodness == Rational(1, 256));
    CHECK_FALSE(equipartition_refine(g, type_mass_partition(g, Rational(1, 4)), Rational(1, 2), quarter)
                    .params.sigma_running_min);
}

TEST_CASE("tau and the part bound recomputed by hand") {
    for (std::int64_t m = 1; m <= 6; ++m) {
        for (std::int64_t d = 2; d <= 6; ++d) {
            const Rational eps(1, d);
            const ErrorFunction sigma = ErrorFunction::inverse(Rational(1, 2));
            const std::int64_t bound = 2 * m * m * d;
            CHECK(refinement_part_bound(static_cast<std::uint64_t>(m), eps) == static_cast<std::uint64_t>(bound));
            const Rational s(1, 2 * (bound + 1));
            CHECK(refinement_tau(static_cast<std::uint64_t>(m), eps, sigma) == eps * s * s / (8 * m));
        }
    }
    CHECK(refinement_part_bound(2, Rational(2, 3)) == 12);
}

TEST_CASE("refined chunks stay good") {
    RandomStream rng(34);
    const ErrorFunction sigma = ErrorFunction::constant(Rational(1, 4));
    for (int round = 0; round < 40; ++round) {
        // Blow up a pattern on a few vertices into large homogeneous blocks.
        const std::size_t base = 1 + rng.below(3);
        const Graph pattern = random_graph(base, rng);
        std::vector<std::size_t> owner;
        for (std::size_t v = 0; v < base; ++v)
            for (std::size_t c = 600 + rng.below(200); c > 0; --c) owner.push_back(v);
        std::vector<std::pair<Vertex, Vertex>> edges;
        for (std::size_t u = 0; u < owner.size(); ++u)
            for (std::size_t v = u + 1; v < owner.size(); ++v)
                if (owner[u] != owner[v] && pattern.adjacent(owner[u], owner[v])) edges.emplace_back(u, v);
        const Graph g(owner.size(), edges);
        const Rational eps(1, 2);
        const Partition p = equipartition_refine(g, type_mass_partition(g, eps / 2), eps, sigma);
        validate_partition(g, p);
        CHECK(p.parts.size() <= refinement_part_bound(p.params.base_parts.value(), eps));
        CHECK(mass(p.exceptional, g.order()) <= eps);
        for (const auto& part : p.parts) CHECK(is_good_set(g, part, *p.params.goodness));
        CHECK(verify_regularity(g, p, eps, sigma).pass);
    }
}

TEST_CASE("verification examples") {
    const ErrorFunction quarter = ErrorFunction::constant(Rational(1, 4));
    {
        const Graph g = family("half_graph(4)");
        Partition p;
        p.exceptional = VertexSet(8);
        p.parts = {VertexSet::full(8)};
        const RegularityReport r = verify_regularity(g, p, Rational(1, 4), quarter);
        CHECK(r.densities[0][0].value() == Rational(20, 64));
        CHECK(r.pair_matrix[0][0] == PairCheck::fail);
        CHECK_FALSE(r.diagonal_pass);
        CHECK_FALSE(r.pass);
    }
    {
        const Graph g = family("empty(6)");
        Partition p;
        p.exceptional = VertexSet(6);
        p.parts = {VertexSet::of(6, {0, 1}), VertexSet::of(6, {2, 3, 4, 5})};
        const RegularityReport r = verify_regularity(g, p, Rational(1, 4), quarter);
        CHECK_FALSE(r.size_check);
        CHECK(r.diagonal_pass);
        CHECK(r.off_diagonal_pass);
        CHECK_FALSE(r.pass);
    }
    {
        const Graph g = family("clique_union(3,3)");
        Partition p;
        p.exceptional = VertexSet(6);
        p.parts = {VertexSet::of(6, {0, 1, 2}), VertexSet::of(6, {3, 4, 5})};
        const RegularityReport r = verify_regularity(g, p, Rational(1, 4), quarter);
        // A triangle counts 6 of 9 ordered pairs: not above 3/4.
        CHECK(r.pair_matrix[0][0] == PairCheck::fail);
        CHECK(r.pair_matrix[0][1] == PairCheck::low);
        CHECK_FALSE(r.pass);
        CHECK(verify_regularity(g, p, Rational(1, 4), ErrorFunction::constant(Rational(1, 3))).pass == false);
        CHECK(verify_regularity(g, p, Rational(1, 4), ErrorFunction::constant(Rational(2, 5))).pass);
    }
    {
        const Graph g = family("empty(8)");
        Partition p;
        p.exceptional = VertexSet::of(8, {0, 1, 2});
        p.parts = {VertexSet::of(8, {3, 4, 5, 6, 7})};
        const RegularityReport r = verify_regularity(g, p, Rational(1, 4), quarter);
        CHECK_FALSE(r.exceptional_check);
        CHECK(r.exceptional_fraction == Rational(3, 8));
        CHECK(verify_regularity(g, p, Rational(3, 8), quarter).pass);
    }
}

TEST_CASE("verification recounts every pair") {
    RandomStream rng(35);
    for (int round = 0; round < 100; ++round) {
        const std::size_t n = 4 + rng.below(20);
        const Graph g = random_graph(n, rng);
        const std::size_t size = 1 + rng.below(n / 2);
        Partition p;
        p.exceptional = VertexSet(n);
        std::size_t v = 0;
        for (; v + size <= n; v += size) p.parts.push_back(range_set(n, v, v + size));
        for (; v < n; ++v) p.exceptional.insert(v);
        const Rational eps(1, 2);
        const ErrorFunction sigma = ErrorFunction::constant(Rational(1, 3));
        const RegularityReport r = verify_regularity(g, p, eps, sigma);
        const auto m = oracle::matrix(g);
        bool all = true;
        for (std::size_t i = 0; i < p.parts.size(); ++i) {
            for (std::size_t j = 0; j < p.parts.size(); ++j) {
                const auto e = oracle::edge_count(m, p.parts[i].members(), p.parts[j].members());
                const auto total = static_cast<std::int64_t>(size * size);
                const PairCheck want = oracle::lt(e, total, {1, 3})         ? PairCheck::low
                                       : oracle::gt_compl(e, total, {1, 3}) ? PairCheck::high
                                                                            : PairCheck::fail;
                CHECK(r.pair_matrix[i][j] == want);
                all = all && want != PairCheck::fail;
            }
        }
        const bool small = 2 * p.exceptional.size() <= n;
        CHECK(r.pass == (all && small));
    }
}

TEST_CASE("stable graphs regularize end to end") {
    const ErrorFunction sigma = ErrorFunction::constant(Rational(1, 4));
    for (const char* spec : {"clique_union(700,500)", "empty(900)", "complete(800)",
                             "clique_union(300,300,300)"}) {
        CAPTURE(spec);
        const Graph g = family(spec);
        const Rational eps(1, 2);
        const Partition base = type_mass_partition(g, eps / 2);
        const Partition p = equipartition_refine(g, base, eps, sigma);
        CHECK(verify_regularity(g, p, eps, sigma).pass);
    }
}

TEST_CASE("partitions are validated") {
    const Graph g = family("empty(4)");
    Partition p;
    p.exceptional = VertexSet::of(4, {0});
    p.parts = {VertexSet::of(4, {1, 2})};
    CHECK_THROWS_AS(validate_partition(g, p), InputError);
    p.parts = {VertexSet::of(4, {0, 1, 2, 3})};
    CHECK_THROWS_AS(validate_partition(g, p), InputError);
    p.parts = {VertexSet::of(4, {1, 2, 3}), VertexSet(4)};
    CHECK_THROWS_AS(validate_partition(g, p), InputError);
    p.parts = {VertexSet::of(4, {1, 2, 3})};
    CHECK_NOTHROW(validate_partition(g, p));
    CHECK(parse_search_mode("greedy") == SearchMode::greedy);
    CHECK_THROWS_AS(parse_search_mode("fast"), InputError);
}
