#include <doctest.h>

#include "oracle.hpp"

#include "stabreg/generators.hpp"

using namespace stabreg;

TEST_CASE("graphs from masks follow pair order") {
    CHECK(oracle::pair_count(5) == 10);
    const Graph g = oracle::graph_from_mask(4, 0b100001);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(2, 3));
    CHECK(g.edge_count() == 2);
}

TEST_CASE("isomorphism class counts") {
    const std::vector<std::size_t> counts = {1, 2, 4, 11, 34, 156, 1044};
    for (std::size_t n = 1; n <= counts.size(); ++n) CHECK(oracle::isomorphism_classes(n).size() == counts[n - 1]);
}

TEST_CASE("ladder oracle on hand-checked cases") {
    for (std::size_t k = 1; k <= 5; ++k) {
        const auto m = oracle::matrix(generate(FamilySpec::half_graph(static_cast<std::int64_t>(k))));
        CHECK(oracle::ladder_exists(m, k));
        CHECK_FALSE(oracle::ladder_exists(m, k + 1));
        CHECK(oracle::ladder_index(m, 10) == k);
    }
    const auto k5 = oracle::matrix(generate(FamilySpec::complete(5)));
    CHECK(oracle::ladder_exists(k5, 2));
    CHECK_FALSE(oracle::ladder_exists(k5, 3));
    CHECK(oracle::ladder_index(oracle::matrix(generate(FamilySpec::empty(4))), 4) == 0);
    CHECK(oracle::ladder_index(k5, 1) == 1);
}

TEST_CASE("type classes and goodness by hand") {
    const auto m = oracle::matrix(generate(FamilySpec::parse("clique_union(3,2)")));
    CHECK(oracle::type_classes(m, true) == std::vector<std::vector<std::size_t>>{{0, 1, 2}, {3, 4}});
    CHECK(oracle::type_classes(m, false).size() == 5);
    CHECK(oracle::good_set(m, {0, 1, 2}, {1, 2}));
    CHECK_FALSE(oracle::good_set(m, {0, 1, 2}, {1, 4}));
    CHECK(oracle::edge_count(m, {0, 1, 2}, {0, 1, 2}) == 6);
    CHECK(oracle::lt(1, 4, {1, 3}));
    CHECK_FALSE(oracle::lt(1, 3, {1, 3}));
    CHECK(oracle::gt_compl(3, 4, {1, 3}));
    CHECK_FALSE(oracle::gt_compl(2, 3, {1, 3}));
}

TEST_CASE("minimal good partitions by hand") {
    const auto fifth = [](std::size_t) { return oracle::Frac{1, 5}; };
    const auto third = [](std::size_t) { return oracle::Frac{1, 3}; };
    const auto cliques = oracle::matrix(generate(FamilySpec::parse("clique_union(4,4)")));
    CHECK(oracle::min_good_partition(cliques, {1, 4}, fifth) == 7);
    CHECK(oracle::min_good_partition(cliques, {1, 4}, third) == 2);
    CHECK(oracle::min_good_partition(oracle::matrix(generate(FamilySpec::empty(9))), {1, 4}, fifth) == 1);
    CHECK(oracle::min_good_partition(oracle::matrix(generate(FamilySpec::half_graph(2))), {1, 4}, third) == 4);
}

TEST_CASE("subgroups of small tables") {
    const std::vector<std::vector<std::size_t>> z4 = {{0, 1, 2, 3}, {1, 2, 3, 0}, {2, 3, 0, 1}, {3, 0, 1, 2}};
    CHECK(oracle::subgroups(z4).size() == 3);
    const std::vector<std::vector<std::size_t>> v4 = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    CHECK(oracle::subgroups(v4).size() == 5);
}
