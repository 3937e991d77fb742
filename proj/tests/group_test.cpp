#include <doctest.h>

#include "oracle.hpp"

#include "stabreg/errors.hpp"
#include "stabreg/group.hpp"
#include "stabreg/random.hpp"
#include "stabreg/stability.hpp"

#include <algorithm>

using namespace stabreg;

namespace {

std::vector<std::vector<std::size_t>> lists(const std::vector<Subgroup>& subs) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& s : subs) out.push_back(s.elements.members());
    return out;
}

VertexSet random_subset(std::size_t n, RandomStream& rng) {
    VertexSet s(n);
    for (std::size_t x = 0; x < n; ++x)
        if (rng.chance(1, 2)) s.insert(x);
    return s;
}

const ErrorFunction quarter = ErrorFunction::constant(Rational(1, 4));

}  // namespace

TEST_CASE("named groups") {
    const FiniteGroup z6 = FiniteGroup::cyclic(6);
    CHECK(z6.order() == 6);
    CHECK(z6.multiply(4, 5) == 3);
    CHECK(z6.inverse(2) == 4);
    CHECK(z6.name() == "Z_6");

    const FiniteGroup d4 = FiniteGroup::dihedral(4);
    CHECK(d4.order() == 8);
    // s r s = r^-1.
    CHECK(d4.multiply(d4.multiply(4, 1), 4) == 3);
    CHECK(d4.multiply(4, 4) == d4.identity());

    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK(s3.identity() == 0);
    const FiniteGroup z2z3 = FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    CHECK(z2z3.order() == 6);
    CHECK(z2z3.multiply(4, 5) == 0);  // (1, 1) (1, 2) = (0, 0)
}

TEST_CASE("tables are validated") {
    auto reason = [](std::vector<std::vector<Element>> t) {
        try {
            FiniteGroup::from_table(std::move(t));
        } catch (const InputError& e) {
            return e.reason();
        }
        return std::string("accepted");
    };
    CHECK(reason({{0, 1}, {1, 0}}) == "accepted");
    CHECK(reason({{0, 1}, {1}}) == "group");
    CHECK(reason({{0, 1}, {1, 2}}) == "group");
    CHECK(reason({{0, 1}, {1, 1}}) == "group");
    // A quasigroup with identity that is not associative.
    CHECK(reason({{0, 1, 2, 3, 4}, {1, 0, 3, 4, 2}, {2, 4, 0, 1, 3}, {3, 2, 4, 0, 1}, {4, 3, 1, 2, 0}}) == "group");
    CHECK_THROWS_AS(FiniteGroup::symmetric(6), InputError);
}

TEST_CASE("translate relations") {
    const FiniteGroup z6 = FiniteGroup::cyclic(6);
    const Relation r = translate_relation(z6, VertexSet::of(6, {0, 1, 2}));
    CHECK(r.rows() == 6);
    CHECK(r.holds(0, 0));
    CHECK(r.holds(1, 1));
    CHECK_FALSE(r.holds(3, 0));
    CHECK(r.holds(5, 3));
    for (Element x = 0; x < 6; ++x) CHECK(r.row(x).size() == 3);
    CHECK(ladder_index(r, 6) == 3);
    CHECK(ladder_index(translate_relation(z6, VertexSet::of(6, {0, 2, 4})), 6) == 1);

    const FiniteGroup s3 = FiniteGroup::symmetric(3);
    const VertexSet a = VertexSet::of(6, {1, 2});
    const Relation t = translate_relation(s3, a);
    for (Element x = 0; x < 6; ++x)
        for (Element y = 0; y < 6; ++y) CHECK(t.holds(x, y) == a.contains(s3.multiply(x, y)));
}

TEST_CASE("subgroups against every closed subset") {
    const std::vector<std::pair<FiniteGroup, std::size_t>> cases = {
        {FiniteGroup::cyclic(6), 4},
        {FiniteGroup::cyclic(12), 6},
        {FiniteGroup::symmetric(3), 6},
        {FiniteGroup::dihedral(4), 10},
        {FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)), 5},
        {FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(4)), 8},
    };
    for (const auto& [g, count] : cases) {
        const auto subs = all_subgroups(g);
        CHECK(subs.size() == count);
        auto got = lists(subs);
        auto want = oracle::subgroups(g.table());
        std::sort(got.begin(), got.end());
        std::sort(want.begin(), want.end());
        CHECK(got == want);
        for (std::size_t i = 0; i < subs.size(); ++i) {
            CHECK(subs[i].index * subs[i].elements.size() == g.order());
            CHECK(subs[i].normal == g.is_normal(subs[i].elements));
            if (i > 0) CHECK(subs[i - 1].index <= subs[i].index);
        }
    }
    Limits small;
    small.group_max = 100;
    CHECK_THROWS_AS(all_subgroups(FiniteGroup::cyclic(101), small), CapacityError);
    CHECK_THROWS_AS(all_subgroups(FiniteGroup::cyclic(130)), CapacityError);
}

TEST_CASE("normal subgroups by index") {
    CHECK(lists(normal_subgroups_up_to_index(FiniteGroup::cyclic(6), 3)) ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2, 3, 4, 5}, {0, 2, 4}, {0, 3}});
    CHECK(lists(normal_subgroups_up_to_index(FiniteGroup::cyclic(5), 4)) ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2, 3, 4}});
    CHECK(lists(normal_subgroups_up_to_index(FiniteGroup::symmetric(3), 2)) ==
          std::vector<std::vector<std::size_t>>{{0, 1, 2, 3, 4, 5}, {0, 3, 4}});
    // The reflection subgroups of S3 are not normal.
    CHECK(normal_subgroups_up_to_index(FiniteGroup::symmetric(3), 6).size() == 3);
}

TEST_CASE("coset regularity examples") {
    const FiniteGroup z6 = FiniteGroup::cyclic(6);
    {
        const CosetReport r = coset_regularity(z6, VertexSet::of(6, {0, 2, 4}), quarter, 3);
        CHECK(r.certified);
        CHECK(r.subgroup.elements == VertexSet::of(6, {0, 2, 4}));
        CHECK(r.error == 0);
        REQUIRE(r.cosets.size() == 2);
        CHECK(r.cosets[0].verdict == PairCheck::high);
        CHECK(r.cosets[1].verdict == PairCheck::low);
    }
    {
        const CosetReport r = coset_regularity(z6, VertexSet::of(6, {0, 1, 2}), quarter, 3);
        CHECK_FALSE(r.certified);
        CHECK(r.subgroup.elements == VertexSet::full(6));
        CHECK(r.failing == 1);
        const CosetReport full = coset_regularity(z6, VertexSet::of(6, {0, 1, 2}), quarter, 6);
        CHECK(full.certified);
        CHECK(full.subgroup.index == 6);
    }
    {
        const FiniteGroup z12 = FiniteGroup::cyclic(12);
        const CosetReport r = coset_regularity(z12, VertexSet::of(12, {0, 1, 2, 4, 5, 6, 8, 9, 10}), quarter, 4);
        CHECK(r.certified);
        CHECK(r.subgroup.index == 4);
        CHECK(r.cosets[3].hits == 0);
    }
    {
        // A single element out of 12: 1/12 is already below the threshold.
        const CosetReport r = coset_regularity(FiniteGroup::cyclic(12), VertexSet::of(12, {5}), quarter, 12);
        CHECK(r.certified);
        CHECK(r.subgroup.index == 1);
        CHECK(r.error == Rational(1, 12));
    }
    CHECK_THROWS_AS(coset_regularity(z6, VertexSet::of(5, {0}), quarter, 3), InputError);
}

TEST_CASE("unions of cosets are exactly regular") {
    RandomStream rng(41);
    for (const FiniteGroup& g : {FiniteGroup::cyclic(12), FiniteGroup::dihedral(4), FiniteGroup::symmetric(4)}) {
        for (const Subgroup& h : normal_subgroups_up_to_index(g, g.order())) {
            for (int round = 0; round < 5; ++round) {
                VertexSet a(g.order());
                const auto cosets = coset_report(g, VertexSet(g.order()), h, quarter).cosets;
                for (const auto& c : cosets)
                    if (rng.chance(1, 2)) a |= c.elements;
                const CosetReport r = coset_report(g, a, h, quarter);
                CHECK(r.pass);
                CHECK(r.error == 0);
                CHECK(r.exceptional.empty());
            }
        }
    }
}

TEST_CASE("reports recount cosets") {
    RandomStream rng(42);
    for (const FiniteGroup& g : {FiniteGroup::cyclic(12), FiniteGroup::dihedral(5), FiniteGroup::symmetric(4)}) {
        for (int round = 0; round < 20; ++round) {
            const VertexSet a = random_subset(g.order(), rng);
            for (const Subgroup& h : normal_subgroups_up_to_index(g, g.order())) {
                const CosetReport r = coset_report(g, a, h, quarter);
                CHECK(r.cosets.size() == h.index);
                CHECK(r.threshold == quarter(h.index));
                VertexSet covered(g.order());
                std::size_t failing = 0;
                for (const auto& c : r.cosets) {
                    // x H for the least x in the coset.
                    VertexSet expected(g.order());
                    h.elements.for_each([&](std::size_t e) { expected.insert(g.multiply(c.representative, e)); });
                    CHECK(c.elements == expected);
                    CHECK(c.representative == c.elements.first());
                    CHECK(c.hits == (c.elements & a).size());
                    const auto hits = static_cast<std::int64_t>(c.hits);
                    const auto size = static_cast<std::int64_t>(h.elements.size());
                    const PairCheck want = oracle::lt(hits, size, {1, 4})         ? PairCheck::low
                                           : oracle::gt_compl(hits, size, {1, 4}) ? PairCheck::high
                                                                                  : PairCheck::fail;
                    CHECK(c.verdict == want);
                    failing += want == PairCheck::fail ? 1 : 0;
                    covered |= c.elements;
                }
                CHECK(covered == g.elements());
                CHECK(r.failing == failing);
                CHECK(r.pass == (failing == 0));
            }
        }
    }
}

TEST_CASE("translates of A have the same best index") {
    RandomStream rng(43);
    for (const FiniteGroup& g : {FiniteGroup::cyclic(12), FiniteGroup::dihedral(4)}) {
        for (int round = 0; round < 20; ++round) {
            const VertexSet a = random_subset(g.order(), rng);
            const Element t = static_cast<Element>(rng.below(g.order()));
            VertexSet shifted(g.order());
            a.for_each([&](std::size_t x) { shifted.insert(g.multiply(t, x)); });
            const CosetReport r = coset_regularity(g, a, quarter, g.order());
            const CosetReport s = coset_regularity(g, shifted, quarter, g.order());
            CHECK(r.subgroup.elements == s.subgroup.elements);
            CHECK(r.error == s.error);
        }
    }
}

TEST_CASE("coset blocks are homogeneous for the difference relation") {
    // Under R(x, y) iff y^-1 x in A the block between xH and yH has density
    // |A ∩ y^-1 x H| / |H| when H is normal.
    const FiniteGroup g = FiniteGroup::dihedral(6);
    RandomStream rng(44);
    for (int round = 0; round < 10; ++round) {
        const VertexSet a = random_subset(g.order(), rng);
        for (const Subgroup& h : normal_subgroups_up_to_index(g, g.order())) {
            const Partition p = coset_partition(g, h);
            CHECK(p.params.construction == "cosets");
            CHECK(p.exceptional.empty());
            const Relation r = Relation::from_predicate(g.order(), g.order(), [&](std::size_t x, std::size_t y) {
                return a.contains(g.multiply(g.inverse(y), x));
            });
            const CosetReport report = coset_report(g, a, h, quarter);
            for (const auto& x : p.parts) {
                for (const auto& y : p.parts) {
                    const Element q = g.multiply(g.inverse(y.first()), x.first());
                    std::size_t hits = 0;
                    for (const auto& c : report.cosets)
                        if (c.elements.contains(q)) hits = c.hits;
                    const Density d = density(r, x, y);
                    CHECK(d.value() == Rational(static_cast<std::int64_t>(hits),
                                                static_cast<std::int64_t>(h.elements.size())));
                }
            }
        }
    }
}
