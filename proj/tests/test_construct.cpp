#include <doctest.h>

#include <cmath>

#include "schur/construct.hpp"
#include "schur/io.hpp"
#include "schur/search.hpp"
#include "schur/verify.hpp"
#include "test_support.hpp"

using namespace schur;
using schur::testing::P;

namespace {

Partition unit_seed() {
    return P(1, {{1}}, Kind::Strong);
}

Partition seed4() {
    return P(4, {{1, 4}, {2, 3}}, Kind::Strong);
}

// Every canonical strong partition with r <= 3 subsets, at every order.
std::vector<Partition> strong_seeds() {
    std::vector<Partition> seeds;
    const std::pair<std::size_t, Element> maxima[] = {{1, 1}, {2, 4}, {3, 13}};
    for (const auto& [r, top] : maxima) {
        for (Element order = 1; order <= top; ++order) {
            for (auto& p : enumerate_all_max(r, Kind::Strong, order)) {
                seeds.push_back(std::move(p));
            }
        }
    }
    return seeds;
}

}  // namespace

TEST_CASE("extend_weak_4m2 reproduces the order-6 prototype") {
    const Partition p = extend_weak_4m2(unit_seed());
    CHECK(p == P(6, {{3, 4, 5}, {1, 2, 6}}));
}

TEST_CASE("extend_weak_4m2 on the order-4 seed") {
    const Partition p = extend_weak_4m2(seed4());
    CHECK(p == P(18, {{3, 4, 5, 15, 16, 17}, {7, 8, 9, 11, 12, 13}, {1, 2, 6, 10, 14, 18}}));
    CHECK(verify_partition(p, Kind::Weak).valid);
    CHECK(schur::testing::naive_valid(p, Kind::Weak));
    CHECK(enumerate_weak_pairs(p) == std::vector<WeakPair>{{SubsetId{3}, 1}});
}

TEST_CASE("extend_weak_13m8 reproduces the order-21 prototype") {
    const Partition p = extend_weak_13m8(unit_seed());
    CHECK(p == P(21, {{9, 10, 11, 12, 13, 14, 15, 16, 17}, {1, 2, 4, 8, 21}, {3, 5, 6, 7, 18, 19, 20}}));
}

TEST_CASE("extend_weak_13m8 on the order-4 seed") {
    const Partition p = extend_weak_13m8(seed4());
    CHECK(p.order() == 60);
    CHECK(p.subset_count() == 4);
    CHECK(p.subsets()[2] == std::vector<Element>{1, 2, 4, 8, 21, 34, 47, 60});
    CHECK(p.subsets()[3] == std::vector<Element>{3, 5, 6, 7, 18, 19, 20, 31, 32, 33, 44, 45, 46, 57, 58, 59});
    CHECK(verify_partition(p, Kind::Weak).valid);
    CHECK(schur::testing::naive_valid(p, Kind::Weak));
    CHECK(enumerate_weak_pairs(p) ==
          std::vector<WeakPair>{{SubsetId{3}, 1}, {SubsetId{3}, 2}, {SubsetId{3}, 4}, {SubsetId{4}, 3}});
}

TEST_CASE("extend_strong_3m1 examples") {
    CHECK(extend_strong_3m1(unit_seed()) == P(4, {{2, 3}, {1, 4}}, Kind::Strong));

    const Partition thirteen = extend_strong_3m1(seed4());
    CHECK(thirteen == P(13, {{2, 3, 11, 12}, {5, 6, 8, 9}, {1, 4, 7, 10, 13}}, Kind::Strong));
    CHECK(schur::testing::naive_valid(thirteen, Kind::Strong));

    Partition current = unit_seed();
    std::vector<Element> orders{current.order()};
    for (int i = 0; i < 4; ++i) {
        current = extend_strong_3m1(current);
        orders.push_back(current.order());
    }
    CHECK(orders == std::vector<Element>{1, 4, 13, 40, 121});
}

TEST_CASE("constructions refuse bad inputs") {
    const Partition not_strong = P(4, {{1, 2}, {3, 4}}, Kind::Strong);
    for (Rule rule : {Rule::Strong3m1, Rule::Weak4m2, Rule::Weak13m8}) {
        try {
            (void)apply_rule(rule, not_strong);
            FAIL("expected ConstructionError");
        } catch (const ConstructionError& e) {
            CHECK(e.reason() == ConstructionError::Reason::InputNotStrong);
            REQUIRE_FALSE(e.report().violations.empty());
            CHECK(e.report().violations.front() == Violation{SubsetId{1}, 1, 1, 2, false});
        }
        CHECK_THROWS_AS((void)apply_rule(rule, schur::testing::prototype6()), ConstructionError);
    }
    try {
        (void)extend_weak_4m2(unit_seed().with_kind(Kind::Weak));
        FAIL("expected ConstructionError");
    } catch (const ConstructionError& e) {
        CHECK(e.reason() == ConstructionError::Reason::WeakInput);
    }
}

TEST_CASE("adopted 3m+1 scheme holds on every small strong seed") {
    const auto seeds = strong_seeds();
    CHECK(seeds.size() == 326);
    for (const auto& q : seeds) {
        const Partition out = extend_strong_3m1(q);
        CHECK(out.order() == 3 * q.order() + 1);
        CHECK(out.subset_count() == q.subset_count() + 1);
        CHECK(schur::testing::naive_valid(out, Kind::Strong));
    }
}

TEST_CASE("weak constructions over every small strong seed") {
    for (const auto& q : strong_seeds()) {
        const std::size_t r = q.subset_count();
        const Element m = q.order();

        const Partition four = extend_weak_4m2(q);
        CHECK(four.order() == 4 * m + 2);
        CHECK(four.subset_count() == r + 1);
        CHECK(four.kind() == Kind::Weak);
        CHECK(schur::testing::naive_valid(four, Kind::Weak));
        CHECK(enumerate_weak_pairs(four) == std::vector<WeakPair>{{SubsetId{r + 1}, 1}});
        for (std::size_t j = 1; j <= r; ++j) {
            CHECK(check_subset(four.subset(SubsetId{j}), four.order(), Kind::Strong).empty());
        }

        const Partition thirteen = extend_weak_13m8(q);
        CHECK(thirteen.order() == 13 * m + 8);
        CHECK(thirteen.subset_count() == r + 2);
        CHECK(schur::testing::naive_valid(thirteen, Kind::Weak));
        CHECK(enumerate_weak_pairs(thirteen) == std::vector<WeakPair>{{SubsetId{r + 1}, 1},
                                                                      {SubsetId{r + 1}, 2},
                                                                      {SubsetId{r + 1}, 4},
                                                                      {SubsetId{r + 2}, 3}});
    }
}

TEST_CASE("constructions are deterministic") {
    const Partition q = extend_strong_3m1(extend_strong_3m1(seed4()));
    CHECK(format_partition(extend_weak_4m2(q)) == format_partition(extend_weak_4m2(q)));
    CHECK(format_partition(extend_weak_13m8(q)) == format_partition(extend_weak_13m8(q)));
}

TEST_CASE("run_chain") {
    SUBCASE("strong prefix then a weak step") {
        const auto chain = run_chain(unit_seed(), ChainSchedule({Rule::Strong3m1, Rule::Strong3m1, Rule::Weak4m2}));
        CHECK(chain.orders() == std::vector<Element>{1, 4, 13, 54});
        REQUIRE(chain.stages.size() == 3);
        for (const auto& stage : chain.stages) {
            CHECK(stage.report.valid);
            CHECK(stage.report.kind_checked == output_kind(stage.rule));
        }
        CHECK(chain.final().subset_count() == 4);
        CHECK(chain.final().kind() == Kind::Weak);
    }
    SUBCASE("empty schedule returns the seed") {
        const auto chain = run_chain(seed4(), ChainSchedule({}));
        CHECK(chain.stages.empty());
        CHECK(chain.final() == seed4());
    }
    SUBCASE("failing seed reports the stage") {
        try {
            (void)run_chain(P(2, {{1, 2}}, Kind::Strong), ChainSchedule({Rule::Strong3m1}));
            FAIL("expected ConstructionError");
        } catch (const ConstructionError& e) {
            CHECK(e.reason() == ConstructionError::Reason::ScheduleStage);
            CHECK(e.stage() == 1);
            CHECK_FALSE(e.report().valid);
        }
    }
}

TEST_CASE("growth ratios") {
    const auto chain = run_chain(unit_seed(), ChainSchedule({Rule::Strong3m1, Rule::Strong3m1, Rule::Strong3m1}));
    const auto ratios = growth_ratios(chain);
    REQUIRE(ratios.size() == 3);
    CHECK(ratios[0].value() == doctest::Approx(4.0));
    CHECK(ratios[1].value() == doctest::Approx(3.25));
    CHECK(ratios[2].value() == doctest::Approx(40.0 / 13.0));
    CHECK(ratios[2].from == 13);
    CHECK(ratios[2].to == 40);
    CHECK_FALSE(ratios[2].per_color.has_value());

    const auto longer = growth_ratios(run_chain(unit_seed(), ChainSchedule(std::vector<Rule>(8, Rule::Strong3m1))));
    for (std::size_t i = 1; i < longer.size(); ++i) {
        CHECK(longer[i].value() < longer[i - 1].value());
        CHECK(longer[i].value() > 3.0);
    }
    CHECK(longer.back().value() - 3.0 < 1e-3);

    const GrowthRatio big = growth_ratio(Rule::Weak13m8, 536);
    CHECK(big.to == 6976);
    CHECK(big.value() == doctest::Approx(6976.0 / 536.0));
    REQUIRE(big.per_color.has_value());
    CHECK(*big.per_color == doctest::Approx(std::sqrt(6976.0 / 536.0)));
    CHECK(*big.per_color == doctest::Approx(3.608).epsilon(1e-3));

    const auto with_13 = growth_ratios(run_chain(seed4(), ChainSchedule({Rule::Weak13m8})));
    REQUIRE(with_13.size() == 1);
    CHECK(with_13[0].per_color.has_value());

    CHECK_THROWS_AS((void)growth_ratios(run_chain(seed4(), ChainSchedule({}))), std::invalid_argument);
}
