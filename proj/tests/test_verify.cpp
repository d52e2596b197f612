#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <map>
#include <random>

#include "schur/verify.hpp"
#include "test_support.hpp"

using namespace schur;
using schur::testing::P;

namespace {

std::vector<Element> random_subset(std::mt19937_64& rng, Element bound, std::size_t max_size) {
    const std::size_t size = std::uniform_int_distribution<std::size_t>(1, max_size)(rng);
    std::vector<Element> out;
    std::uniform_int_distribution<Element> pick(1, bound);
    while (out.size() < size) {
        const Element x = pick(rng);
        if (std::find(out.begin(), out.end(), x) == out.end()) {
            out.push_back(x);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Triples found by a direct scan, in (a, b) order.
std::vector<Violation> scan_triples(const std::vector<Element>& s, Kind kind) {
    std::vector<Violation> out;
    for (std::size_t i = 0; i < s.size(); ++i) {
        for (std::size_t j = i; j < s.size(); ++j) {
            if (i == j && kind == Kind::Weak) {
                continue;
            }
            if (std::binary_search(s.begin(), s.end(), s[i] + s[j])) {
                out.push_back({SubsetId{1}, s[i], s[j], s[i] + s[j], i != j});
            }
        }
    }
    return out;
}

}  // namespace

TEST_CASE("check_subset examples") {
    CHECK(check_subset(std::vector<Element>{1, 2, 6}, 6, Kind::Weak).empty());

    const auto v = check_subset(std::vector<Element>{1, 2, 3}, 3, Kind::Weak);
    REQUIRE(v.size() == 1);
    CHECK(v[0] == Violation{SubsetId{1}, 1, 2, 3, true});

    const auto strong = check_subset(std::vector<Element>{2, 4}, 4, Kind::Strong);
    REQUIRE(strong.size() == 1);
    CHECK(strong[0] == Violation{SubsetId{1}, 2, 2, 4, false});
    CHECK(check_subset(std::vector<Element>{2, 4}, 4, Kind::Weak).empty());

    CHECK(check_subset(std::vector<Element>{3, 4, 5}, 6, Kind::Strong).empty());
}

TEST_CASE("check_subset reports every triple in (a, b) order") {
    const std::vector<Element> s{1, 2, 3, 4, 5};
    const auto v = check_subset(s, 5, Kind::Strong, SubsetId{7});
    const std::vector<std::array<Element, 3>> expected{{1, 1, 2}, {1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {2, 2, 4}, {2, 3, 5}};
    REQUIRE(v.size() == expected.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        CHECK(v[i].subset == SubsetId{7});
        CHECK(v[i].a == expected[i][0]);
        CHECK(v[i].b == expected[i][1]);
        CHECK(v[i].c == expected[i][2]);
        CHECK(v[i].distinct == (v[i].a != v[i].b));
    }
}

TEST_CASE("check_subset handles word boundaries") {
    // Sums straddling 64-bit words.
    const std::vector<Element> s{1, 63, 64, 65, 127, 128, 191, 192};
    std::mt19937_64 rng(7);
    CHECK(check_subset(s, 200, Kind::Weak).size() == scan_triples(s, Kind::Weak).size());
    for (int trial = 0; trial < 500; ++trial) {
        const auto subset = random_subset(rng, 400, 40);
        for (Kind kind : {Kind::Weak, Kind::Strong}) {
            const auto got = check_subset(subset, 400, kind);
            const auto want = scan_triples(subset, kind);
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
                CHECK(got[i] == want[i]);
            }
        }
    }
}

TEST_CASE("check_subset rejects precondition failures") {
    CHECK_THROWS_AS((void)check_subset(std::vector<Element>{2, 1}, 5, Kind::Weak), std::invalid_argument);
    CHECK_THROWS_AS((void)check_subset(std::vector<Element>{1, 9}, 5, Kind::Weak), std::invalid_argument);
    CHECK_THROWS_AS((void)check_subset(std::vector<Element>{0, 1}, 5, Kind::Weak), std::invalid_argument);
}

TEST_CASE("verify_partition on the prototypes") {
    CHECK(verify_partition(schur::testing::prototype6(), Kind::Weak).valid);
    CHECK(verify_partition(schur::testing::prototype21(), Kind::Weak).valid);

    const auto report = verify_partition(schur::testing::prototype6(), Kind::Strong);
    CHECK_FALSE(report.valid);
    CHECK(report.kind_checked == Kind::Strong);
    REQUIRE(report.violations.size() == 1);
    CHECK(report.violations[0] == Violation{SubsetId{1}, 1, 1, 2, false});
    CHECK(report.coverage_defects.empty());
}

TEST_CASE("verify_partition collects violations from every subset") {
    const Partition p = P(9, {{1, 2, 3}, {4, 5, 9}, {6, 7, 8}});
    const auto report = verify_partition(p, Kind::Weak);
    CHECK_FALSE(report.valid);
    REQUIRE(report.violations.size() == 2);
    CHECK(report.violations[0] == Violation{SubsetId{1}, 1, 2, 3, true});
    CHECK(report.violations[1] == Violation{SubsetId{2}, 4, 5, 9, true});
}

TEST_CASE("verify_subsets reports coverage defects") {
    const auto report = verify_subsets(7, {{1, 2, 6, 9}, {3, 4, 5, 4}}, Kind::Weak);
    CHECK_FALSE(report.valid);
    const std::vector<CoverageDefect> expected{{CoverageDefect::Type::OutOfRange, 9},
                                               {CoverageDefect::Type::Duplicate, 4},
                                               {CoverageDefect::Type::Missing, 7}};
    CHECK(report.coverage_defects == expected);
    CHECK(report.violations.empty());

    CHECK(verify_subsets(6, {{3, 4, 5}, {6, 2, 1}}, Kind::Weak).valid);
}

TEST_CASE("enumerate_weak_pairs") {
    const auto six = enumerate_weak_pairs(schur::testing::prototype6());
    CHECK(six == std::vector<WeakPair>{{SubsetId{1}, 1}});

    const auto twenty_one = enumerate_weak_pairs(schur::testing::prototype21());
    CHECK(twenty_one == std::vector<WeakPair>{{SubsetId{1}, 1}, {SubsetId{1}, 2}, {SubsetId{1}, 4}, {SubsetId{2}, 3}});

    CHECK(enumerate_weak_pairs(P(2, {{1}, {2}})).empty());
}

TEST_CASE("brute_force_check") {
    CHECK(brute_force_check(std::vector<Element>{1, 2, 6}, Kind::Weak));
    CHECK_FALSE(brute_force_check(std::vector<Element>{1, 2, 3}, Kind::Weak));
    CHECK(brute_force_check(std::vector<Element>{2, 4}, Kind::Weak));
    CHECK_FALSE(brute_force_check(std::vector<Element>{4, 2}, Kind::Strong));
    std::vector<Element> big(kBruteForceLimit + 1);
    std::iota(big.begin(), big.end(), 1);
    CHECK_THROWS_AS((void)brute_force_check(big, Kind::Weak), std::length_error);
}

TEST_CASE("check_subset agrees with brute_force_check on random subsets") {
    std::mt19937_64 rng(1917);
    for (int trial = 0; trial < 2000; ++trial) {
        const auto subset = random_subset(rng, 1000, 100);
        for (Kind kind : {Kind::Weak, Kind::Strong}) {
            CHECK(check_subset(subset, 1000, kind).empty() == brute_force_check(subset, kind));
        }
    }
}

TEST_CASE("strong validity implies weak validity") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 300; ++trial) {
        const Element n = std::uniform_int_distribution<Element>(4, 60)(rng);
        const std::size_t r = std::uniform_int_distribution<std::size_t>(2, 4)(rng);
        std::vector<std::vector<Element>> subsets(r);
        for (Element x = 1; x <= n; ++x) {
            subsets[x <= static_cast<Element>(r) ? static_cast<std::size_t>(x - 1)
                                                 : std::uniform_int_distribution<std::size_t>(0, r - 1)(rng)]
                .push_back(x);
        }
        const Partition p = make_partition(n, subsets, Kind::Weak);
        const auto strong = verify_partition(p, Kind::Strong);
        const auto weak = verify_partition(p, Kind::Weak);
        if (strong.valid) {
            CHECK(weak.valid);
        }
        // Strong violations are the weak ones plus the a = b cases.
        std::vector<Violation> distinct_only;
        std::copy_if(strong.violations.begin(), strong.violations.end(), std::back_inserter(distinct_only),
                     [](const Violation& v) { return v.distinct; });
        CHECK(distinct_only == weak.violations);
        CHECK(weak.valid == schur::testing::naive_valid(p, Kind::Weak));
        CHECK(strong.valid == schur::testing::naive_valid(p, Kind::Strong));

        // Reordering subsets relabels violations but keeps the verdict and per-subset counts.
        std::vector<std::size_t> order(r);
        std::iota(order.begin(), order.end(), 0);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<std::vector<Element>> permuted;
        for (std::size_t j : order) {
            permuted.push_back(subsets[j]);
        }
        const auto again = verify_partition(make_partition(n, permuted, Kind::Weak), Kind::Strong);
        CHECK(again.valid == strong.valid);
        std::map<std::size_t, std::size_t> before;
        std::map<std::size_t, std::size_t> after;
        for (const auto& v : strong.violations) {
            ++before[v.subset.index];
        }
        for (const auto& v : again.violations) {
            ++after[order[v.subset.offset()] + 1];
        }
        CHECK(before == after);
    }
}

TEST_CASE("a weak pair is a strong violation only") {
    for (Element a = 1; a <= 50; ++a) {
        const std::vector<Element> s{a, 2 * a};
        const auto strong = check_subset(s, 2 * a, Kind::Strong);
        REQUIRE(strong.size() == 1);
        CHECK_FALSE(strong[0].distinct);
        CHECK(strong[0].a == a);
        CHECK(check_subset(s, 2 * a, Kind::Weak).empty());
    }
}
