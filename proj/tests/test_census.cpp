#include <doctest.h>

#include "gbp/census.hpp"
#include "oracles.hpp"

using namespace gbp;

namespace {

Instance make_instance(std::int64_t modulus, const std::vector<std::vector<std::int64_t>>& rows) {
    RingContext ring(modulus);
    Instance inst{ring, static_cast<int>(rows.size()), static_cast<int>(rows[0].size()), {}, {}};
    for (const auto& row : rows)
        for (std::int64_t v : row) inst.entries.push_back(ring.canonical(v));
    return inst;
}

Instance zero_instance(std::int64_t modulus, int rows, int cols) {
    RingContext ring(modulus);
    return Instance{ring, rows, cols,
                    std::vector<Residue>(static_cast<std::size_t>(rows) * cols, Residue{0}), {}};
}

}  // namespace

TEST_SUITE_BEGIN("exhaustive");

TEST_CASE("hand census: M=3, columns (0,2) and (1,2)") {
    // tuple sums: 0+1, 0+2, 2+1, 2+2 -> 1, 2, 0, 1
    Instance inst = make_instance(3, {{0, 1}, {2, 2}});
    Census c = census(inst);
    CHECK(c.zero_count() == 1);
    CHECK(c.at(Residue{1}) == 2);
    CHECK(c.at(Residue{-1}) == 1);
    CHECK(c.total == 4);
}

TEST_CASE("all-zero matrix concentrates the census at zero") {
    Instance inst = zero_instance(7, 3, 4);
    Census c = census(inst);
    CHECK(c.zero_count() == 81);
    for (std::int64_t b = inst.ring.window_min(); b <= inst.ring.window_max(); ++b)
        if (b != 0) CHECK(c.at(Residue{b}) == 0);
}

TEST_CASE("census equals tuple-by-tuple brute force") {
    for (std::uint64_t seed : {1u, 2u, 3u, 7u, 42u}) {
        Instance inst = sample_instance(3, 4, RingContext(9), seed);
        Census c = census(inst);
        auto brute = oracle::brute_census(inst);
        for (std::int64_t b = inst.ring.window_min(); b <= inst.ring.window_max(); ++b) {
            std::uint64_t expected = brute.count(b) ? brute.at(b) : 0;
            CHECK(c.at(Residue{b}) == expected);
        }
    }
}

TEST_CASE("counts sum to L^N and survive row permutations within a column") {
    Instance inst = sample_instance(5, 3, RingContext(11), 8);
    Census c = census(inst);
    u128 sum = 0;
    for (u128 v : c.counts) sum += v;
    CHECK(sum == c.total);

    // swap two rows in column 1
    Instance permuted = inst;
    std::swap(permuted.entries[0 * 3 + 1], permuted.entries[3 * 3 + 1]);
    Census cp = census(permuted);
    CHECK(cp.counts == c.counts);
}

TEST_CASE("count_zero shortcut and seeded oracle case") {
    CHECK(count_zero(zero_instance(5, 2, 4)) == 16);
    CHECK(count_zero(make_instance(3, {{0, 1}, {2, 2}})) == 1);
    Instance inst = sample_instance(4, 4, RingContext(9), 42);
    CHECK(count_zero(inst) == oracle::brute_count_zero(inst));
}

TEST_CASE("overflow guard raises a structured error") {
    Instance inst = zero_instance(3, 4, 64);  // 4^64 = 2^128 exceeds the counter
    CHECK_THROWS_AS(census(inst), std::overflow_error);
}

TEST_CASE("zero-solution listing") {
    Instance inst = make_instance(3, {{0, 1}, {2, 2}});
    SolutionList got = list_zero_solutions(inst, 10);
    REQUIRE(got.solutions.size() == 1);
    CHECK(got.solutions[0] == std::vector<int>{2, 1});
    CHECK_FALSE(got.truncated);

    SUBCASE("cap truncates and reports it") {
        SolutionList capped = list_zero_solutions(zero_instance(5, 2, 2), 2);
        CHECK(capped.solutions.size() == 2);
        CHECK(capped.truncated);
        CHECK(capped.solutions[0] == std::vector<int>{1, 1});
        CHECK(capped.solutions[1] == std::vector<int>{1, 2});
    }

    SUBCASE("every listed vector satisfies the zero-sum predicate") {
        Instance random_inst = sample_instance(4, 4, RingContext(9), 5);
        SolutionList all = list_zero_solutions(random_inst, 10000);
        CHECK_FALSE(all.truncated);
        CHECK(all.solutions.size() == static_cast<std::size_t>(count_zero(random_inst)));
        for (const auto& sol : all.solutions) {
            Residue sum{0};
            for (int j = 0; j < random_inst.cols; ++j)
                sum = random_inst.ring.add(sum,
                                           random_inst.entry(sol[static_cast<std::size_t>(j)] - 1, j));
            CHECK(sum.value == 0);
        }
    }
}

TEST_SUITE_END();
