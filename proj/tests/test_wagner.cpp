#include <doctest.h>

#include <algorithm>

#include "gbp/wagner.hpp"
#include "oracles.hpp"

using namespace gbp;

namespace {

std::vector<Residue> residues(const RingContext& ring, std::initializer_list<std::int64_t> xs) {
    std::vector<Residue> out;
    for (std::int64_t x : xs) out.push_back(ring.canonical(x));
    return out;
}

Instance zero_instance(int m, int rows, int cols) {
    RingContext ring = RingContext::dyadic(m);
    return Instance{ring, rows, cols,
                    std::vector<Residue>(static_cast<std::size_t>(rows) * cols, Residue{0}), {}};
}

}  // namespace

TEST_SUITE_BEGIN("wagner");

TEST_CASE("hand-evaluated tree values, n=2, m=3") {
    RingContext ring = RingContext::dyadic(3);
    WagnerValue v = wagner_value(residues(ring, {1, -1, 2, -2}), ring);
    REQUIRE(v.has_value());
    CHECK(v->value == 0);

    CHECK_FALSE(wagner_value(residues(ring, {3, 3, 1, 1}), ring).has_value());  // -3 leaves D_2

    WagnerValue w = wagner_value(residues(ring, {4, 4, 0, 0}), ring);
    REQUIRE(w.has_value());
    CHECK(w->value == -1);
}

TEST_CASE("tree value guards") {
    RingContext ring = RingContext::dyadic(3);
    CHECK_THROWS_AS(wagner_value(residues(ring, {1, 2, 3}), ring), std::invalid_argument);
    CHECK_THROWS_AS(wagner_value(residues(RingContext::dyadic(1), {0, 0, 0, 0}),
                                 RingContext::dyadic(1)),
                    std::invalid_argument);  // n=2 > m=1
    CHECK_THROWS_AS(wagner_value(residues(RingContext(7), {1, 2}), RingContext(7)),
                    std::invalid_argument);
}

TEST_CASE("m = n is accepted; the root window is {0}") {
    RingContext ring = RingContext::dyadic(2);
    WagnerValue v = wagner_value(residues(ring, {1, -1, 2, -2}), ring);
    REQUIRE(v.has_value());
    CHECK(v->value == 0);
    CHECK_FALSE(wagner_value(residues(ring, {1, 0, 0, 0}), ring).has_value());
}

TEST_CASE("all-zero matrix: every tuple survives with value 0") {
    Instance inst = zero_instance(3, 2, 4);
    CHECK(count_wagner(inst) == 16);
    CHECK(count_wagner(inst) == count_zero(inst));
}

TEST_CASE("convolution merge equals tuple brute force") {
    Instance inst = sample_instance(3, 4, RingContext::dyadic(3), 7);
    CHECK(count_wagner(inst) == oracle::brute_count_wagner(inst));
    for (std::uint64_t seed : {11u, 12u, 13u}) {
        Instance i2 = sample_instance(4, 8, RingContext::dyadic(5), seed);
        CHECK(count_wagner(i2) == oracle::brute_count_wagner(i2));
    }
}

TEST_CASE("n=1 never filters a zero sum: W = V_0") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Instance inst = sample_instance(5, 2, RingContext::dyadic(4), seed);
        CHECK(count_wagner(inst) == count_zero(inst));
    }
}

TEST_CASE("W never exceeds V_0") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Instance inst = sample_instance(3, 4, RingContext::dyadic(4), seed);
        CHECK(count_wagner(inst) <= count_zero(inst));
    }
}

TEST_CASE("solution listing") {
    SUBCASE("all-zero instance lists every tuple") {
        SolutionList all = list_wagner_solutions(zero_instance(3, 2, 4), 100);
        CHECK(all.solutions.size() == 16);
        CHECK_FALSE(all.truncated);
        CHECK(all.solutions.front() == std::vector<int>{1, 1, 1, 1});
        CHECK(all.solutions.back() == std::vector<int>{2, 2, 2, 2});
    }

    SUBCASE("every listed tuple has tree value zero and is a zero-sum vector") {
        Instance inst = sample_instance(4, 4, RingContext::dyadic(3), 21);
        SolutionList got = list_wagner_solutions(inst, 10000);
        CHECK_FALSE(got.truncated);
        CHECK(got.solutions.size() == static_cast<std::size_t>(count_wagner(inst)));

        SolutionList zeros = list_zero_solutions(inst, 10000);
        for (const auto& sol : got.solutions) {
            std::vector<Residue> tuple;
            for (int j = 0; j < inst.cols; ++j)
                tuple.push_back(inst.entry(sol[static_cast<std::size_t>(j)] - 1, j));
            WagnerValue v = wagner_value(tuple, inst.ring);
            REQUIRE(v.has_value());
            CHECK(v->value == 0);
            CHECK(std::find(zeros.solutions.begin(), zeros.solutions.end(), sol) !=
                  zeros.solutions.end());
        }
    }

    SUBCASE("cap and truncation flag") {
        SolutionList capped = list_wagner_solutions(zero_instance(3, 2, 4), 5);
        CHECK(capped.solutions.size() == 5);
        CHECK(capped.truncated);
    }
}

TEST_SUITE_END();
