#include <doctest.h>

#include <cmath>

#include "gbp/prob_table.hpp"
#include "gbp/wagner.hpp"
#include "oracles.hpp"

using namespace gbp;

TEST_SUITE_BEGIN("recursion");

TEST_CASE("frontier is constant 1/(2^m + 1)") {
    // stored half j = 0..2^(m-2); the mirrored logical window has 2^(m-1)+1 entries
    auto t3 = frontier_table<Rational>(3);
    REQUIRE(t3.values.size() == 3);
    for (const auto& v : t3.values) CHECK(v == Rational(1, 9));

    auto t2 = frontier_table<Rational>(2);
    REQUIRE(t2.values.size() == 2);
    CHECK(t2.values[0] == Rational(1, 5));
    CHECK(t2.values[1] == Rational(1, 5));

    auto f3 = frontier_table<double>(3);
    for (double v : f3.values) CHECK(v == doctest::Approx(1.0 / 9.0).epsilon(1e-15));
}

TEST_CASE("one step from the frontier: p_{2,3}") {
    auto level2 = step_table(frontier_table<Rational>(3));
    REQUIRE(level2.values.size() == 2);
    CHECK(level2.values[0] == Rational(5, 81));
    CHECK(level2.values[1] == Rational(4, 81));
}

TEST_CASE("stepping past the root level is rejected") {
    auto t = frontier_table<Rational>(2);  // m=2, level 1
    auto root = step_table(t);             // level 2 = m: allowed, root only
    REQUIRE(root.values.size() == 1);
    CHECK(root.values[0] == Rational(3, 25));
    CHECK_THROWS_AS(step_table(root), std::invalid_argument);
}

TEST_CASE("float and exact modes agree after three steps at m=8") {
    auto exact = frontier_table<Rational>(8);
    auto approx = frontier_table<double>(8);
    for (int i = 0; i < 3; ++i) {
        exact = step_table(exact);
        approx = step_table(approx);
    }
    REQUIRE(exact.values.size() == approx.values.size());
    for (std::size_t j = 0; j < exact.values.size(); ++j)
        CHECK(std::abs(to_double(exact.values[j]) - approx.values[j]) < 1e-12);
}

TEST_CASE("success probability values") {
    for (int m = 2; m <= 10; ++m)
        CHECK(success_probability_exact(1, m) == Rational(1, (std::int64_t{1} << m) + 1));
    CHECK(success_probability_exact(2, 3) == Rational(5, 81));
    SUBCASE("closed form for two levels") {
        for (int m = 2; m <= 10; ++m) {
            std::int64_t M = (std::int64_t{1} << m) + 1;
            Rational expected((std::int64_t{1} << (m - 1)) + 1, M * M);
            CHECK(success_probability_exact(2, m) == expected);
        }
    }
}

TEST_CASE("detection ratio values") {
    ExactLimits wide{4, 14};
    for (int m = 2; m <= 14; ++m) CHECK(detection_ratio_exact(1, m, wide) == Rational(1));
    CHECK(detection_ratio_exact(2, 3) == Rational(5, 9));
    CHECK(detection_ratio_exact(2, 5) == Rational(17, 33));
    CHECK(detection_ratio(1, 9) == doctest::Approx(1.0).epsilon(1e-14));
    SUBCASE("n = m is admitted (root window D_0)") {
        CHECK(detection_ratio_exact(2, 2) == Rational(3, 5));
    }
    SUBCASE("domain and mode guards") {
        CHECK_THROWS_AS(detection_ratio_exact(3, 2), std::invalid_argument);
        CHECK_THROWS_AS(detection_ratio_exact(5, 9), std::invalid_argument);  // default cap n<=4
        CHECK_THROWS_AS(detection_ratio_exact(2, 11), std::invalid_argument); // default cap m<=10
        CHECK_THROWS_AS(success_probability(2, kFloatModeMaxM + 1), std::invalid_argument);
    }
}

TEST_CASE("stored half-table matches the defining full-window recursion") {
    for (int m = 3; m <= 8; ++m) {
        int n = std::min(4, m);
        auto full = oracle::full_window_tables(n, m);
        auto table = frontier_table<Rational>(m);
        for (int level = 1; level <= n; ++level) {
            if (level > 1) table = step_table(table);
            const auto& reference = full[static_cast<std::size_t>(level - 1)];
            for (std::size_t j = 0; j < table.values.size(); ++j) {
                CHECK(table.values[j] == reference.at(static_cast<std::int64_t>(j)));
                // symmetry of the definition
                if (j > 0)
                    CHECK(reference.at(-static_cast<std::int64_t>(j)) ==
                          reference.at(static_cast<std::int64_t>(j)));
            }
        }
    }
}

TEST_CASE("survival mass decreases strictly with the level") {
    for (int m = 3; m <= 8; ++m) {
        auto table = frontier_table<Rational>(m);
        Rational prev = survival_mass(table);
        CHECK(prev > 0);
        CHECK(prev <= 1);
        for (int level = 2; level <= std::min(4, m); ++level) {
            table = step_table(table);
            Rational mass = survival_mass(table);
            CHECK(mass < prev);
            CHECK(mass > 0);
            prev = mass;
        }
    }
}

TEST_CASE("exact denominators divide (2^m + 1)^(2^(n-1))") {
    for (int n = 2; n <= 3; ++n)
        for (int m = n + 1; m <= 8; ++m) {
            Rational p = success_probability_exact(n, m);
            BigInt full = big_pow(BigInt((std::int64_t{1} << m) + 1), 1u << (n - 1));
            CHECK(full % denominator(p) == 0);
        }
}

TEST_CASE("Monte Carlo tuple frequencies match the table") {
    // frequencies of {tree value = j} over uniform random tuples
    for (int n : {2, 3}) {
        for (int m : {4, 5}) {
            RingContext ring = RingContext::dyadic(m);
            auto table = frontier_table<double>(m);
            for (int i = 2; i <= n; ++i) table = step_table(table);

            const int samples = 100000;
            Instance pool = sample_instance(samples, 1 << n, ring, 777u + static_cast<unsigned>(10 * n + m));
            std::vector<std::int64_t> hits(table.values.size(), 0);
            std::vector<Residue> tuple(static_cast<std::size_t>(1) << n);
            for (int s = 0; s < samples; ++s) {
                for (int j = 0; j < (1 << n); ++j) tuple[static_cast<std::size_t>(j)] = pool.entry(s, j);
                WagnerValue v = wagner_value(tuple, ring);
                if (v) ++hits[static_cast<std::size_t>(std::abs(v->value))];
            }
            for (std::size_t j = 0; j < table.values.size(); ++j) {
                // j and -j pool together; the table stores the j >= 0 half
                double p = table.values[j] * (j == 0 ? 1.0 : 2.0);
                double sd = std::sqrt(samples * p * (1 - p));
                CHECK(std::abs(static_cast<double>(hits[j]) - samples * p) <= 5 * sd);
            }
        }
    }
}

TEST_CASE("expected counts") {
    CHECK(expected_zero_sums(1000, 16, big_pow(BigInt(10), 45)) == 1000.0);
    CHECK(expected_zero_sums_exact(2, 2, BigInt(3)) == Rational(4, 3));
    CHECK(expected_wagner_solutions_exact(2, 2, 3) == Rational(80, 81));
    CHECK(expected_wagner_solutions(2, 2, 3) == doctest::Approx(80.0 / 81.0).epsilon(1e-14));
    CHECK_THROWS_AS(expected_zero_sums(1000, 200, BigInt(3)), std::overflow_error);
}

TEST_SUITE_END();
