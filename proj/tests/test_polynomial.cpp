#include <doctest.h>

#include <cmath>

#include "gbp/polynomial.hpp"
#include "oracles.hpp"

using namespace gbp;

namespace {

Polynomial poly(std::initializer_list<Rational> coeffs) {
    return Polynomial(std::vector<Rational>(coeffs));
}

}  // namespace

TEST_SUITE_BEGIN("limitpoly");

TEST_CASE("polynomial arithmetic") {
    Polynomial one_plus_x = poly({1, 1});
    Polynomial one_minus_x = poly({1, -1});
    CHECK(one_plus_x * one_minus_x == poly({1, 0, -1}));

    CHECK(poly({0, 2}).antiderivative() == poly({0, 0, 1}));
    CHECK(poly({Rational(1, 2), -1}).eval(Rational(1, 4)) == Rational(1, 4));

    SUBCASE("canonical form trims trailing zeros") {
        CHECK(poly({1, 1}) - poly({0, 1}) == poly({1}));
        CHECK((poly({1}) - poly({1})).is_zero());
        CHECK(poly({1}).degree() == 0);
        CHECK(Polynomial().degree() == -1);
    }
    SUBCASE("antiderivative has zero constant term") {
        CHECK(poly({3, 2, 1}).antiderivative().coefficient(0) == 0);
    }
}

TEST_CASE("first limit polynomials") {
    CHECK(limit_polynomial(1) == poly({1}));
    CHECK(limit_polynomial(2) == poly({Rational(1, 2), -1}));
    CHECK(limit_constant(3) == Rational(37, 768));
    // full phi_3, cross-checked symbolically
    CHECK(limit_polynomial(3) ==
          poly({Rational(37, 768), Rational(-9, 64), Rational(-1, 2), Rational(1, 2)}));
}

TEST_CASE("limit constants") {
    CHECK(limit_constant(1) == Rational(1));
    CHECK(limit_constant(2) == Rational(1, 2));
    CHECK(limit_constant(4) == Rational(4397909, BigInt("18790481920")));
    CHECK(limit_constant(4) < Rational(1, 1000));
    CHECK(limit_constant(5) ==
          Rational(BigInt("217664688985824483815891"),
                   BigInt("79170738537832642707745406976000")));
}

TEST_CASE("degree doubles: deg phi_n = 2^(n-1) - 1") {
    for (int n = 1; n <= 6; ++n)
        CHECK(limit_polynomial(n).degree() == (1 << (n - 1)) - 1);
}

TEST_CASE("phi_n is non-negative on its domain") {
    for (int n = 1; n <= 6; ++n) {
        const Polynomial& p = limit_polynomial(n);
        Rational hi = limit_domain_max(n);
        for (int k = 0; k <= 1024; ++k)
            CHECK(p.eval(hi * Rational(k, 1024)) >= 0);
    }
}

TEST_CASE("phi_n(0) equals the direct square integral, exactly") {
    for (int n = 2; n <= 6; ++n) {
        const Polynomial& prev = limit_polynomial(n - 1);
        Polynomial square_integral = (prev * prev).antiderivative();
        Rational direct = Rational(2) * square_integral.eval(limit_domain_max(n));
        CHECK(limit_constant(n) == direct);
    }
}

TEST_CASE("independent quadrature of the recursion matches the polynomials") {
    // one numeric integration step over the symbolic predecessor, 16 points
    for (int n = 2; n <= 5; ++n) {
        double hi = std::ldexp(1.0, -n);
        for (int k = 0; k < 16; ++k) {
            double x = hi * static_cast<double>(k) / 15.0;
            double numeric = oracle::phi_numeric(n, x, /*nested=*/false);
            double symbolic = to_double(limit_polynomial(n).eval(Rational(x)));
            CHECK(std::abs(numeric - symbolic) < 1e-10);
        }
    }
}

TEST_CASE("fully nested quadrature agrees for small n") {
    CHECK(std::abs(oracle::phi_numeric(2, 0.0, true) - 0.5) < 1e-10);
    CHECK(std::abs(oracle::phi_numeric(3, 0.0, true) - 37.0 / 768.0) < 1e-10);
}

TEST_CASE("cap and domain guards") {
    CHECK_THROWS_AS(limit_polynomial(9), std::invalid_argument);          // default cap
    CHECK_NOTHROW(limit_polynomial(3, 3));                                // explicit cap
    CHECK_THROWS_AS(limit_polynomial(4, 3), std::invalid_argument);
    CHECK_THROWS_AS(limit_polynomial(0), std::invalid_argument);
    CHECK_THROWS_AS(eval_limit_polynomial(2, Rational(1, 2)), std::domain_error);
    CHECK_THROWS_AS(eval_limit_polynomial(2, Rational(-1, 100)), std::domain_error);
    CHECK(eval_limit_polynomial(2, Rational(1, 4)) == Rational(1, 4));
}

TEST_SUITE_END();
