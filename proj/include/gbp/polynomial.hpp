#pragma once

#include <cstddef>
#include <vector>

#include "gbp/rational.hpp"

namespace gbp {

// Dense univariate polynomial with exact rational coefficients, lowest degree
// first. Canonical form: no trailing zero coefficients (the zero polynomial
// has an empty coefficient vector).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);

    const std::vector<Rational>& coefficients() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coefficient(std::size_t k) const;
    Rational eval(const Rational& x) const;

    Polynomial antiderivative() const;  // zero constant term
    Polynomial scaled(const Rational& c) const;

    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

// The limit polynomials of the detection-ratio recursion. Level n is valid on
// [0, 2^-n]; the degree is 2^(n-1) - 1. Degree doubles per level, so n is
// capped (default 8, raised per call). Results are memoized per process.
inline constexpr int kLimitPolynomialDefaultCap = 8;

const Polynomial& limit_polynomial(int n, int max_n = kLimitPolynomialDefaultCap);

// phi_n(0): the m -> infinity limit of the detection ratio for fixed n.
Rational limit_constant(int n, int max_n = kLimitPolynomialDefaultCap);

Rational limit_domain_max(int n);  // 2^-n

// Domain-checked evaluation: x outside [0, 2^-n] is rejected.
Rational eval_limit_polynomial(int n, const Rational& x, int max_n = kLimitPolynomialDefaultCap);

}  // namespace gbp
