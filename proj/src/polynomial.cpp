#include "gbp/polynomial.hpp"

#include <map>
#include <mutex>
#include <stdexcept>
#include <utility>

namespace gbp {

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) {
    Polynomial p;
    if (c != 0) p.coeffs_.push_back(c);
    return p;
}

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational Polynomial::coefficient(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational(0);
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc(0);
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * x + coeffs_[k];
    return acc;
}

Polynomial Polynomial::antiderivative() const {
    std::vector<Rational> out(coeffs_.size() + 1, Rational(0));
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out[k + 1] = coeffs_[k] / Rational(static_cast<int>(k) + 1);
    return Polynomial(std::move(out));
}

Polynomial Polynomial::scaled(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& v : out) v *= c;
    return Polynomial(std::move(out));
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) + b.coefficient(k);
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
    std::vector<Rational> out(std::max(a.coeffs_.size(), b.coeffs_.size()), Rational(0));
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = a.coefficient(k) - b.coefficient(k);
    return Polynomial(std::move(out));
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Rational> out(a.coeffs_.size() + b.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) out[i + j] += a.coeffs_[i] * b.coeffs_[j];
    return Polynomial(std::move(out));
}

namespace {

// Bivariate polynomials in the integration variable t, with coefficients that
// are polynomials in x: B[k] is the x-polynomial multiplying t^k. The two
// integral terms of the recursion reduce to products, antiderivatives in t,
// and substitutions t := x or t := 2^-n - x, all inside polynomial algebra.
using Bivariate = std::vector<Polynomial>;

Bivariate in_t(const Polynomial& p) {
    Bivariate b(p.coefficients().size());
    for (std::size_t k = 0; k < p.coefficients().size(); ++k)
        b[k] = Polynomial::constant(p.coefficients()[k]);
    return b;
}

// p(x + sign*t) expanded in powers of t: the t^k coefficient is
// sum_{a >= k} c_a C(a, k) sign^k x^(a-k).
Bivariate shifted_argument(const Polynomial& p, int sign) {
    const auto& c = p.coefficients();
    std::size_t n = c.size();
    Bivariate out(n == 0 ? 1 : n);
    for (auto& q : out) q = Polynomial();
    // Pascal rows computed incrementally
    std::vector<BigInt> binom{1};
    for (std::size_t a = 0; a < n; ++a) {
        if (a > 0) {
            binom.push_back(1);
            for (std::size_t k = a - 1; k >= 1; --k) binom[k] += binom[k - 1];
        }
        if (c[a] == 0) continue;
        for (std::size_t k = 0; k <= a; ++k) {
            Rational coeff = c[a] * Rational(binom[k]);
            if (sign < 0 && (k % 2) == 1) coeff = -coeff;
            std::vector<Rational> mono(a - k + 1, Rational(0));
            mono[a - k] = coeff;
            out[k] = out[k] + Polynomial(std::move(mono));
        }
    }
    return out;
}

Bivariate multiply(const Bivariate& a, const Bivariate& b) {
    Bivariate out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    return out;
}

Bivariate antiderivative_in_t(const Bivariate& b) {
    Bivariate out(b.size() + 1);
    for (std::size_t k = 0; k < b.size(); ++k)
        out[k + 1] = b[k].scaled(Rational(1, static_cast<int>(k) + 1));
    return out;
}

// Substitute t := value(x). Horner over the t-coefficients.
Polynomial substitute_t(const Bivariate& b, const Polynomial& value) {
    Polynomial acc;
    for (std::size_t k = b.size(); k-- > 0;) acc = acc * value + b[k];
    return acc;
}

Polynomial compute_limit_polynomial(int n, const Polynomial& prev) {
    const Polynomial x_poly(std::vector<Rational>{Rational(0), Rational(1)});
    const Rational upper = Rational(1, BigInt(1) << n);  // 2^-n

    // First term: integral over u in [0, x] of prev(u) prev(x - u).
    Bivariate head = multiply(in_t(prev), shifted_argument(prev, -1));
    Polynomial term1 = substitute_t(antiderivative_in_t(head), x_poly);

    // Second term, after t = u - x: 2 * integral over t in [0, 2^-n - x] of
    // prev(t + x) prev(t).
    Bivariate tail = multiply(shifted_argument(prev, +1), in_t(prev));
    Polynomial upper_poly(std::vector<Rational>{upper, Rational(-1)});  // 2^-n - x
    Polynomial term2 = substitute_t(antiderivative_in_t(tail), upper_poly).scaled(Rational(2));

    return term1 + term2;
}

}  // namespace

const Polynomial& limit_polynomial(int n, int max_n) {
    if (n < 1) throw std::invalid_argument("limit polynomial level n must be >= 1");
    if (n > max_n)
        throw std::invalid_argument("limit polynomial level capped at n <= " +
                                    std::to_string(max_n) + " (degree doubles per level)");
    static std::map<int, Polynomial> memo;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    if (auto it = memo.find(n); it != memo.end()) return it->second;
    for (int k = 1; k <= n; ++k) {
        if (memo.contains(k)) continue;
        Polynomial value = k == 1 ? Polynomial::constant(Rational(1))
                                  : compute_limit_polynomial(k, memo.at(k - 1));
        memo.emplace(k, std::move(value));
    }
    return memo.at(n);
}

Rational limit_constant(int n, int max_n) { return limit_polynomial(n, max_n).coefficient(0); }

Rational limit_domain_max(int n) {
    if (n < 1) throw std::invalid_argument("limit polynomial level n must be >= 1");
    return Rational(1, BigInt(1) << n);
}

Rational eval_limit_polynomial(int n, const Rational& x, int max_n) {
    if (x < 0 || x > limit_domain_max(n))
        throw std::domain_error("limit polynomial evaluated outside [0, 2^-n]");
    return limit_polynomial(n, max_n).eval(x);
}

}  // namespace gbp
