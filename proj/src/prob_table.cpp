#include "gbp/prob_table.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace gbp {

namespace {

// Bound of D_k: {-bound, ..., bound}, with D_0 = {0}.
std::int64_t window_bound_of(int k) { return k == 0 ? 0 : std::int64_t{1} << (k - 1); }

void check_levels(int n, int m) {
    if (m < 1 || m > 61) throw std::invalid_argument("window exponent m must be in [1, 61]");
    if (n < 1 || n > m) throw std::invalid_argument("level n must satisfy 1 <= n <= m");
}

template <class Scalar>
Scalar scalar_inverse(std::int64_t d);

template <>
double scalar_inverse<double>(std::int64_t d) {
    return 1.0 / static_cast<double>(d);
}

template <>
Rational scalar_inverse<Rational>(std::int64_t d) {
    return Rational(1, d);
}

}  // namespace

template <class Scalar>
ProbTable<Scalar> frontier_table(int m) {
    check_levels(1, m);
    const std::int64_t modulus = (std::int64_t{1} << m) + 1;
    ProbTable<Scalar> table{m, 1, {}};
    table.values.assign(static_cast<std::size_t>(window_bound_of(m - 1)) + 1,
                        scalar_inverse<Scalar>(modulus));
    return table;
}

template <class Scalar>
ProbTable<Scalar> step_table(const ProbTable<Scalar>& prev) {
    const int m = prev.m;
    const int i = prev.level + 1;
    check_levels(i, m);

    // prev covers j = 0..2^(m-i); that is also the reflected sum's upper limit.
    const std::int64_t prev_top = static_cast<std::int64_t>(prev.values.size()) - 1;
    const std::int64_t out_top = window_bound_of(m - i);

    ProbTable<Scalar> out{m, i, {}};
    out.values.reserve(static_cast<std::size_t>(out_top) + 1);
    for (std::int64_t j = 0; j <= out_top; ++j) {
        Scalar acc{};
        for (std::int64_t k = 0; k <= j; ++k)
            acc += prev.values[static_cast<std::size_t>(k)] *
                   prev.values[static_cast<std::size_t>(j - k)];
        Scalar reflected{};
        for (std::int64_t k = j + 1; k <= prev_top; ++k)
            reflected += prev.values[static_cast<std::size_t>(k)] *
                         prev.values[static_cast<std::size_t>(k - j)];
        acc += reflected + reflected;
        out.values.push_back(acc);
    }
    return out;
}

template <class Scalar>
Scalar survival_mass(const ProbTable<Scalar>& table) {
    Scalar tail{};
    for (std::size_t j = 1; j < table.values.size(); ++j) tail += table.values[j];
    return table.values[0] + tail + tail;
}

namespace {

template <class Scalar>
Scalar success_probability_impl(int n, int m) {
    check_levels(n, m);
    ProbTable<Scalar> table = frontier_table<Scalar>(m);
    for (int i = 2; i <= n; ++i) table = step_table(table);
    return table.values[0];
}

}  // namespace

double success_probability(int n, int m) {
    check_levels(n, m);
    if (m > kFloatModeMaxM)
        throw std::invalid_argument("float mode supports m <= " + std::to_string(kFloatModeMaxM));
    return success_probability_impl<double>(n, m);
}

double detection_ratio(int n, int m) {
    return static_cast<double>((std::int64_t{1} << m) + 1) * success_probability(n, m);
}

Rational success_probability_exact(int n, int m, const ExactLimits& limits) {
    check_levels(n, m);
    if (n > limits.max_n || m > limits.max_m)
        throw std::invalid_argument("exact mode capped at n <= " + std::to_string(limits.max_n) +
                                    ", m <= " + std::to_string(limits.max_m));
    return success_probability_impl<Rational>(n, m);
}

Rational detection_ratio_exact(int n, int m, const ExactLimits& limits) {
    return Rational((std::int64_t{1} << m) + 1) * success_probability_exact(n, m, limits);
}

namespace {

double finite_or_throw(const Rational& value, const char* what) {
    double v = to_double(value);
    if (!std::isfinite(v)) throw std::overflow_error(what);
    return v;
}

BigInt big_power_count(std::int64_t L, int N) {
    if (L < 2) throw std::invalid_argument("L must be >= 2");
    if (N < 2) throw std::invalid_argument("N must be >= 2");
    return big_pow(BigInt(L), static_cast<unsigned>(N));
}

}  // namespace

Rational expected_zero_sums_exact(std::int64_t L, int N, const BigInt& M) {
    if (M < 2) throw std::invalid_argument("M must be >= 2");
    return Rational(big_power_count(L, N), M);
}

double expected_zero_sums(std::int64_t L, int N, const BigInt& M) {
    return finite_or_throw(expected_zero_sums_exact(L, N, M),
                           "mu = L^N / M does not fit a double");
}

Rational expected_wagner_solutions_exact(std::int64_t L, int n, int m,
                                         const ExactLimits& limits) {
    if (n < 1 || n > 30) throw std::invalid_argument("n must be in [1, 30]");
    return Rational(big_power_count(L, 1 << n)) * success_probability_exact(n, m, limits);
}

double expected_wagner_solutions(std::int64_t L, int n, int m) {
    if (n < 1 || n > 30) throw std::invalid_argument("n must be in [1, 30]");
    // exact big-integer product with the float-mode probability, rounded once
    Rational lam = Rational(big_power_count(L, 1 << n)) * Rational(success_probability(n, m));
    return finite_or_throw(lam, "lambda = L^N * p does not fit a double");
}

void write_table_csv(std::ostream& out, const ProbTable<double>& table) {
    out << "i,j,p\n";
    char buf[64];
    for (std::size_t j = 0; j < table.values.size(); ++j) {
        std::snprintf(buf, sizeof(buf), "%.12g", table.values[j]);
        out << table.level << ',' << j << ',' << buf << '\n';
    }
}

void write_table_csv(std::ostream& out, const ProbTable<Rational>& table) {
    out << "i,j,p\n";
    for (std::size_t j = 0; j < table.values.size(); ++j)
        out << table.level << ',' << j << ',' << to_fraction_string(table.values[j]) << '\n';
}

template ProbTable<double> frontier_table<double>(int);
template ProbTable<Rational> frontier_table<Rational>(int);
template ProbTable<double> step_table<double>(const ProbTable<double>&);
template ProbTable<Rational> step_table<Rational>(const ProbTable<Rational>&);
template double survival_mass<double>(const ProbTable<double>&);
template Rational survival_mass<Rational>(const ProbTable<Rational>&);

}  // namespace gbp
