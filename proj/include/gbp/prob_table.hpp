#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "gbp/rational.hpp"

namespace gbp {

// One level of the survival-probability recursion. values[j] holds the
// probability that a level-`level` subtree value equals j, for
// j = 0..2^(m-level-1); negative arguments mirror by symmetry. level == m is
// the root-only table with the single entry j = 0.
template <class Scalar>
struct ProbTable {
    int m = 0;
    int level = 0;
    std::vector<Scalar> values;
};

// Level-1 table: constant 1/(2^m + 1) across the whole window.
template <class Scalar>
ProbTable<Scalar> frontier_table(int m);

// One application of the convolution-with-reflection recursion, level i-1 -> i.
// Stepping past level m is rejected.
template <class Scalar>
ProbTable<Scalar> step_table(const ProbTable<Scalar>& prev);

// Total surviving probability mass of a level: p(0) + 2 * sum_{j>=1} p(j).
template <class Scalar>
Scalar survival_mass(const ProbTable<Scalar>& table);

// Probability that a uniform random tuple survives all n levels with root
// value zero. Valid for 1 <= n <= m (n = m uses the root window D_0 = {0}).
double success_probability(int n, int m);

// Conditional probability that a zero-sum vector is also detected by the tree
// algorithm: (2^m + 1) * success probability.
double detection_ratio(int n, int m);

// Work caps for rational mode; callers may raise them explicitly.
struct ExactLimits {
    int max_n = 4;
    int max_m = 10;
};

Rational success_probability_exact(int n, int m, const ExactLimits& limits = {});
Rational detection_ratio_exact(int n, int m, const ExactLimits& limits = {});

// Float mode keeps the direct O(4^m) recursion practical; larger m is rejected.
inline constexpr int kFloatModeMaxM = 16;

// Expected number of zero-sum vectors, mu = L^N / M. Evaluated through exact
// big-integer arithmetic and rounded once; non-finite results are rejected.
double expected_zero_sums(std::int64_t L, int N, const BigInt& M);
Rational expected_zero_sums_exact(std::int64_t L, int N, const BigInt& M);

// Expected number of detected solutions, lambda = L^N * p_{n,m}.
double expected_wagner_solutions(std::int64_t L, int n, int m);
Rational expected_wagner_solutions_exact(std::int64_t L, int n, int m,
                                         const ExactLimits& limits = {});

// CSV export with columns i,j,p; rational values print as num/den.
void write_table_csv(std::ostream& out, const ProbTable<double>& table);
void write_table_csv(std::ostream& out, const ProbTable<Rational>& table);

}  // namespace gbp
