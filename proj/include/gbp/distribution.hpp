#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "gbp/instance.hpp"
#include "gbp/prob_table.hpp"
#include "gbp/rational.hpp"

namespace gbp {

enum class Statistic { ZeroSums, WagnerSolutions };

// Finite distribution over non-negative integer counts. Weights are exact
// rationals in both modes: occurrence/total for enumerations and
// frequency/replicates for empirical data.
struct CountDistribution {
    enum class Kind { Exact, Empirical };
    Kind kind = Kind::Exact;
    std::vector<std::pair<std::uint64_t, Rational>> weights;  // ascending k, sums to 1
    std::uint64_t sample_size = 0;                            // replicates; 0 in exact mode

    Rational weight(std::uint64_t k) const;
    Rational mean_exact() const;
    double mean() const { return to_double(mean_exact()); }
    std::uint64_t max_support() const { return weights.empty() ? 0 : weights.back().first; }
};

// sum_k |P(Z = k) - pois_zeta(k)|. The Poisson tail is truncated once its
// remaining mass falls below 1e-15 and that mass is added to the result, so
// the returned value is an upper bound of the infinite sum.
double l1_poisson(const CountDistribution& dist, double zeta);

// The two explicit Poisson-approximation error bounds: 4(1 - e^-mu)/M for the
// zero-sum count and 8(1 - e^-lambda) mu N / L for the detected-solution count
// (the latter requires m > n).
double chen_stein_bound_zero_sums(std::int64_t L, int N, const BigInt& M);
double chen_stein_bound_wagner(std::int64_t L, int n, int m);

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

// Exact distribution of the statistic over all M^(L*N) equally weighted
// matrices, by full enumeration with a per-matrix brute-force tuple scan.
// Rejected when M^(L*N) exceeds the budget.
CountDistribution exact_distribution(int L, int N, const RingContext& ring, Statistic stat,
                                     std::uint64_t budget = kDefaultEnumerationBudget);

// Injective per-replicate seed derivation: SplitMix64 finalizer applied to
// seed + odd_constant * (index + 1). Replicates are independent of evaluation
// order and thread count.
std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t index);

struct MonteCarloSummary {
    double mean = 0;
    double variance = 0;   // unbiased sample variance
    double std_error = 0;  // sqrt(variance / replicates)
    std::uint64_t replicates = 0;
};

struct MonteCarloResult {
    CountDistribution distribution;
    MonteCarloSummary summary;
};

// Seeded replicated sampling of the statistic through the production counting
// paths. Deterministic for a given seed regardless of `threads`.
MonteCarloResult monte_carlo(int L, int N, const RingContext& ring, Statistic stat,
                             std::uint64_t replicates, std::uint64_t seed, int threads = 1);

}  // namespace gbp
