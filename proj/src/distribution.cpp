#include "gbp/distribution.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <map>
#include <thread>

#include "gbp/census.hpp"
#include "gbp/poisson.hpp"
#include "gbp/wagner.hpp"

namespace gbp {

Rational CountDistribution::weight(std::uint64_t k) const {
    for (const auto& [key, w] : weights)
        if (key == k) return w;
    return Rational(0);
}

Rational CountDistribution::mean_exact() const {
    Rational acc(0);
    for (const auto& [k, w] : weights) acc += Rational(BigInt(k)) * w;
    return acc;
}

double l1_poisson(const CountDistribution& dist, double zeta) {
    if (!(zeta >= 0)) throw std::invalid_argument("Poisson rate must be >= 0");
    constexpr double kTailMass = 1e-15;

    const std::uint64_t cut = poisson_truncation(zeta, dist.max_support() + 1, kTailMass);
    std::size_t next = 0;  // cursor into the ascending support
    double total = 0.0;
    for (std::uint64_t k = 0; k < cut; ++k) {
        double wk = 0.0;
        if (next < dist.weights.size() && dist.weights[next].first == k)
            wk = to_double(dist.weights[next++].second);
        total += std::abs(wk - poisson_pmf(zeta, k));
    }
    // certified remainder, added so the result upper-bounds the infinite sum
    if (zeta > 0) total += poisson_tail_bound(zeta, cut);
    return total;
}

double chen_stein_bound_zero_sums(std::int64_t L, int N, const BigInt& M) {
    double mu = expected_zero_sums(L, N, M);
    return 4.0 * (-std::expm1(-mu)) * to_double(Rational(1, M));
}

double chen_stein_bound_wagner(std::int64_t L, int n, int m) {
    if (m <= n)
        throw std::invalid_argument("the detected-count bound requires m > n");
    double lambda = expected_wagner_solutions(L, n, m);
    BigInt M = (BigInt(1) << m) + 1;
    int N = 1 << n;
    double mu = expected_zero_sums(L, N, M);
    return 8.0 * (-std::expm1(-lambda)) * mu * static_cast<double>(N) /
           static_cast<double>(L);
}

namespace {

struct BruteForceScan {
    const RingContext& ring;
    int rows;
    int cols;
    int depth = 0;  // tree levels when counting detected solutions
    std::vector<std::int64_t> cells;      // row-major matrix values
    std::vector<int> tuple;               // odometer over rows, one digit per column
    std::vector<std::int64_t> scratch;    // tree evaluation buffer

    BruteForceScan(const RingContext& r, int L, int N, Statistic stat)
        : ring(r), rows(L), cols(N),
          cells(static_cast<std::size_t>(L) * N, 0),
          tuple(static_cast<std::size_t>(N), 0),
          scratch(static_cast<std::size_t>(N), 0) {
        if (stat == Statistic::WagnerSolutions) {
            if (!ring.is_dyadic())
                throw std::invalid_argument("detected-solution statistic requires M = 2^m + 1");
            if (cols < 2 || !std::has_single_bit(static_cast<std::size_t>(cols)))
                throw std::invalid_argument("detected-solution statistic requires N = 2^n");
            depth = std::countr_zero(static_cast<std::size_t>(cols));
            if (depth > *ring.dyadic_exponent())
                throw std::invalid_argument("tree depth n exceeds the window exponent m");
        }
    }

    std::int64_t cell(int i, int j) const { return cells[static_cast<std::size_t>(i) * cols + j]; }

    // One tuple through the pair-merge tree; -1 encodes the terminal symbol.
    bool tree_survives_at_zero() {
        const std::int64_t modulus = ring.modulus();
        const std::int64_t half = modulus / 2;
        for (int j = 0; j < cols; ++j)
            scratch[static_cast<std::size_t>(j)] = cell(tuple[static_cast<std::size_t>(j)], j);
        int width = cols;
        for (int h = 1; h <= depth; ++h) {
            std::int64_t bound = ring.window_bound(h);
            width /= 2;
            for (int j = 0; j < width; ++j) {
                std::int64_t s = scratch[2 * j] + scratch[2 * j + 1];
                if (s > half) s -= modulus;
                if (s < -half) s += modulus;
                if (s < -bound || s > bound) return false;
                scratch[static_cast<std::size_t>(j)] = s;
            }
        }
        return scratch[0] == 0;
    }

    bool tuple_sums_to_zero() {
        const std::int64_t modulus = ring.modulus();
        std::int64_t s = 0;
        for (int j = 0; j < cols; ++j) s += cell(tuple[static_cast<std::size_t>(j)], j);
        s %= modulus;
        return s == 0;
    }

    std::uint64_t statistic(Statistic stat) {
        std::fill(tuple.begin(), tuple.end(), 0);
        std::uint64_t hits = 0;
        while (true) {
            if (stat == Statistic::WagnerSolutions ? tree_survives_at_zero()
                                                   : tuple_sums_to_zero())
                ++hits;
            int j = cols - 1;
            while (j >= 0 && ++tuple[static_cast<std::size_t>(j)] == rows) {
                tuple[static_cast<std::size_t>(j)] = 0;
                --j;
            }
            if (j < 0) return hits;
        }
    }
};

}  // namespace

CountDistribution exact_distribution(int L, int N, const RingContext& ring, Statistic stat,
                                     std::uint64_t budget) {
    if (L < 2 || N < 2) throw std::invalid_argument("enumeration requires L >= 2 and N >= 2");
    const unsigned cells = static_cast<unsigned>(L) * static_cast<unsigned>(N);
    u128 total;
    try {
        total = checked_pow_u128(static_cast<std::uint64_t>(ring.modulus()), cells);
    } catch (const std::overflow_error&) {
        throw std::invalid_argument("enumeration budget exceeded: M^(L*N) overflows");
    }
    if (total > budget)
        throw std::invalid_argument("enumeration budget exceeded: M^(L*N) = " + to_string(total) +
                                    " > " + std::to_string(budget));

    BruteForceScan scan(ring, L, N, stat);
    u128 tuple_count = checked_pow_u128(static_cast<std::uint64_t>(L), static_cast<unsigned>(N));
    std::vector<std::uint64_t> histogram;
    std::map<std::uint64_t, std::uint64_t> overflow_histogram;
    const bool dense = tuple_count <= (u128{1} << 24);
    if (dense) histogram.assign(static_cast<std::size_t>(tuple_count) + 1, 0);

    // window values addressed by odometer digit
    std::vector<std::int64_t> digit_value(static_cast<std::size_t>(ring.modulus()));
    for (std::int64_t d = 0; d < ring.modulus(); ++d)
        digit_value[static_cast<std::size_t>(d)] = ring.canonical(d).value;

    std::vector<std::uint32_t> digits(cells, 0);
    auto advance = [&]() -> bool {
        unsigned c = cells;
        while (c > 0) {
            --c;
            if (++digits[c] < static_cast<std::uint32_t>(ring.modulus())) {
                scan.cells[c] = digit_value[digits[c]];
                return true;
            }
            digits[c] = 0;
            scan.cells[c] = digit_value[0];
        }
        return false;  // wrapped past the last matrix
    };
    do {
        std::uint64_t value = scan.statistic(stat);
        if (dense)
            ++histogram[value];
        else
            ++overflow_histogram[value];
    } while (advance());

    CountDistribution dist;
    dist.kind = CountDistribution::Kind::Exact;
    BigInt total_big = (BigInt(static_cast<std::uint64_t>(total >> 64)) << 64) +
                       BigInt(static_cast<std::uint64_t>(total));
    Rational total_q(total_big);
    if (dense) {
        for (std::uint64_t k = 0; k < histogram.size(); ++k)
            if (histogram[k] > 0)
                dist.weights.emplace_back(k, Rational(BigInt(histogram[k])) / total_q);
    } else {
        for (const auto& [k, c] : overflow_histogram)
            dist.weights.emplace_back(k, Rational(BigInt(c)) / total_q);
    }
    return dist;
}

std::uint64_t replicate_seed(std::uint64_t seed, std::uint64_t index) {
    // SplitMix64 finalizer over an injective affine map of the index.
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

MonteCarloResult monte_carlo(int L, int N, const RingContext& ring, Statistic stat,
                             std::uint64_t replicates, std::uint64_t seed, int threads) {
    if (replicates < 1) throw std::invalid_argument("Monte Carlo needs at least one replicate");
    if (threads < 1) throw std::invalid_argument("thread count must be >= 1");
    if (stat == Statistic::WagnerSolutions)
        BruteForceScan(ring, L, N, stat);  // surface parameter errors before spawning work

    using Histogram = std::map<std::uint64_t, std::uint64_t>;
    auto run_range = [&](std::uint64_t lo, std::uint64_t hi, Histogram& hist) {
        for (std::uint64_t r = lo; r < hi; ++r) {
            Instance inst = sample_instance(L, N, ring, replicate_seed(seed, r));
            u128 value = stat == Statistic::WagnerSolutions ? count_wagner(inst)
                                                            : count_zero(inst);
            ++hist[static_cast<std::uint64_t>(value)];
        }
    };

    std::vector<Histogram> partial(static_cast<std::size_t>(threads));
    if (threads == 1) {
        run_range(0, replicates, partial[0]);
    } else {
        std::vector<std::thread> pool;
        std::uint64_t chunk = (replicates + threads - 1) / threads;
        for (int t = 0; t < threads; ++t) {
            std::uint64_t lo = std::min<std::uint64_t>(t * chunk, replicates);
            std::uint64_t hi = std::min<std::uint64_t>(lo + chunk, replicates);
            pool.emplace_back(run_range, lo, hi, std::ref(partial[static_cast<std::size_t>(t)]));
        }
        for (auto& th : pool) th.join();
    }

    // merge in thread order; counts are associative so any split gives the same result
    Histogram merged;
    for (const auto& h : partial)
        for (const auto& [k, c] : h) merged[k] += c;

    CountDistribution dist;
    dist.kind = CountDistribution::Kind::Empirical;
    dist.sample_size = replicates;
    for (const auto& [k, c] : merged)
        dist.weights.emplace_back(k, Rational(BigInt(c), BigInt(replicates)));

    MonteCarloSummary summary;
    summary.replicates = replicates;
    double mean = 0;
    for (const auto& [k, c] : merged)
        mean += static_cast<double>(k) * (static_cast<double>(c) / static_cast<double>(replicates));
    double ss = 0;
    for (const auto& [k, c] : merged) {
        double d = static_cast<double>(k) - mean;
        ss += d * d * static_cast<double>(c);
    }
    summary.mean = mean;
    summary.variance = replicates > 1 ? ss / static_cast<double>(replicates - 1) : 0.0;
    summary.std_error = std::sqrt(summary.variance / static_cast<double>(replicates));
    return {std::move(dist), summary};
}

}  // namespace gbp
