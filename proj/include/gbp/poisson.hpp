#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>

namespace gbp {

// Poisson(zeta) pmf at k, computed in log space for stability. zeta = 0 is the
// point mass at zero.
inline double poisson_pmf(double zeta, std::uint64_t k) {
    if (!(zeta >= 0)) throw std::invalid_argument("Poisson rate must be >= 0");
    if (zeta == 0.0) return k == 0 ? 1.0 : 0.0;
    double kd = static_cast<double>(k);
    return std::exp(kd * std::log(zeta) - zeta - std::lgamma(kd + 1.0));
}

// Geometric bound on the tail mass sum_{j >= k} pmf(j), valid past the mode
// (k > zeta): consecutive terms shrink by at least zeta / (k + 1).
inline double poisson_tail_bound(double zeta, std::uint64_t k) {
    double q = zeta / (static_cast<double>(k) + 1.0);
    return poisson_pmf(zeta, k) / (1.0 - q);
}

// Truncation point for tail sums: the smallest k >= min_k past the mode whose
// certified tail bound falls below tail_mass.
inline std::uint64_t poisson_truncation(double zeta, std::uint64_t min_k, double tail_mass) {
    if (!(zeta >= 0)) throw std::invalid_argument("Poisson rate must be >= 0");
    if (zeta == 0.0) return min_k;
    std::uint64_t k = std::max(min_k, static_cast<std::uint64_t>(zeta) + 1);
    while (poisson_tail_bound(zeta, k) >= tail_mass) ++k;
    return k;
}

}  // namespace gbp
