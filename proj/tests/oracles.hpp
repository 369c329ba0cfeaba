#pragma once

// Test-only reference implementations, kept deliberately naive and independent
// of the library's production paths.

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

#include "gbp/instance.hpp"
#include "gbp/rational.hpp"

namespace gbp::oracle {

// Tuple-by-tuple census: walks all L^N index vectors.
std::map<std::int64_t, std::uint64_t> brute_census(const Instance& inst);
std::uint64_t brute_count_zero(const Instance& inst);

// Tuple-by-tuple detected-solution count with its own recursive tree walk.
std::uint64_t brute_count_wagner(const Instance& inst);

// Level distributions from the definition: full-window tables over all of
// D_{m-i} (no symmetry shortcut), by modular pair convolution with window
// filtering. Index j runs over the whole window.
std::vector<std::map<std::int64_t, Rational>> full_window_tables(int n, int m);

// Adaptive Simpson quadrature.
double integrate(const std::function<double(double)>& f, double a, double b, double tol);

// Limit polynomial values by numerical integration. `nested` evaluates every
// predecessor level by quadrature too (fully independent, exponential in n);
// otherwise the predecessor is the symbolic polynomial and only the final
// integration step is numeric.
double phi_numeric(int n, double x, bool nested);

}  // namespace gbp::oracle
